#ifndef JETPVA_POLYNOMIAL_HPP
#define JETPVA_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jetpva/errors.hpp"
#include "jetpva/monomial.hpp"
#include "jetpva/order.hpp"
#include "jetpva/rational.hpp"

namespace jetpva {

// Sparse exact multivariate polynomial over Q. Immutable in spirit: all
// operations return new values; no zero coefficients are ever stored, so
// equality is structural.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    Polynomial(long c) : Polynomial(Rational(c)) {}
    static Polynomial var(const VarId& v, int e = 1) {
        Polynomial p;
        p.terms_[Monomial::var(v, e)] = 1;
        return p;
    }
    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool operator==(const Polynomial&) const = default;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(int e) const;

    // Degree of the zero polynomial is "minus infinity" (nullopt).
    std::optional<int> total_degree() const;
    std::optional<long> weighted_degree(const std::map<VarId, long>& w) const;

    // Sum of terms of maximal weight under w; zero for the zero polynomial.
    Polynomial top_weight_form(const std::map<VarId, long>& w) const;

    Polynomial derivative(const VarId& v) const;

    // Throws MissingAssignment if a variable of *this is unassigned.
    Rational evaluate(const std::map<VarId, Rational>& point) const;

    // Simultaneous substitution v -> image(v); variables without an image
    // stay untouched.
    Polynomial substitute(const std::map<VarId, Polynomial>& images) const;

    std::set<VarId> variables() const;
    // Largest jet level among the variables; 0 for constants.
    int max_jet_level() const;

    // Leading data with respect to an order.
    const Monomial& leading_monomial(const MonomialOrder& ord) const;
    const Rational& leading_coefficient(const MonomialOrder& ord) const;
    Polynomial monic(const MonomialOrder& ord) const;

    // Canonical text form; the bit-exact golden-file contract.
    std::string str(const MonomialOrder& ord = MonomialOrder{}) const;

private:
    void insert(const Monomial& m, const Rational& c);
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Parses the canonical grammar: rational coefficients ("3", "1/4"),
// identifiers with optional jet suffix ("x1", "x1_(-3)"), operators
// + - * ^ and parentheses. Throws ParseError.
Polynomial parse_polynomial(const std::string& text);

} // namespace jetpva

#endif
