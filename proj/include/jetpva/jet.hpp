#ifndef JETPVA_JET_HPP
#define JETPVA_JET_HPP

#include <map>
#include <optional>
#include <vector>

#include "jetpva/groebner.hpp"
#include "jetpva/polynomial.hpp"

namespace jetpva {

// Presentation of an affine scheme Spec k[x^1..x^N]/(f_1..f_r), optionally
// carrying a Poisson structure matrix and a weight grading on the variables.
struct RingPresentation {
    std::vector<VarId> vars;                 // base variables, jet level 0
    std::vector<Polynomial> relations;       // in the base variables
    // entry (i,j) = {x^i, x^j}; empty if no Poisson structure
    std::vector<std::vector<Polynomial>> poisson;
    std::map<VarId, long> weights;           // optional grading, >= 0

    bool has_poisson() const { return !poisson.empty(); }
    bool has_weights() const { return !weights.empty(); }
    int var_index(const VarId& v) const;
};

// Coordinates of a point on a jet scheme.
struct JetPoint {
    std::map<VarId, Rational> coords;
};

// The level-n jet ring of a presented base ring: variables x^i_(-j-1) for
// j <= n, relations T^j f_i, derived weights deg x^i_(-j-1) = deg x^i + j.
class JetRing {
public:
    JetRing(RingPresentation base, int level);

    const RingPresentation& base() const { return base_; }
    int level() const { return level_; }
    const std::vector<VarId>& jet_vars() const { return jet_vars_; }
    const Ideal& jet_relations() const { return jet_relations_; }
    const std::map<VarId, long>& jet_weights() const { return jet_weights_; }

    // Truncated derivation: T x^i_(-j) = j x^i_(-j-1), T x^i_(-n-1) = 0,
    // extended as a derivation.
    Polynomial T(const Polynomial& p) const;
    Polynomial T_power(const Polynomial& p, int j) const;

    // The ideal of J_n V(I) for I in the base variables: generated by
    // T^j g, 0 <= j <= n, over the generators g of I.
    Ideal jet_ideal(const Ideal& base_ideal) const;
    Ideal jet_ideal(const std::vector<Polynomial>& base_gens,
                    MonomialOrder order = MonomialOrder{}) const;

    // Constant-arc embedding iota_n of a base point. Throws PointNotOnVariety.
    JetPoint iota_point(const std::map<VarId, Rational>& base_point) const;

    // Negative-mode product a_(-m-1) b = (T^m a / m!) * b.
    // Throws HeadroomExceeded if the truncation would corrupt the result.
    Polynomial negative_mode(const Polynomial& a, int m, const Polynomial& b) const;

private:
    RingPresentation base_;
    int level_;
    std::vector<VarId> jet_vars_;
    Ideal jet_relations_;
    std::map<VarId, long> jet_weights_;
};

// Restriction of a level-m point to level n <= m.
JetPoint truncate_point(const JetPoint& p, int n);

} // namespace jetpva

#endif
