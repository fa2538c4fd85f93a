#ifndef JETPVA_MONOMIAL_HPP
#define JETPVA_MONOMIAL_HPP

#include <map>
#include <numeric>

#include "jetpva/varid.hpp"

namespace jetpva {

// Sparse power product. No zero exponents are stored.
class Monomial {
public:
    using ExpMap = std::map<VarId, int>;

    Monomial() = default;
    explicit Monomial(ExpMap exps) : exps_(std::move(exps)) {
        for (auto it = exps_.begin(); it != exps_.end();)
            it = (it->second == 0) ? exps_.erase(it) : std::next(it);
    }
    static Monomial var(const VarId& v, int e = 1) {
        Monomial m;
        if (e != 0) m.exps_[v] = e;
        return m;
    }

    const ExpMap& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    int exponent(const VarId& v) const {
        auto it = exps_.find(v);
        return it == exps_.end() ? 0 : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }

    template <class WeightFn>
    long weighted_degree(WeightFn&& w) const {
        long d = 0;
        for (const auto& [v, e] : exps_) d += static_cast<long>(w(v)) * e;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (const auto& [v, e] : o.exps_) {
            int ne = r.exponent(v) + e;
            if (ne == 0) r.exps_.erase(v); else r.exps_[v] = ne;
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        for (const auto& [v, e] : exps_)
            if (o.exponent(v) < e) return false;
        return true;
    }

    // Precondition: o.divides(*this).
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (const auto& [v, e] : o.exps_) {
            int ne = r.exponent(v) - e;
            if (ne == 0) r.exps_.erase(v); else r.exps_[v] = ne;
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (const auto& [v, e] : b.exps_)
            if (r.exponent(v) < e) r.exps_[v] = e;
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (const auto& [v, e] : a.exps_)
            if (b.exponent(v) > 0) return false;
        return true;
    }

    // Structural order, used only as a deterministic map key.
    auto operator<=>(const Monomial&) const = default;

private:
    ExpMap exps_;
};

} // namespace jetpva

#endif
