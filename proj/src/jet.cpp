#include "jetpva/jet.hpp"

namespace jetpva {

int RingPresentation::var_index(const VarId& v) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i].base == v.base) return static_cast<int>(i);
    return -1;
}

JetRing::JetRing(RingPresentation base, int level) : base_(std::move(base)), level_(level) {
    for (const auto& v : base_.vars)
        for (int j = 0; j <= level_; ++j) jet_vars_.push_back(v.at_level(j));

    // T^j f_i for 0 <= j <= n. The truncation convention T x_(-n-1) = 0 is
    // harmless here: f_i lives at level 0, so intermediate terms of T^j f_i
    // never reach level n+1.
    std::vector<Polynomial> rels;
    for (const auto& f : base_.relations) {
        Polynomial g = f;
        for (int j = 0; j <= level_; ++j) {
            rels.push_back(g);
            g = T(g);
        }
    }
    jet_relations_ = Ideal(std::move(rels));

    if (base_.has_weights()) {
        for (const auto& v : base_.vars) {
            long w = base_.weights.at(v);
            for (int j = 0; j <= level_; ++j) jet_weights_[v.at_level(j)] = w + j;
        }
    }
}

Polynomial JetRing::T(const Polynomial& p) const {
    // T x^i_(-j-1) = (j+1) x^i_(-j-2) for j < n, 0 at the top level.
    Polynomial r;
    for (const auto& v : p.variables()) {
        if (v.level >= level_) continue;
        r += p.derivative(v) * Rational(v.level + 1) *
             Polynomial::var(v.at_level(v.level + 1));
    }
    return r;
}

Polynomial JetRing::T_power(const Polynomial& p, int j) const {
    Polynomial r = p;
    for (int i = 0; i < j; ++i) r = T(r);
    return r;
}

Ideal JetRing::jet_ideal(const std::vector<Polynomial>& base_gens, MonomialOrder order) const {
    std::vector<Polynomial> gens;
    for (const auto& g : base_gens) {
        Polynomial h = g;
        for (int j = 0; j <= level_; ++j) {
            gens.push_back(h);
            h = T(h);
        }
    }
    return Ideal(std::move(gens), std::move(order), jet_relations_.budget());
}

Ideal JetRing::jet_ideal(const Ideal& base_ideal) const {
    return jet_ideal(base_ideal.generators(), base_ideal.order());
}

JetPoint JetRing::iota_point(const std::map<VarId, Rational>& base_point) const {
    for (const auto& f : base_.relations) {
        if (f.evaluate(base_point) != 0)
            throw PointNotOnVariety("base point does not satisfy relation " + f.str());
    }
    JetPoint p;
    for (const auto& v : base_.vars) {
        auto it = base_point.find(v);
        if (it == base_point.end())
            throw MissingAssignment("base point misses coordinate " + v.str());
        p.coords[v] = it->second;
        for (int j = 1; j <= level_; ++j) p.coords[v.at_level(j)] = 0;
    }
    return p;
}

Polynomial JetRing::negative_mode(const Polynomial& a, int m, const Polynomial& b) const {
    int depth = std::max(a.max_jet_level(), b.max_jet_level());
    if (depth + m > level_)
        throw HeadroomExceeded("negative mode " + std::to_string(m) +
                               " on operands of jet depth " + std::to_string(depth) +
                               " needs level >= " + std::to_string(depth + m));
    Rational fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    return T_power(a, m) * (1 / fact) * b;
}

JetPoint truncate_point(const JetPoint& p, int n) {
    JetPoint q;
    for (const auto& [v, c] : p.coords)
        if (v.level <= n) q.coords[v] = c;
    return q;
}

} // namespace jetpva
