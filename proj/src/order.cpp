#include "jetpva/order.hpp"

namespace jetpva {

int MonomialOrder::rank(const VarId& v) const {
    for (size_t i = 0; i < precedence_.size(); ++i)
        if (precedence_[i] == v) return static_cast<int>(i);
    return static_cast<int>(precedence_.size());
}

std::vector<VarId> MonomialOrder::sort_by_precedence(std::vector<VarId> vars) const {
    std::sort(vars.begin(), vars.end(), [this](const VarId& a, const VarId& b) {
        int ra = rank(a), rb = rank(b);
        if (ra != rb) return ra < rb;
        return a < b; // unlisted variables: smaller VarId = higher precedence
    });
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

int MonomialOrder::lex_cmp(const std::vector<VarId>& vars, const Monomial& a,
                           const Monomial& b) {
    for (const auto& v : vars) {
        int ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::degrevlex_cmp(const std::vector<VarId>& vars, const Monomial& a,
                                 const Monomial& b, bool graded) {
    if (graded) {
        int da = 0, db = 0;
        for (const auto& v : vars) { da += a.exponent(v); db += b.exponent(v); }
        if (da != db) return da > db ? 1 : -1;
    }
    // revlex tie-break: scan from the lowest-precedence variable; the
    // monomial with the smaller exponent there is the bigger one.
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        int ea = a.exponent(*it), eb = b.exponent(*it);
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a == b) return 0;
    std::vector<VarId> vars;
    for (const auto& [v, e] : a.exponents()) vars.push_back(v);
    for (const auto& [v, e] : b.exponents()) vars.push_back(v);
    vars = sort_by_precedence(std::move(vars));

    switch (kind_) {
        case Kind::Lex:
            return lex_cmp(vars, a, b);
        case Kind::DegRevLex:
            return degrevlex_cmp(vars, a, b, true);
        case Kind::Weighted: {
            long wa = a.weighted_degree([this](const VarId& v) { return weight_of(v); });
            long wb = b.weighted_degree([this](const VarId& v) { return weight_of(v); });
            if (wa != wb) return wa > wb ? 1 : -1;
            return degrevlex_cmp(vars, a, b, true);
        }
        case Kind::Elim: {
            std::vector<VarId> block, rest;
            for (const auto& v : vars)
                (elim_block_.count(v) ? block : rest).push_back(v);
            if (int c = degrevlex_cmp(block, a, b, true)) return c;
            return degrevlex_cmp(rest, a, b, true);
        }
    }
    return 0;
}

} // namespace jetpva
