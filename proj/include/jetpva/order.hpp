#ifndef JETPVA_ORDER_HPP
#define JETPVA_ORDER_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "jetpva/monomial.hpp"

namespace jetpva {

// Total monomial order compatible with multiplication.
//
// Kinds:
//   degrevlex  - graded reverse lexicographic (the default)
//   lex        - pure lexicographic
//   weighted   - compare weighted degree first, ties broken by degrevlex
//   elim       - block order eliminating a set of variables: degrevlex on
//                the eliminated block, ties broken by degrevlex on the rest
//
// Variable precedence: the explicit `precedence` list (highest first) when
// given; variables not listed come after it, smaller VarId = higher
// precedence. This makes every comparison deterministic.
class MonomialOrder {
public:
    enum class Kind { DegRevLex, Lex, Weighted, Elim };

    MonomialOrder() : kind_(Kind::DegRevLex) {}

    static MonomialOrder degrevlex(std::vector<VarId> precedence = {}) {
        MonomialOrder o;
        o.kind_ = Kind::DegRevLex;
        o.precedence_ = std::move(precedence);
        return o;
    }
    static MonomialOrder lex(std::vector<VarId> precedence = {}) {
        MonomialOrder o;
        o.kind_ = Kind::Lex;
        o.precedence_ = std::move(precedence);
        return o;
    }
    static MonomialOrder weighted(std::map<VarId, long> weights,
                                  std::vector<VarId> precedence = {}) {
        MonomialOrder o;
        o.kind_ = Kind::Weighted;
        o.weights_ = std::move(weights);
        o.precedence_ = std::move(precedence);
        return o;
    }
    static MonomialOrder elim(std::set<VarId> block,
                              std::vector<VarId> precedence = {}) {
        MonomialOrder o;
        o.kind_ = Kind::Elim;
        o.elim_block_ = std::move(block);
        o.precedence_ = std::move(precedence);
        return o;
    }

    Kind kind() const { return kind_; }
    const std::map<VarId, long>& weights() const { return weights_; }

    // >0 if a > b, 0 if equal, <0 if a < b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    // Variables of the union of a and b, highest precedence first.
    std::vector<VarId> sort_by_precedence(std::vector<VarId> vars) const;

    long weight_of(const VarId& v) const {
        auto it = weights_.find(v);
        return it == weights_.end() ? 0 : it->second;
    }

private:
    int rank(const VarId& v) const;
    static int lex_cmp(const std::vector<VarId>& vars, const Monomial& a, const Monomial& b);
    static int degrevlex_cmp(const std::vector<VarId>& vars, const Monomial& a,
                             const Monomial& b, bool graded);

    Kind kind_;
    std::vector<VarId> precedence_;
    std::map<VarId, long> weights_;
    std::set<VarId> elim_block_;
};

} // namespace jetpva

#endif
