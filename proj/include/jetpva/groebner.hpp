#ifndef JETPVA_GROEBNER_HPP
#define JETPVA_GROEBNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "jetpva/polynomial.hpp"

namespace jetpva {

// Budgets for the Buchberger loop. The jet-scheme objects explode at large
// level; fail loudly rather than hang.
struct Budget {
    long max_spair_reductions = 50000;
    int max_total_degree = 40;
};

// Ideal with a lazily computed reduced Groebner basis. The generator list
// never contains the zero polynomial. The cached basis is the unique
// reduced (monic) Groebner basis under `order`, sorted ascending by
// leading monomial.
class Ideal {
public:
    Ideal() = default;
    Ideal(std::vector<Polynomial> gens, MonomialOrder order = MonomialOrder{},
          Budget budget = Budget{});

    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }
    const Budget& budget() const { return budget_; }

    // Reduced Groebner basis; computed once, then cached. Throws ResourceLimit.
    const std::vector<Polynomial>& groebner_basis() const;
    bool has_cached_basis() const { return gb_.has_value(); }

    // Remainder of p on division by the reduced basis.
    Polynomial normal_form(const Polynomial& p) const;

    bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
    bool is_unit_ideal() const;
    bool is_zero_ideal() const { return gens_.empty(); }

    // One generator per line, canonical polynomial text, basis order.
    std::string serialize_basis() const;

private:
    std::vector<Polynomial> gens_;
    MonomialOrder order_;
    Budget budget_;
    mutable std::optional<std::vector<Polynomial>> gb_;
};

// Remainder of p on division by divisors under ord (not necessarily a GB).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& ord);

// Reduced Groebner basis of gens under ord. Throws ResourceLimit on budget
// overflow.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                   const Budget& budget = Budget{});

bool member(const Polynomial& p, const Ideal& I);

// p in sqrt(I), decided by the Rabinowitsch trick: 1 in I + <1 - t*p> for a
// fresh variable t.
bool radical_member(const Polynomial& p, const Ideal& I);

// Compares reduced bases; J's generators are recomputed under I's order.
bool ideal_equal(const Ideal& I, const Ideal& J);

// Generators of I ∩ k[keep], via a block elimination order.
Ideal eliminate(const Ideal& I, const std::set<VarId>& keep);

// Ideal of top-weight homogeneous components of all elements of I:
// Groebner basis under the weighted order, then initial forms of the basis.
Ideal initial_ideal(const Ideal& I, const std::map<VarId, long>& weights);

// Ideal generated by all k x k minors of M.
Ideal minors_ideal(const std::vector<std::vector<Polynomial>>& M, int k,
                   MonomialOrder order = MonomialOrder{});

// Determinant by cofactor expansion; fine at desk scale.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& M);

} // namespace jetpva

#endif
