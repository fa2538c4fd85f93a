#ifndef JETPVA_LIEALG_HPP
#define JETPVA_LIEALG_HPP

#include <array>
#include <map>
#include <optional>

#include "jetpva/vpa.hpp"

namespace jetpva {

// A Lie algebra presented through its Lie-Poisson structure: coordinates on
// the dual space, linear brackets, and generators of the invariant ring.
struct LieAlgebraData {
    RingPresentation ring;               // free ring, linear Poisson matrix
    std::vector<Polynomial> invariants;  // Casimir generators p_1..p_l
    std::optional<std::array<Polynomial, 3>> sl2_triple; // (e, h, f)
};

// sl2: basis (e,h,f), {h,e}=2e, {h,f}=-2f, {e,f}=h, Casimir
// Omega = e f + h^2/4, weights for the regular nilpotent e:4, h:2, f:0.
LieAlgebraData make_sl2();

// Coordinates (p,q) with {p,q} = 1 and no relations.
RingPresentation make_symplectic_plane();

// <p_1, ..., p_l>: common zero locus of the invariants.
Ideal nilpotent_cone(const LieAlgebraData& L);

// A point of the level-n jet space of the adjoint quotient: target values
// xi_i^(j) for T^j p_i, keyed by (invariant index i, jet order j).
struct FiberSpec {
    int level = 0;
    std::map<std::pair<int, int>, Rational> xi; // missing keys mean 0

    Rational at(int i, int j) const {
        auto it = xi.find({i, j});
        return it == xi.end() ? Rational(0) : it->second;
    }
};

// <T^j p_i - xi_i^(j), 0 <= j <= n> in the jet ring.
Ideal fiber_ideal(const LieAlgebraData& L, const JetRing& jr, const FiberSpec& spec);

// The slice through the regular nilpotent f in sl2: points f + s e,
// coordinate ring Q[s] with zero bracket and weight 4 on s.
struct SlicePresentation {
    RingPresentation ring;                            // one variable s
    std::map<VarId, Polynomial> restriction;          // e -> s, h -> 0, f -> 1
    std::vector<Polynomial> restricted_invariants;    // psi = [s]
};

SlicePresentation regular_slice_sl2();

// Substitution images at jet level: x_(-j-1) -> (T^j of the base image)/j!
// computed in the slice jet ring, which sends e_(-j-1) -> s_(-j-1),
// kills every h variable, and sends f -> 1, f_(-j-1) -> 0 for j >= 1.
std::map<VarId, Polynomial> jet_restriction(const SlicePresentation& S,
                                            const JetRing& slice_jr, int source_level);

// Restriction of a full-algebra jet polynomial to the slice jet ring.
Polynomial restrict_to_slice(const SlicePresentation& S, const JetRing& slice_jr,
                             const Polynomial& p);

struct CenterIsoReport {
    std::map<long, int> center_dims;    // graded by total degree
    std::map<long, int> invariant_dims; // span of monomials in T^j psi_i
    bool invariants_contained = false;  // invariant span inside the center
    bool center_is_everything = false;  // center = full truncation (zero bracket)
    bool equal = false;                 // graded dimensions agree
};

// Compares the degree-d truncation of the vertex Poisson center of the
// level-n slice jet ring with the span of monomials in the restricted
// invariants and their T-derivatives.
CenterIsoReport center_isomorphism_check(const SlicePresentation& S, int n, long d);

} // namespace jetpva

#endif
