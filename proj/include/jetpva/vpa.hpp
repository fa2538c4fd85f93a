#ifndef JETPVA_VPA_HPP
#define JETPVA_VPA_HPP

#include <optional>
#include <string>
#include <vector>

#include "jetpva/jet.hpp"

namespace jetpva {

// {a, b} on the base ring, from the bracket matrix of the presentation:
// {a, b} = sum_ij (da/dx^i)(db/dx^j) {x^i, x^j}.
Polynomial poisson_bracket(const RingPresentation& R, const Polynomial& a,
                           const Polynomial& b);

// Jacobi identity of the bracket matrix modulo the relations, plus the
// condition that the relations generate a Poisson ideal.
bool jacobi_check(const RingPresentation& R);

// Closed formula for x^i_(k)(T^q x^j):
//   q!/(q-k)! T^(q-k){x^i, x^j}   if q >= k,
//   0                             otherwise.
Polynomial bracket_on_jet_vars(const JetRing& jr, int i, int k, int j, int q);

// The mode operator a_(k), k >= 0, applied to b in the jet ring.
// For a base-ring source this acts as a derivation on jet variables via the
// closed formula; for a general source it recurses through the right
// Leibniz rule with a_(-i-1)c = (T^i a / i!) c, and through the iterated
// translation rule (T^j a)_(m) = (-1)^j m!/(m-j)! a_(m-j).
// Throws HeadroomExceeded when the truncation could corrupt the result.
Polynomial apply_mode(const JetRing& jr, const Polynomial& source, int mode,
                      const Polynomial& b);

struct ChiralCounterexample {
    VarId source;
    int mode;
    Polynomial generator;
    Polynomial image; // the mode application that escapes the ideal
};

// Is I stable under all x^i_(k), i base variable, 0 <= k <= n, modulo the
// jet relations? Checking generators of I and base-variable sources
// suffices: each a_(k) is a derivation, and stability under base sources
// implies stability under all sources.
std::optional<ChiralCounterexample> is_chiral_ideal(const JetRing& jr, const Ideal& I);

// Positive grading used for the degree-truncated linear solves.
// All-ones = total degree; jet rings with positive weights may grade by them.
std::map<VarId, long> total_degree_grading(const JetRing& jr);

// Basis of {z, wdeg(z) <= d, z in span of normal forms mod quotient_ideal +
// jet relations : x^i_(k) z in quotient_ideal + jet relations for all i, k}.
std::vector<Polynomial> vp_center_upto(const JetRing& jr, const Ideal& quotient_ideal,
                                       long d, const std::map<VarId, long>& grading);

struct CoreResult {
    std::vector<Polynomial> basis;
    bool converged = false;
    int iterations = 0;
};

// Degree-d truncation of the biggest chiral Poisson ideal inside I:
// fixed point of J -> {x in J : x^i_(k) x in J + jet relations}, starting
// from the degree-<=d slice of I. Reports the last iterate when max_iter
// is reached without stabilizing.
CoreResult chiral_core_upto(const JetRing& jr, const Ideal& I, long d, int max_iter,
                            const std::map<VarId, long>& grading);

struct AxiomFailure {
    std::string a, b, c;
    std::string lhs, rhs;
};

struct AxiomReport {
    std::string axiom;
    int samples = 0;
    std::vector<AxiomFailure> failures;
    bool passed() const { return failures.empty(); }
};

// Randomized executable check of the five vertex-Poisson axioms on the jet
// ring, modulo the jet relations, with headroom-respecting sampling.
std::vector<AxiomReport> pva_axiom_suite(const JetRing& jr, int samples,
                                         unsigned long seed);

// Span helpers for the degree-truncated subspaces (shared with tests).
std::vector<Monomial> monomials_up_to(const std::vector<VarId>& vars,
                                      const std::map<VarId, long>& grading, long d);

} // namespace jetpva

#endif
