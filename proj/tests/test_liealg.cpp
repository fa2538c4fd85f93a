#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "jetpva/liealg.hpp"

using namespace jetpva;

namespace {

Polynomial p(const std::string& s) { return parse_polynomial(s); }

std::map<VarId, long> unit_weights(const JetRing& jr) {
    std::map<VarId, long> w;
    for (const auto& v : jr.jet_vars()) w[v] = 1;
    return w;
}

} // namespace

TEST_CASE("sl2 fixture") {
    auto L = make_sl2();
    CHECK(jacobi_check(L.ring));
    REQUIRE(L.invariants.size() == 1);
    CHECK(L.invariants[0] == p("e*f + 1/4*h^2"));

    // the invariant is a Casimir
    for (const auto& v : L.ring.vars)
        CHECK(poisson_bracket(L.ring, Polynomial::var(v), L.invariants[0]).is_zero());

    // Slodowy weights, and their jet extension
    CHECK(L.ring.weights.at(VarId{"e", 0}) == 4);
    CHECK(L.ring.weights.at(VarId{"h", 0}) == 2);
    CHECK(L.ring.weights.at(VarId{"f", 0}) == 0);
    JetRing jr(L.ring, 1);
    CHECK(jr.jet_weights().at(VarId{"e", 1}) == 5);

    // the invariant is homogeneous of weight 4
    CHECK(L.invariants[0].weighted_degree(L.ring.weights) == 4);
    CHECK(L.invariants[0].top_weight_form(L.ring.weights) == L.invariants[0]);
}

TEST_CASE("scaling the invariant does not change its ideals") {
    auto L = make_sl2();
    Ideal a({L.invariants[0]});
    Ideal b({L.invariants[0] * rational(-7, 3)});
    CHECK(ideal_equal(a, b));
}

TEST_CASE("nilpotent cone") {
    auto L = make_sl2();
    Ideal N = nilpotent_cone(L);
    CHECK(ideal_equal(N, Ideal({p("4*e*f + h^2")})));

    // its jet ideal is chiral
    JetRing jr(L.ring, 1);
    CHECK(!is_chiral_ideal(jr, jr.jet_ideal(N)).has_value());

    // the origin is nilpotent
    JetRing jr0(L.ring, 0);
    JetPoint o = jr0.iota_point({{VarId{"e", 0}, 0}, {VarId{"h", 0}, 0}, {VarId{"f", 0}, 0}});
    for (const auto& g : N.generators()) CHECK(g.evaluate(o.coords) == 0);
}

TEST_CASE("fiber ideals") {
    auto L = make_sl2();
    Polynomial Om = L.invariants[0];

    JetRing jr0(L.ring, 0);
    FiberSpec zero0;
    CHECK(ideal_equal(fiber_ideal(L, jr0, zero0), nilpotent_cone(L)));

    JetRing jr1(L.ring, 1);
    FiberSpec c1;
    c1.level = 1;
    c1.xi[{1, 0}] = 5;
    Ideal I = fiber_ideal(L, jr1, c1);
    CHECK(ideal_equal(I, Ideal({Om - Polynomial(5), jr1.T(Om)})));

    // xi = 0 fibers coincide with the jet ideal of the cone, levels <= 2
    for (int n = 0; n <= 2; ++n) {
        JetRing jr(L.ring, n);
        FiberSpec z;
        z.level = n;
        CHECK(ideal_equal(fiber_ideal(L, jr, z), jr.jet_ideal(nilpotent_cone(L))));
    }

    // fibers are chiral for arbitrary xi
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int t = 0; t < 5; ++t) {
        FiberSpec s;
        s.level = 1;
        s.xi[{1, 0}] = val(rng);
        s.xi[{1, 1}] = val(rng);
        CHECK(!is_chiral_ideal(jr1, fiber_ideal(L, jr1, s)).has_value());
    }
}

TEST_CASE("top-weight forms of fibers forget the fiber point") {
    auto L = make_sl2();
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 2);
    for (int n = 0; n <= 1; ++n) {
        JetRing jr(L.ring, n);
        FiberSpec zero;
        zero.level = n;
        Ideal I0 = fiber_ideal(L, jr, zero);
        auto w = unit_weights(jr);
        Ideal I0w(I0.generators(), MonomialOrder::weighted(w));
        for (int t = 0; t < 5; ++t) {
            FiberSpec s;
            s.level = n;
            for (int j = 0; j <= n; ++j) s.xi[{1, j}] = rational(num(rng), den(rng));
            Ideal I = fiber_ideal(L, jr, s);
            CHECK(ideal_equal(initial_ideal(I, w), I0w));
        }
    }
}

TEST_CASE("regular slice of sl2") {
    auto S = regular_slice_sl2();
    CHECK(S.ring.vars.size() == 1);
    CHECK(S.ring.poisson[0][0].is_zero());
    CHECK(S.restricted_invariants[0] == p("s"));

    // restriction at base level: e -> s, h -> 0, f -> 1
    auto L = make_sl2();
    JetRing sjr0(S.ring, 0);
    CHECK(restrict_to_slice(S, sjr0, L.invariants[0]) == p("s"));
    CHECK(restrict_to_slice(S, sjr0, p("h^2 + f")) == Polynomial(1));

    // restriction at jet level 1: e_(-2) -> s_(-2), h_(-2) -> 0, f_(-2) -> 0
    JetRing sjr1(S.ring, 1);
    auto img = jet_restriction(S, sjr1, 1);
    CHECK(img.at(VarId{"e", 1}) == p("s_(-2)"));
    CHECK(img.at(VarId{"h", 1}).is_zero());
    CHECK(img.at(VarId{"f", 1}).is_zero());

    // T Omega restricts to T s
    JetRing jr1(L.ring, 1);
    CHECK(restrict_to_slice(S, sjr1, jr1.T(L.invariants[0])) == p("s_(-2)"));
}

TEST_CASE("Kostant: the restricted cone is the reduced point") {
    auto S = regular_slice_sl2();
    auto L = make_sl2();
    JetRing sjr0(S.ring, 0);
    Ideal N = nilpotent_cone(L);
    std::vector<Polynomial> restricted;
    for (const auto& g : N.generators())
        restricted.push_back(restrict_to_slice(S, sjr0, g));
    CHECK(ideal_equal(Ideal(restricted), Ideal({p("s")})));
}

TEST_CASE("slice center is the full polynomial truncation") {
    auto S = regular_slice_sl2();
    JetRing jr(S.ring, 1);
    auto grading = total_degree_grading(jr);
    auto center = vp_center_upto(jr, Ideal{}, 2, grading);
    CHECK(center.size() == monomials_up_to(jr.jet_vars(), grading, 2).size());
}

TEST_CASE("center isomorphism report") {
    auto S = regular_slice_sl2();
    auto rep = center_isomorphism_check(S, 1, 3);
    CHECK(rep.equal);
    CHECK(rep.invariants_contained);
    CHECK(rep.center_is_everything);

    // graded dimensions against the committed hand count
    const char* dir = std::getenv("JETPVA_GOLDEN_DIR");
    REQUIRE(dir != nullptr);
    std::ifstream in(std::string(dir) + "/slice_center_dims_n1_d3.txt");
    REQUIRE(in.good());
    std::map<long, int> golden;
    long deg;
    int dim;
    while (in >> deg >> dim) golden[deg] = dim;
    CHECK(rep.center_dims == golden);
    CHECK(rep.invariant_dims == golden);

    // level 0 reduces to one generator s: dimensions 1,1,...,1
    auto rep0 = center_isomorphism_check(S, 0, 4);
    CHECK(rep0.equal);
    for (const auto& [d, k] : rep0.center_dims) CHECK(k == 1);
    CHECK(rep0.center_dims.size() == 5);
}

TEST_CASE("full sl2 center matches the committed hand count") {
    auto L = make_sl2();
    JetRing jr(L.ring, 1);
    auto center = vp_center_upto(jr, Ideal{}, 3, total_degree_grading(jr));

    std::map<long, int> dims;
    for (const auto& z : center) dims[*z.total_degree()] += 1;

    const char* dir = std::getenv("JETPVA_GOLDEN_DIR");
    REQUIRE(dir != nullptr);
    std::ifstream in(std::string(dir) + "/sl2_center_dims_n1_d3.txt");
    REQUIRE(in.good());
    std::map<long, int> golden;
    long deg;
    int dim;
    while (in >> deg >> dim) golden[deg] = dim;
    CHECK(dims == golden);
}
