#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jetpva/jet.hpp"

using namespace jetpva;

namespace {

const VarId X{"x", 0}, Y{"y", 0}, Z{"z", 0};

Polynomial p(const std::string& s) { return parse_polynomial(s); }

// A1 surface singularity x*y - z^2 in affine 3-space.
RingPresentation cone_ring() {
    RingPresentation R;
    R.vars = {X, Y, Z};
    R.relations = {p("x*y - z^2")};
    return R;
}

Polynomial random_jet_poly(std::mt19937_64& rng, const JetRing& jr) {
    const auto& vars = jr.jet_vars();
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 2), nt(1, 3);
    std::uniform_int_distribution<size_t> pick(0, vars.size() - 1);
    Polynomial q;
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int d = deg(rng);
        for (int i = 0; i < d; ++i) m = m * Monomial::var(vars[pick(rng)]);
        q += Polynomial::term(m, coef(rng));
    }
    return q;
}

} // namespace

TEST_CASE("jet ring layout") {
    JetRing jr(cone_ring(), 2);
    CHECK(jr.level() == 2);
    CHECK(jr.jet_vars().size() == 9); // 3 vars, levels 0..2
    CHECK(jr.jet_relations().generators().size() == 3); // T^0, T^1, T^2 of one relation

    // first derived relation, by hand:
    // T(xy - z^2) = x_(-2) y + x y_(-2) - 2 z z_(-2)
    CHECK(jr.jet_relations().generators()[1] ==
          p("x_(-2)*y + x*y_(-2) - 2*z*z_(-2)"));
}

TEST_CASE("T is the truncated translation derivation") {
    JetRing jr(cone_ring(), 2);
    CHECK(jr.T(p("x")) == p("x_(-2)"));
    CHECK(jr.T(p("x_(-2)")) == p("2*x_(-3)"));
    CHECK(jr.T(p("x_(-3)")).is_zero()); // top level
    CHECK(jr.T(Polynomial(5)).is_zero());

    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        Polynomial a = random_jet_poly(rng, jr), b = random_jet_poly(rng, jr);
        CHECK(jr.T(a * b) == jr.T(a) * b + a * jr.T(b));
        CHECK(jr.T(a + b) == jr.T(a) + jr.T(b));
    }
}

TEST_CASE("jet variables are divided powers of T") {
    // T^j x = j! x_(-j-1) while headroom lasts
    JetRing jr(cone_ring(), 3);
    Rational jfact = 1;
    Polynomial t = p("x");
    for (int j = 0; j <= 3; ++j) {
        if (j > 0) jfact *= j;
        CHECK(t == Polynomial::var(X.at_level(j)) * jfact);
        t = jr.T(t);
    }
    CHECK(t.is_zero());
}

TEST_CASE("jet weights") {
    RingPresentation R = cone_ring();
    R.weights = {{X, 2}, {Y, 2}, {Z, 2}};
    JetRing jr(R, 2);
    CHECK(jr.jet_weights().at(X) == 2);
    CHECK(jr.jet_weights().at(X.at_level(1)) == 3);
    CHECK(jr.jet_weights().at(Z.at_level(2)) == 4);

    // the derived relations are homogeneous for the derived weights
    for (const auto& g : jr.jet_relations().generators())
        CHECK(g.top_weight_form(jr.jet_weights()) == g);
}

TEST_CASE("jet ideal of a base ideal") {
    JetRing jr(cone_ring(), 1);
    Ideal J = jr.jet_ideal(std::vector<Polynomial>{p("z")});
    CHECK(J.generators().size() == 2);
    CHECK(J.contains(p("z_(-2)")));
    CHECK(!J.contains(p("x")));
}

TEST_CASE("constant arcs through base points") {
    JetRing jr(cone_ring(), 2);
    JetPoint a = jr.iota_point({{X, 1}, {Y, 4}, {Z, 2}});
    CHECK(a.coords.at(X) == 1);
    CHECK(a.coords.at(Z.at_level(1)) == 0);
    CHECK(a.coords.size() == 9);

    // every derived relation vanishes along a constant arc
    for (const auto& g : jr.jet_relations().generators())
        CHECK(g.evaluate(a.coords) == 0);

    CHECK_THROWS_AS(jr.iota_point({{X, 1}, {Y, 1}, {Z, 0}}), PointNotOnVariety);
    CHECK_THROWS_AS(jr.iota_point({{X, 0}, {Y, 0}}), MissingAssignment);

    JetPoint cut = truncate_point(a, 0);
    CHECK(cut.coords.size() == 3);
    CHECK(cut.coords.at(Y) == 4);
}

TEST_CASE("negative modes") {
    JetRing jr(cone_ring(), 2);
    // x_(-2) y = (T x) y
    CHECK(jr.negative_mode(p("x"), 1, p("y")) == p("x_(-2)*y"));
    // x_(-3) y = (T^2 x / 2) y
    CHECK(jr.negative_mode(p("x"), 2, p("y")) == p("x_(-3)*y"));
    // m = 0 is plain multiplication
    CHECK(jr.negative_mode(p("x + z"), 0, p("y")) == p("x*y + z*y"));
    // depth 1 operand + shift 2 needs level 3
    CHECK_THROWS_AS(jr.negative_mode(p("x_(-2)"), 2, p("y")), HeadroomExceeded);
    CHECK_THROWS_AS(jr.negative_mode(p("x"), 2, p("y_(-2)")), HeadroomExceeded);
}

TEST_CASE("truncation cutoff is exactly the level bound") {
    // within headroom the truncated and untruncated translations agree:
    // operands of depth <= 1, one T step, compared at levels 2 and 4
    JetRing shallow(cone_ring(), 1);
    JetRing small(cone_ring(), 2);
    JetRing big(cone_ring(), 4);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        Polynomial a = random_jet_poly(rng, shallow);
        CHECK(small.T(a) == big.T(a));
    }
    // beyond it the shallow ring collapses
    CHECK(shallow.T_power(p("x"), 2).is_zero());
    CHECK(big.T_power(p("x"), 2) == p("2*x_(-3)"));
}
