#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jetpva/liealg.hpp"
#include "jetpva/linalg.hpp"
#include "jetpva/stratify.hpp"

using namespace jetpva;

namespace {

Polynomial p(const std::string& s) { return parse_polynomial(s); }

JetPoint random_point(std::mt19937_64& rng, const JetRing& jr) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
    JetPoint x;
    for (const auto& v : jr.jet_vars()) x.coords[v] = rational(num(rng), den(rng));
    return x;
}

} // namespace

TEST_CASE("rank matrix of sl2 at level 0") {
    auto L = make_sl2();
    RankMatrix M = build_rank_matrix(JetRing(L.ring, 0));
    REQUIRE(M.size() == 3);
    // rows/columns ordered (e, h, f)
    CHECK(M.entries[0][0].is_zero());
    CHECK(M.entries[0][1] == p("-2*e"));
    CHECK(M.entries[0][2] == p("h"));
    CHECK(M.entries[1][0] == p("2*e"));
    CHECK(M.entries[1][2] == p("-2*f"));
    CHECK(M.entries[2][0] == p("-h"));
    CHECK(M.entries[2][1] == p("2*f"));
}

TEST_CASE("trivial bracket gives the zero matrix") {
    RingPresentation R;
    R.vars = {VarId{"x", 0}, VarId{"y", 0}};
    R.poisson = {{Polynomial(), Polynomial()}, {Polynomial(), Polynomial()}};
    RankMatrix M = build_rank_matrix(JetRing(R, 2));
    for (const auto& row : M.entries)
        for (const auto& entry : row) CHECK(entry.is_zero());
}

TEST_CASE("block structure holds symbolically up to level 3") {
    for (const RingPresentation& R : {make_sl2().ring, make_symplectic_plane()}) {
        for (int n = 0; n <= 3; ++n) {
            JetRing jr(R, n);
            RankMatrix M = build_rank_matrix(jr);
            auto res = verify_block_structure(jr, M);
            INFO("level ", n, ", block (", res.p, ",", res.q, "): ", res.reason);
            CHECK(res.ok);
        }
    }
}

TEST_CASE("corrupted matrices are rejected") {
    JetRing jr(make_sl2().ring, 1);
    RankMatrix M = build_rank_matrix(jr);
    M.entries[3][0] = p("e"); // lower block must be zero
    auto res = verify_block_structure(jr, M);
    CHECK(!res.ok);
    CHECK(res.p == 1);
    CHECK(res.q == 0);

    RankMatrix M2 = build_rank_matrix(jr);
    M2.entries[0][0] = p("h"); // diagonal block entry off
    CHECK(!verify_block_structure(jr, M2).ok);
}

TEST_CASE("pointwise ranks on sl2") {
    auto L = make_sl2();
    JetRing jr0(L.ring, 0);
    RankMatrix M0 = build_rank_matrix(jr0);

    JetPoint origin = jr0.iota_point({{VarId{"e", 0}, 0}, {VarId{"h", 0}, 0}, {VarId{"f", 0}, 0}});
    CHECK(rank_at(M0, origin).rank == 0);

    JetPoint reg = jr0.iota_point({{VarId{"e", 0}, 1}, {VarId{"h", 0}, 0}, {VarId{"f", 0}, 0}});
    CHECK(rank_at(M0, reg).rank == 2);
    CHECK(rank_at(M0, reg).rk == 2);

    JetRing jr1(L.ring, 1);
    RankMatrix M1 = build_rank_matrix(jr1);
    JetPoint reg1 = jr1.iota_point({{VarId{"e", 0}, 1}, {VarId{"h", 0}, 0}, {VarId{"f", 0}, 0}});
    RankInfo i1 = rank_at(M1, reg1);
    CHECK(i1.rank == 4);
    CHECK(i1.rk == 2);
}

TEST_CASE("rank of the jet matrix is (n+1) times the base rank") {
    std::mt19937_64 rng(71);
    for (const RingPresentation& R : {make_sl2().ring, make_symplectic_plane()}) {
        RankMatrix M0 = build_rank_matrix(JetRing(R, 0));
        for (int n = 1; n <= 3; ++n) {
            JetRing jr(R, n);
            RankMatrix Mn = build_rank_matrix(jr);
            for (int t = 0; t < 20; ++t) {
                JetPoint x = random_point(rng, jr);
                RankInfo info = rank_at(Mn, x);
                int r0 = rank_at_point(M0, truncate_point(x, 0));
                CHECK(info.rank == (n + 1) * r0);
                CHECK(info.rk == r0);
            }
        }
    }
}

TEST_CASE("divisibility violations are internal errors") {
    // hand-built bogus matrix: level 1 but odd rank
    RankMatrix bogus;
    bogus.level = 1;
    bogus.generators = {VarId{"x", 0}};
    bogus.entries = {{Polynomial(1), Polynomial()}, {Polynomial(), Polynomial()}};
    JetPoint pt;
    CHECK_THROWS_AS(rank_at(bogus, pt), DivisibilityViolation);
}

TEST_CASE("rank strata of sl2") {
    auto L = make_sl2();
    JetRing jr(L.ring, 1);

    Stratum s0 = stratum(jr, 0);
    // the rank-0 locus is the origin
    for (const char* v : {"e", "h", "f"})
        CHECK(radical_member(p(v), s0.base_ideal));
    CHECK(!s0.base_ideal.contains(p("e + 1")));

    Stratum s2 = stratum(jr, 2);
    // all 3x3 minors of an antisymmetric 3x3 matrix vanish: whole space
    CHECK(s2.base_ideal.is_zero_ideal());

    // strata are nested: each (j+2)-minor lies in the radical of the
    // (j+1)-minors ideal
    Stratum s1 = stratum(jr, 1);
    for (const auto& g : s1.base_ideal.generators())
        CHECK(radical_member(g, s0.base_ideal));

    // base strata are Poisson ideals
    for (const Stratum* s : {&s0, &s1}) {
        for (const auto& v : L.ring.vars)
            for (const auto& g : s->base_ideal.generators())
                CHECK(s->base_ideal.contains(
                    poisson_bracket(L.ring, Polynomial::var(v), g)));
    }

    // jet-level strata are chiral
    for (int j : {0, 1, 2})
        CHECK(!is_chiral_ideal(jr, stratum(jr, j).jet_ideal).has_value());
}

TEST_CASE("symplectic plane has constant rank") {
    JetRing jr(make_symplectic_plane(), 1);
    Stratum s1 = stratum(jr, 1);
    // no points of rank <= 1: the minors ideal is the unit ideal
    CHECK(s1.base_ideal.is_unit_ideal());
    Stratum s0 = stratum(jr, 0);
    CHECK(s0.base_ideal.is_unit_ideal());
}

TEST_CASE("base rank is independent of the generating set") {
    // replace (e,h,f) by the generators (e+h, h, f-e); the bracket matrix
    // transforms by congruence, so pointwise ranks match
    auto L = make_sl2();
    RankMatrix M0 = build_rank_matrix(JetRing(L.ring, 0));

    std::vector<Polynomial> gens = {p("e + h"), p("h"), p("f - e")};
    std::vector<std::vector<Polynomial>> alt(3, std::vector<Polynomial>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) alt[i][j] = poisson_bracket(L.ring, gens[i], gens[j]);

    std::mt19937_64 rng(5);
    JetRing jr0(L.ring, 0);
    for (int t = 0; t < 20; ++t) {
        JetPoint x = random_point(rng, jr0);
        QMatrix m(3, QVector(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = alt[i][j].evaluate(x.coords);
        CHECK(rank_bareiss(m) == rank_at_point(M0, x));
    }
}
