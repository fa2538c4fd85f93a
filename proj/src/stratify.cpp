#include "jetpva/stratify.hpp"

#include "jetpva/linalg.hpp"

namespace jetpva {

namespace {

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

RankMatrix build_rank_matrix(const JetRing& jr) {
    const int n = jr.level();
    const int r = static_cast<int>(jr.base().vars.size());
    RankMatrix M;
    M.level = n;
    M.generators = jr.base().vars;
    const int dim = (n + 1) * r;
    M.entries.assign(dim, std::vector<Polynomial>(dim));
    for (int p = 0; p <= n; ++p)
        for (int i = 0; i < r; ++i)
            for (int q = 0; q <= n; ++q)
                for (int j = 0; j < r; ++j)
                    M.entries[p * r + i][q * r + j] = bracket_on_jet_vars(jr, i, p, j, q);
    return M;
}

int rank_at_point(const RankMatrix& M, const JetPoint& x) {
    QMatrix num(M.size(), QVector(M.size()));
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < M.size(); ++j)
            num[i][j] = M.entries[i][j].evaluate(x.coords);
    return rank_bareiss(std::move(num));
}

RankInfo rank_at(const RankMatrix& M, const JetPoint& x) {
    RankInfo info;
    info.rank = rank_at_point(M, x);
    int blocks = M.level + 1;
    if (info.rank % blocks != 0)
        throw DivisibilityViolation("rank " + std::to_string(info.rank) +
                                    " not divisible by " + std::to_string(blocks));
    info.rk = info.rank / blocks;
    return info;
}

BlockCheckResult verify_block_structure(const JetRing& jr, const RankMatrix& M) {
    const int n = M.level;
    const int r = static_cast<int>(M.generators.size());
    const auto& ps = jr.base().poisson;

    auto fail = [](int p, int q, std::string reason) {
        return BlockCheckResult{false, p, q, std::move(reason)};
    };

    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            for (int i = 0; i < r; ++i) {
                for (int j = 0; j < r; ++j) {
                    const Polynomial& entry = M.entries[p * r + i][q * r + j];

                    // independent recomputation through the mode operator
                    Polynomial via_mode =
                        apply_mode(jr, Polynomial::var(M.generators[i]), p,
                                   jr.T_power(Polynomial::var(M.generators[j]), q));
                    if (entry != via_mode)
                        return fail(p, q, "entry disagrees with apply_mode at (" +
                                              std::to_string(i) + "," + std::to_string(j) + ")");

                    Polynomial expected;
                    if (q >= p)
                        expected = jr.T_power(ps[i][j], q - p) *
                                   (factorial(q) / factorial(q - p));
                    // q < p: expected stays zero
                    if (entry != expected)
                        return fail(p, q, q < p ? "lower block not zero"
                                                : "block is not q!/(q-p)! T^(q-p) M0");
                }
            }
        }
    }
    return {};
}

Stratum stratum(const JetRing& jr, int j) {
    const auto& R = jr.base();
    const int r = static_cast<int>(R.vars.size());

    std::vector<Polynomial> base_gens;
    if (j + 1 <= r) {
        Ideal minors = minors_ideal(R.poisson, j + 1);
        base_gens = minors.generators();
    }
    for (const auto& f : R.relations) base_gens.push_back(f);

    Stratum s;
    s.j = j;
    s.base_ideal = Ideal(base_gens);

    std::vector<Polynomial> jet_gens = base_gens;
    for (const auto& g : jr.jet_relations().generators()) jet_gens.push_back(g);
    s.jet_ideal = Ideal(std::move(jet_gens));
    return s;
}

} // namespace jetpva
