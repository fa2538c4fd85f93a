#include "jetpva/groebner.hpp"

#include <algorithm>
#include <sstream>

namespace jetpva {

namespace {

int degree_or_zero(const Polynomial& p) {
    return p.total_degree().value_or(0);
}

struct Reducer {
    const std::vector<Polynomial>& divisors;
    const MonomialOrder& ord;
    std::vector<Monomial> lms;
    std::vector<Rational> lcs;

    Reducer(const std::vector<Polynomial>& d, const MonomialOrder& o) : divisors(d), ord(o) {
        for (const auto& f : divisors) {
            lms.push_back(f.leading_monomial(o));
            lcs.push_back(f.leading_coefficient(o));
        }
    }

    Polynomial reduce(Polynomial h) const {
        Polynomial rem;
        while (!h.is_zero()) {
            Monomial lm = h.leading_monomial(ord);
            bool reduced = false;
            for (size_t i = 0; i < divisors.size(); ++i) {
                if (!lms[i].divides(lm)) continue;
                Rational c = h.terms().at(lm) / lcs[i];
                h -= Polynomial::term(lm / lms[i], c) * divisors[i];
                reduced = true;
                break;
            }
            if (!reduced) {
                Polynomial lt = Polynomial::term(lm, h.terms().at(lm));
                rem += lt;
                h -= lt;
            }
        }
        return rem;
    }
};

struct SPair {
    int i, j;
    Monomial lcm;
    int sugar;
};

} // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& ord) {
    std::vector<Polynomial> nz;
    for (const auto& f : divisors)
        if (!f.is_zero()) nz.push_back(f);
    if (nz.empty()) return p;
    return Reducer(nz, ord).reduce(p);
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                   const Budget& budget) {
    std::vector<Polynomial> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic(ord));
    if (basis.empty()) return {};

    std::vector<Monomial> lm;
    std::vector<int> sugar;
    for (const auto& g : basis) {
        lm.push_back(g.leading_monomial(ord));
        sugar.push_back(degree_or_zero(g));
    }

    std::vector<SPair> pairs;
    auto make_pair = [&](int i, int j) {
        Monomial l = Monomial::lcm(lm[i], lm[j]);
        int s = std::max(sugar[i] + (l / lm[i]).total_degree(),
                         sugar[j] + (l / lm[j]).total_degree());
        return SPair{i, j, l, s};
    };

    // Gebauer-Moeller update with the new element at index t.
    auto update_pairs = [&](int t) {
        std::vector<SPair> fresh;
        for (int i = 0; i < t; ++i) fresh.push_back(make_pair(i, t));

        std::vector<SPair> kept;
        for (const auto& p : fresh) {
            bool drop = false;
            for (const auto& q : fresh) {
                if (q.i == p.i) continue;
                if (q.lcm.divides(p.lcm) && (q.lcm != p.lcm || q.i < p.i)) {
                    drop = true;
                    break;
                }
            }
            if (!drop && Monomial::coprime(lm[p.i], lm[t])) drop = true; // product criterion
            if (!drop) kept.push_back(p);
        }

        std::erase_if(pairs, [&](const SPair& p) {
            return lm[t].divides(p.lcm) &&
                   Monomial::lcm(lm[p.i], lm[t]) != p.lcm &&
                   Monomial::lcm(lm[p.j], lm[t]) != p.lcm;
        });
        pairs.insert(pairs.end(), kept.begin(), kept.end());
    };

    for (int t = 1; t < static_cast<int>(basis.size()); ++t) update_pairs(t);

    long reductions = 0;
    while (!pairs.empty()) {
        // sugar selection: smallest sugar, then smallest lcm degree, then index
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            if (it->sugar != best->sugar) {
                if (it->sugar < best->sugar) best = it;
            } else if (it->lcm.total_degree() != best->lcm.total_degree()) {
                if (it->lcm.total_degree() < best->lcm.total_degree()) best = it;
            } else if (std::tie(it->i, it->j) < std::tie(best->i, best->j)) {
                best = it;
            }
        }
        SPair p = *best;
        pairs.erase(best);

        if (++reductions > budget.max_spair_reductions)
            throw ResourceLimit("Groebner budget exceeded: more than " +
                                std::to_string(budget.max_spair_reductions) +
                                " S-pair reductions");
        if (p.lcm.total_degree() > budget.max_total_degree)
            throw ResourceLimit("Groebner budget exceeded: S-pair degree " +
                                std::to_string(p.lcm.total_degree()) + " > " +
                                std::to_string(budget.max_total_degree));

        Polynomial s = Polynomial::term(p.lcm / lm[p.i], 1) * basis[p.i] -
                       Polynomial::term(p.lcm / lm[p.j], 1) * basis[p.j];
        Polynomial r = Reducer(basis, ord).reduce(s);
        if (r.is_zero()) continue;
        if (*r.total_degree() > budget.max_total_degree)
            throw ResourceLimit("Groebner budget exceeded: basis element degree " +
                                std::to_string(*r.total_degree()));

        basis.push_back(r.monic(ord));
        lm.push_back(basis.back().leading_monomial(ord));
        sugar.push_back(std::max(p.sugar, degree_or_zero(r)));
        update_pairs(static_cast<int>(basis.size()) - 1);
    }

    // minimalize: drop elements whose leading monomial is divisible by another
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& mj = lm[j];
            if (mj.divides(lm[i]) && (mj != lm[i] || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // interreduce to the unique reduced basis
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : Reducer(others, ord).reduce(minimal[i]);
        if (!r.is_zero()) reduced.push_back(r.monic(ord));
    }

    std::sort(reduced.begin(), reduced.end(), [&ord](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return reduced;
}

Ideal::Ideal(std::vector<Polynomial> gens, MonomialOrder order, Budget budget)
    : order_(std::move(order)), budget_(budget) {
    for (auto& g : gens)
        if (!g.is_zero()) gens_.push_back(std::move(g));
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
    if (!gb_) gb_ = buchberger(gens_, order_, budget_);
    return *gb_;
}

Polynomial Ideal::normal_form(const Polynomial& p) const {
    const auto& gb = groebner_basis();
    if (gb.empty()) return p;
    return jetpva::normal_form(p, gb, order_);
}

bool Ideal::is_unit_ideal() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb[0] == Polynomial(1);
}

std::string Ideal::serialize_basis() const {
    std::ostringstream out;
    for (const auto& g : groebner_basis()) out << g.str(order_) << "\n";
    return out.str();
}

bool member(const Polynomial& p, const Ideal& I) {
    return I.contains(p);
}

bool radical_member(const Polynomial& p, const Ideal& I) {
    if (p.is_zero()) return true;
    // fresh variable; '#' never appears in parsed names
    VarId t{"#rab", 0};
    std::vector<Polynomial> gens = I.generators();
    gens.push_back(Polynomial(1) - Polynomial::var(t) * p);
    Ideal J(std::move(gens), I.order(), I.budget());
    return J.is_unit_ideal();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    Ideal J2(J.generators(), I.order(), I.budget());
    return I.groebner_basis() == J2.groebner_basis();
}

Ideal eliminate(const Ideal& I, const std::set<VarId>& keep) {
    std::set<VarId> block;
    for (const auto& g : I.generators())
        for (const auto& v : g.variables())
            if (!keep.count(v)) block.insert(v);

    Ideal tmp(I.generators(), MonomialOrder::elim(block), I.budget());
    std::vector<Polynomial> kept;
    for (const auto& g : tmp.groebner_basis()) {
        auto vars = g.variables();
        if (std::all_of(vars.begin(), vars.end(),
                        [&keep](const VarId& v) { return keep.count(v) > 0; }))
            kept.push_back(g);
    }
    return Ideal(std::move(kept), MonomialOrder{}, I.budget());
}

Ideal initial_ideal(const Ideal& I, const std::map<VarId, long>& weights) {
    MonomialOrder word = MonomialOrder::weighted(weights);
    Ideal tmp(I.generators(), word, I.budget());
    std::vector<Polynomial> forms;
    for (const auto& g : tmp.groebner_basis()) forms.push_back(g.top_weight_form(weights));
    return Ideal(std::move(forms), word, I.budget());
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& M) {
    const size_t n = M.size();
    if (n == 0) return Polynomial(1);
    if (n == 1) return M[0][0];
    Polynomial det;
    for (size_t c = 0; c < n; ++c) {
        if (M[0][c].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub(n - 1);
        for (size_t i = 1; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (j != c) sub[i - 1].push_back(M[i][j]);
        Polynomial cof = M[0][c] * determinant(sub);
        det = (c % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

Ideal minors_ideal(const std::vector<std::vector<Polynomial>>& M, int k, MonomialOrder order) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows ? static_cast<int>(M[0].size()) : 0;
    if (k <= 0 || k > rows || k > cols)
        throw std::invalid_argument("minors_ideal: k out of range");

    auto combinations = [](int n, int k) {
        std::vector<std::vector<int>> out;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            out.push_back(idx);
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        return out;
    };

    std::vector<Polynomial> minors;
    for (const auto& rsel : combinations(rows, k)) {
        for (const auto& csel : combinations(cols, k)) {
            std::vector<std::vector<Polynomial>> sub(k, std::vector<Polynomial>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = M[rsel[i]][csel[j]];
            Polynomial d = determinant(sub);
            if (!d.is_zero()) minors.push_back(std::move(d));
        }
    }
    return Ideal(std::move(minors), std::move(order));
}

} // namespace jetpva
