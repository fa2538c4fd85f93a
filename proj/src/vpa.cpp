#include "jetpva/vpa.hpp"

#include <random>

#include "jetpva/linalg.hpp"

namespace jetpva {

namespace {

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Rational falling_factorial(int m, int j) {
    // m!/(m-j)! = m (m-1) ... (m-j+1)
    Rational f = 1;
    for (int i = 0; i < j; ++i) f *= (m - i);
    return f;
}

Rational binomial(int m, int j) {
    return falling_factorial(m, j) / factorial(j);
}

// a_(k)(v) for a base-ring source and a single jet variable v = y_(-q-1):
// (1/(q-k)!) T^(q-k){a, y} if q >= k, else 0.
Polynomial base_mode_on_var(const JetRing& jr, const Polynomial& a, int k, const VarId& v) {
    if (v.level < k) return {};
    Polynomial br = poisson_bracket(jr.base(), a, Polynomial::var(VarId{v.base, 0}));
    int t = v.level - k;
    return jr.T_power(br, t) * (1 / factorial(t));
}

Polynomial apply_mode_base_source(const JetRing& jr, const Polynomial& a, int k,
                                  const Polynomial& b) {
    Polynomial r;
    for (const auto& v : b.variables())
        r += b.derivative(v) * base_mode_on_var(jr, a, k, v);
    return r;
}

Polynomial mode_on_factors(const JetRing& jr, const std::vector<VarId>& factors, int k,
                           const Polynomial& b);

// v_(k) b for a single jet variable v = T^j y / j!:
// (1/j!) (-1)^j k!/(k-j)! y_(k-j) b for j <= k, else 0.
Polynomial mode_on_single_var(const JetRing& jr, const VarId& v, int k, const Polynomial& b) {
    int j = v.level;
    if (j == 0) return apply_mode_base_source(jr, Polynomial::var(v), k, b);
    if (j > k) return {};
    Rational coef = falling_factorial(k, j) / factorial(j);
    if (j % 2 == 1) coef = -coef;
    Polynomial inner =
        apply_mode_base_source(jr, Polynomial::var(VarId{v.base, 0}), k - j, b);
    return inner * coef;
}

// (T^i a / i!) c without the public headroom guard; callers bound i so that
// no truncation can occur.
Polynomial neg_mode_raw(const JetRing& jr, const Polynomial& a, int i, const Polynomial& c) {
    return jr.T_power(a, i) * (1 / factorial(i)) * c;
}

Polynomial mode_on_factors(const JetRing& jr, const std::vector<VarId>& factors, int k,
                           const Polynomial& b) {
    if (factors.empty()) return {}; // 1_(k) b = 0 for k >= 0
    if (factors.size() == 1) return mode_on_single_var(jr, factors[0], k, b);

    // right Leibniz rule for u * w, u the first factor:
    // (u w)_(k) b = sum_i ( (T^i w / i!) (u_(k+i) b) + (T^i u / i!) (w_(k+i) b) )
    VarId u = factors[0];
    std::vector<VarId> rest(factors.begin() + 1, factors.end());
    Polynomial w(1);
    int w_depth = 0;
    for (const auto& v : rest) {
        w *= Polynomial::var(v);
        w_depth = std::max(w_depth, v.level);
    }

    int bound = u.level + w_depth + b.max_jet_level();
    Polynomial r;
    for (int i = 0; k + i <= bound; ++i) {
        Polynomial t1 = mode_on_single_var(jr, u, k + i, b);
        if (!t1.is_zero()) r += neg_mode_raw(jr, w, i, t1);
        Polynomial t2 = mode_on_factors(jr, rest, k + i, b);
        if (!t2.is_zero()) r += neg_mode_raw(jr, Polynomial::var(u), i, t2);
    }
    return r;
}

} // namespace

Polynomial poisson_bracket(const RingPresentation& R, const Polynomial& a,
                           const Polynomial& b) {
    Polynomial r;
    const size_t n = R.vars.size();
    for (size_t i = 0; i < n; ++i) {
        Polynomial da = a.derivative(R.vars[i]);
        if (da.is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (R.poisson[i][j].is_zero()) continue;
            Polynomial db = b.derivative(R.vars[j]);
            if (db.is_zero()) continue;
            r += da * db * R.poisson[i][j];
        }
    }
    return r;
}

bool jacobi_check(const RingPresentation& R) {
    if (!R.has_poisson()) return false;
    const size_t n = R.vars.size();

    // antisymmetry of the matrix itself
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!(R.poisson[i][j] + R.poisson[j][i]).is_zero()) return false;

    Ideal rel(R.relations);
    auto in_rel = [&rel](const Polynomial& p) {
        if (p.is_zero()) return true;
        if (rel.is_zero_ideal()) return false;
        return rel.contains(p);
    };

    for (size_t i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::var(R.vars[i]);
        for (size_t j = i + 1; j < n; ++j) {
            Polynomial xj = Polynomial::var(R.vars[j]);
            for (size_t k = j + 1; k < n; ++k) {
                Polynomial xk = Polynomial::var(R.vars[k]);
                Polynomial jac = poisson_bracket(R, xi, poisson_bracket(R, xj, xk)) +
                                 poisson_bracket(R, xj, poisson_bracket(R, xk, xi)) +
                                 poisson_bracket(R, xk, poisson_bracket(R, xi, xj));
                if (!in_rel(jac)) return false;
            }
        }
        for (const auto& f : R.relations)
            if (!in_rel(poisson_bracket(R, xi, f))) return false;
    }
    return true;
}

Polynomial bracket_on_jet_vars(const JetRing& jr, int i, int k, int j, int q) {
    if (q < k) return {};
    const auto& R = jr.base();
    Polynomial br = R.poisson[i][j];
    return jr.T_power(br, q - k) * (factorial(q) / factorial(q - k));
}

Polynomial apply_mode(const JetRing& jr, const Polynomial& source, int mode,
                      const Polynomial& b) {
    if (mode < 0) throw std::invalid_argument("apply_mode: negative mode");
    if (source.max_jet_level() == 0) return apply_mode_base_source(jr, source, mode, b);

    if (source.max_jet_level() + b.max_jet_level() > jr.level())
        throw HeadroomExceeded("apply_mode: source depth " +
                               std::to_string(source.max_jet_level()) + " + operand depth " +
                               std::to_string(b.max_jet_level()) + " exceeds level " +
                               std::to_string(jr.level()));

    Polynomial r;
    for (const auto& [m, c] : source.terms()) {
        std::vector<VarId> factors;
        for (const auto& [v, e] : m.exponents())
            for (int t = 0; t < e; ++t) factors.push_back(v);
        Polynomial part = mode_on_factors(jr, factors, mode, b);
        if (!part.is_zero()) r += part * c;
    }
    return r;
}

std::optional<ChiralCounterexample> is_chiral_ideal(const JetRing& jr, const Ideal& I) {
    std::vector<Polynomial> gens = I.generators();
    for (const auto& g : jr.jet_relations().generators()) gens.push_back(g);
    Ideal combined(std::move(gens), I.order(), I.budget());

    for (const auto& x : jr.base().vars) {
        Polynomial src = Polynomial::var(x);
        for (int k = 0; k <= jr.level(); ++k) {
            for (const auto& g : I.generators()) {
                Polynomial img = apply_mode(jr, src, k, g);
                if (!img.is_zero() && !combined.contains(img))
                    return ChiralCounterexample{x, k, g, img};
            }
        }
    }
    return std::nullopt;
}

std::map<VarId, long> total_degree_grading(const JetRing& jr) {
    std::map<VarId, long> g;
    for (const auto& v : jr.jet_vars()) g[v] = 1;
    return g;
}

std::vector<Monomial> monomials_up_to(const std::vector<VarId>& vars,
                                      const std::map<VarId, long>& grading, long d) {
    for (const auto& v : vars)
        if (grading.at(v) <= 0)
            throw std::invalid_argument("monomials_up_to needs a positive grading");

    std::vector<Monomial> out;
    Monomial::ExpMap cur;
    // depth-first over variables
    auto rec = [&](auto&& self, size_t i, long budget) -> void {
        if (i == vars.size()) {
            out.emplace_back(Monomial(cur));
            return;
        }
        long w = grading.at(vars[i]);
        for (int e = 0; e * w <= budget; ++e) {
            if (e > 0) cur[vars[i]] = e;
            self(self, i + 1, budget - e * w);
        }
        cur.erase(vars[i]);
    };
    rec(rec, 0, d);
    return out;
}

namespace {

// Coordinate bookkeeping over a growing monomial index.
class CoordMap {
public:
    int index(const Monomial& m) {
        auto it = idx_.find(m);
        if (it != idx_.end()) return it->second;
        int i = static_cast<int>(mons_.size());
        idx_.emplace(m, i);
        mons_.push_back(m);
        return i;
    }
    void register_poly(const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) index(m);
    }
    size_t width() const { return mons_.size(); }
    QVector to_vec(const Polynomial& p) const {
        QVector v(width(), Rational(0));
        for (const auto& [m, c] : p.terms()) v[idx_.at(m)] = c;
        return v;
    }

private:
    std::vector<Monomial> mons_;
    std::map<Monomial, int> idx_;
};

// Reduce a list of polynomials to a linearly independent sublist.
std::vector<Polynomial> independent_subset(const std::vector<Polynomial>& polys) {
    CoordMap cm;
    for (const auto& p : polys) cm.register_poly(p);
    QMatrix rows;
    std::vector<Polynomial> basis;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        rows.push_back(cm.to_vec(p));
        if (rank_bareiss(rows) == static_cast<int>(rows.size()))
            basis.push_back(p);
        else
            rows.pop_back();
    }
    return basis;
}

std::vector<std::pair<VarId, int>> mode_operators(const JetRing& jr) {
    std::vector<std::pair<VarId, int>> ops;
    for (const auto& x : jr.base().vars)
        for (int k = 0; k <= jr.level(); ++k) ops.emplace_back(x, k);
    return ops;
}

} // namespace

std::vector<Polynomial> vp_center_upto(const JetRing& jr, const Ideal& quotient_ideal,
                                       long d, const std::map<VarId, long>& grading) {
    std::vector<Polynomial> qgens = quotient_ideal.generators();
    for (const auto& g : jr.jet_relations().generators()) qgens.push_back(g);
    Ideal Q(std::move(qgens), quotient_ideal.order(), quotient_ideal.budget());

    auto mons = monomials_up_to(jr.jet_vars(), grading, d);
    auto ops = mode_operators(jr);

    std::vector<Polynomial> nf_mons;
    std::vector<std::vector<Polynomial>> nf_imgs; // per monomial, per op
    for (const auto& m : mons) {
        Polynomial z = Q.normal_form(Polynomial::term(m, 1));
        std::vector<Polynomial> imgs;
        for (const auto& [x, k] : ops)
            imgs.push_back(Q.normal_form(apply_mode(jr, Polynomial::var(x), k, z)));
        nf_mons.push_back(std::move(z));
        nf_imgs.push_back(std::move(imgs));
    }

    CoordMap cm;
    for (const auto& imgs : nf_imgs)
        for (const auto& p : imgs) cm.register_poly(p);

    // one constraint block per operator: sum_m c_m op(NF m) = 0
    QMatrix constraints;
    const size_t width = cm.width();
    for (size_t o = 0; o < ops.size(); ++o) {
        for (size_t coord = 0; coord < width; ++coord) {
            QVector row(mons.size(), Rational(0));
            bool nonzero = false;
            for (size_t m = 0; m < mons.size(); ++m) {
                QVector v = cm.to_vec(nf_imgs[m][o]);
                row[m] = v[coord];
                if (row[m] != 0) nonzero = true;
            }
            if (nonzero) constraints.push_back(std::move(row));
        }
    }

    QMatrix kernel = kernel_basis(constraints, static_cast<int>(mons.size()));
    std::vector<Polynomial> candidates;
    for (const auto& c : kernel) {
        Polynomial z;
        for (size_t m = 0; m < mons.size(); ++m)
            if (c[m] != 0) z += nf_mons[m] * c[m];
        if (!z.is_zero()) candidates.push_back(std::move(z));
    }
    return independent_subset(candidates);
}

CoreResult chiral_core_upto(const JetRing& jr, const Ideal& I, long d, int max_iter,
                            const std::map<VarId, long>& grading) {
    const Ideal& rel = jr.jet_relations();
    auto ops = mode_operators(jr);

    // degree-<=d slice of I: normal forms of monomial multiples of the generators
    std::vector<Polynomial> spanning;
    for (const auto& g : I.generators()) {
        auto gw = g.weighted_degree(grading);
        if (!gw || *gw > d) continue;
        for (const auto& m : monomials_up_to(jr.jet_vars(), grading, d - *gw)) {
            Polynomial p = rel.normal_form(Polynomial::term(m, 1) * g);
            if (!p.is_zero()) spanning.push_back(std::move(p));
        }
    }
    std::vector<Polynomial> basis = independent_subset(spanning);

    CoreResult result;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (basis.empty()) {
            result.converged = true;
            result.iterations = iter;
            return result;
        }

        std::vector<std::vector<Polynomial>> imgs(basis.size());
        for (size_t i = 0; i < basis.size(); ++i)
            for (const auto& [x, k] : ops)
                imgs[i].push_back(rel.normal_form(apply_mode(jr, Polynomial::var(x), k, basis[i])));

        CoordMap cm;
        for (const auto& b : basis) cm.register_poly(b);
        for (const auto& row : imgs)
            for (const auto& p : row) cm.register_poly(p);

        QMatrix span_rows;
        for (const auto& b : basis) span_rows.push_back(cm.to_vec(b));
        RrefResult W = rref(std::move(span_rows));

        auto project_out = [&W](QVector v) {
            for (size_t row = 0; row < W.pivot_cols.size(); ++row) {
                int pc = W.pivot_cols[row];
                if (v[pc] == 0) continue;
                Rational f = v[pc];
                for (size_t j = 0; j < v.size(); ++j) v[j] -= f * W.mat[row][j];
            }
            return v;
        };

        QMatrix constraints;
        for (size_t o = 0; o < ops.size(); ++o) {
            std::vector<QVector> residues;
            bool any = false;
            for (size_t i = 0; i < basis.size(); ++i) {
                residues.push_back(project_out(cm.to_vec(imgs[i][o])));
                for (const auto& x : residues.back())
                    if (x != 0) any = true;
            }
            if (!any) continue;
            for (size_t coord = 0; coord < cm.width(); ++coord) {
                QVector row(basis.size(), Rational(0));
                bool nonzero = false;
                for (size_t i = 0; i < basis.size(); ++i) {
                    row[i] = residues[i][coord];
                    if (row[i] != 0) nonzero = true;
                }
                if (nonzero) constraints.push_back(std::move(row));
            }
        }

        if (constraints.empty()) {
            result.basis = basis;
            result.converged = true;
            result.iterations = iter;
            return result;
        }

        QMatrix kernel = kernel_basis(constraints, static_cast<int>(basis.size()));
        std::vector<Polynomial> next;
        for (const auto& c : kernel) {
            Polynomial z;
            for (size_t i = 0; i < basis.size(); ++i)
                if (c[i] != 0) z += basis[i] * c[i];
            if (!z.is_zero()) next.push_back(std::move(z));
        }
        next = independent_subset(next);

        if (next.size() == basis.size()) {
            result.basis = std::move(next);
            result.converged = true;
            result.iterations = iter + 1;
            return result;
        }
        basis = std::move(next);
    }

    result.basis = std::move(basis);
    result.converged = false;
    result.iterations = max_iter;
    return result;
}

// ---------------------------------------------------------------------------
// Randomized axiom suite

namespace {

struct Sampler {
    const JetRing& jr;
    std::mt19937_64 rng;

    Sampler(const JetRing& j, unsigned long seed) : jr(j), rng(seed) {}

    int uniform(int lo, int hi) {
        if (hi < lo) return lo;
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    Rational coeff() {
        int num = uniform(-3, 3);
        if (num == 0) num = 1;
        int den = uniform(1, 2);
        return rational(num, den);
    }

    // Random polynomial of total degree <= 2 whose monomials each carry a
    // total jet load (sum of factor levels) <= depth. Bounding the load, not
    // just the maximal level, keeps every intermediate of the mode recursion
    // below the truncation ceiling.
    Polynomial poly(int depth) {
        Polynomial p;
        int nterms = uniform(1, 3);
        for (int t = 0; t < nterms; ++t) {
            Monomial m;
            int nf = uniform(0, 2);
            int budget = depth;
            for (int f = 0; f < nf; ++f) {
                std::vector<VarId> pool;
                for (const auto& v : jr.jet_vars())
                    if (v.level <= budget) pool.push_back(v);
                VarId v = pool[uniform(0, static_cast<int>(pool.size()) - 1)];
                budget -= v.level;
                m = m * Monomial::var(v);
            }
            p += Polynomial::term(m, coeff());
        }
        return p;
    }
};

} // namespace

std::vector<AxiomReport> pva_axiom_suite(const JetRing& jr, int samples,
                                         unsigned long seed) {
    const int n = jr.level();
    const Ideal& rel = jr.jet_relations();
    auto zero_mod = [&rel](const Polynomial& p) { return rel.normal_form(p).is_zero(); };

    Sampler smp(jr, seed);
    std::vector<AxiomReport> reports;

    auto run = [&](const std::string& name, auto&& check) {
        AxiomReport rep;
        rep.axiom = name;
        rep.samples = samples;
        for (int s = 0; s < samples; ++s) {
            auto failure = check();
            if (failure) rep.failures.push_back(*failure);
        }
        reports.push_back(std::move(rep));
    };

    using MaybeFail = std::optional<AxiomFailure>;

    // PVA-1: (Ta)_(m) b = -m a_(m-1) b
    run("PVA-1 translation", [&]() -> MaybeFail {
        int db = smp.uniform(0, std::max(0, n - 1));
        int da = std::max(0, n - 1 - db);
        Polynomial a = smp.poly(n >= 1 ? smp.uniform(0, da) : 0);
        if (n < 1) a = Polynomial(smp.coeff()); // no headroom for T at level 0
        Polynomial b = smp.poly(db);
        int m = smp.uniform(1, std::max(1, n));
        Polynomial lhs = apply_mode(jr, jr.T(a), m, b);
        Polynomial rhs = apply_mode(jr, a, m - 1, b) * Rational(-m);
        if (zero_mod(lhs - rhs)) return std::nullopt;
        return AxiomFailure{a.str(), b.str(), "", lhs.str(), rhs.str()};
    });

    // PVA-2: a_(m) b = sum_j (-1)^(m+j+1) (1/j!) T^j (b_(m+j) a)
    run("PVA-2 skewsymmetry", [&]() -> MaybeFail {
        int da = smp.uniform(0, n);
        int db = smp.uniform(0, n - da);
        Polynomial a = smp.poly(da);
        Polynomial b = smp.poly(db);
        int m = smp.uniform(0, n);
        Polynomial lhs = apply_mode(jr, a, m, b);
        Polynomial rhs;
        int bound = a.max_jet_level() + b.max_jet_level();
        for (int j = 0; m + j <= bound; ++j) {
            Polynomial inner = apply_mode(jr, b, m + j, a);
            if (inner.is_zero()) continue;
            Polynomial term = jr.T_power(inner, j) * (1 / factorial(j));
            rhs = ((m + j + 1) % 2 == 0) ? rhs + term : rhs - term;
        }
        if (zero_mod(lhs - rhs)) return std::nullopt;
        return AxiomFailure{a.str(), b.str(), "", lhs.str(), rhs.str()};
    });

    // PVA-3: [a_(m), b_(k)] c = sum_j binom(m,j) (a_(j) b)_(m+k-j) c
    run("PVA-3 Jacobi", [&]() -> MaybeFail {
        int da = smp.uniform(0, n);
        int db = smp.uniform(0, n - da);
        int dc = smp.uniform(0, n - da - db);
        Polynomial a = smp.poly(da), b = smp.poly(db), c = smp.poly(dc);
        int m = smp.uniform(0, n), k = smp.uniform(0, n);
        Polynomial lhs = apply_mode(jr, a, m, apply_mode(jr, b, k, c)) -
                         apply_mode(jr, b, k, apply_mode(jr, a, m, c));
        Polynomial rhs;
        for (int j = 0; j <= m; ++j) {
            Polynomial ab = apply_mode(jr, a, j, b);
            if (ab.is_zero()) continue;
            rhs += apply_mode(jr, ab, m + k - j, c) * binomial(m, j);
        }
        if (zero_mod(lhs - rhs)) return std::nullopt;
        return AxiomFailure{a.str(), b.str(), c.str(), lhs.str(), rhs.str()};
    });

    // PVA-4: a_(m)(b c) = (a_(m) b) c + b (a_(m) c)
    run("PVA-4 left Leibniz", [&]() -> MaybeFail {
        int da = smp.uniform(0, n);
        int db = smp.uniform(0, n - da);
        int dc = smp.uniform(0, n - da - db);
        Polynomial a = smp.poly(da), b = smp.poly(db), c = smp.poly(dc);
        int m = smp.uniform(0, n);
        Polynomial lhs = apply_mode(jr, a, m, b * c);
        Polynomial rhs = apply_mode(jr, a, m, b) * c + b * apply_mode(jr, a, m, c);
        if (zero_mod(lhs - rhs)) return std::nullopt;
        return AxiomFailure{a.str(), b.str(), c.str(), lhs.str(), rhs.str()};
    });

    // PVA-5: (a b)_(m) c = sum_i ( b_(-i-1) a_(m+i) c + a_(-i-1) b_(m+i) c )
    run("PVA-5 right Leibniz", [&]() -> MaybeFail {
        int da = smp.uniform(0, n);
        int db = smp.uniform(0, n - da);
        int dc = smp.uniform(0, n - da - db);
        Polynomial a = smp.poly(da), b = smp.poly(db), c = smp.poly(dc);
        int m = smp.uniform(0, n);
        Polynomial lhs = apply_mode(jr, a * b, m, c);
        Polynomial rhs;
        int bound = a.max_jet_level() + b.max_jet_level() + c.max_jet_level();
        for (int i = 0; m + i <= bound; ++i) {
            Polynomial t1 = apply_mode(jr, a, m + i, c);
            if (!t1.is_zero()) rhs += jr.T_power(b, i) * (1 / factorial(i)) * t1;
            Polynomial t2 = apply_mode(jr, b, m + i, c);
            if (!t2.is_zero()) rhs += jr.T_power(a, i) * (1 / factorial(i)) * t2;
        }
        if (zero_mod(lhs - rhs)) return std::nullopt;
        return AxiomFailure{a.str(), b.str(), c.str(), lhs.str(), rhs.str()};
    });

    return reports;
}

} // namespace jetpva
