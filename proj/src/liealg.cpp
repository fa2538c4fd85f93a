#include "jetpva/liealg.hpp"

#include "jetpva/linalg.hpp"

namespace jetpva {

LieAlgebraData make_sl2() {
    VarId e{"e", 0}, h{"h", 0}, f{"f", 0};
    Polynomial pe = Polynomial::var(e), ph = Polynomial::var(h), pf = Polynomial::var(f);

    RingPresentation R;
    R.vars = {e, h, f};
    // rows/columns in basis order (e, h, f); {h,e}=2e, {h,f}=-2f, {e,f}=h
    R.poisson = {
        {Polynomial(), pe * Rational(-2), ph},
        {pe * Rational(2), Polynomial(), pf * Rational(-2)},
        {-ph, pf * Rational(2), Polynomial()},
    };
    R.weights = {{e, 4}, {h, 2}, {f, 0}};

    LieAlgebraData L;
    L.ring = std::move(R);
    L.invariants = {pe * pf + ph * ph * rational(1, 4)};
    L.sl2_triple = {{pe, ph, pf}};
    return L;
}

RingPresentation make_symplectic_plane() {
    VarId p{"p", 0}, q{"q", 0};
    RingPresentation R;
    R.vars = {p, q};
    R.poisson = {
        {Polynomial(), Polynomial(1)},
        {Polynomial(-1), Polynomial()},
    };
    return R;
}

Ideal nilpotent_cone(const LieAlgebraData& L) {
    return Ideal(L.invariants);
}

Ideal fiber_ideal(const LieAlgebraData& L, const JetRing& jr, const FiberSpec& spec) {
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < L.invariants.size(); ++i) {
        Polynomial g = L.invariants[i];
        for (int j = 0; j <= spec.level; ++j) {
            gens.push_back(g - Polynomial(spec.at(static_cast<int>(i) + 1, j)));
            g = jr.T(g);
        }
    }
    return Ideal(std::move(gens));
}

SlicePresentation regular_slice_sl2() {
    VarId s{"s", 0};
    SlicePresentation S;
    S.ring.vars = {s};
    S.ring.poisson = {{Polynomial()}};
    S.ring.weights = {{s, 4}};
    S.restriction = {
        {VarId{"e", 0}, Polynomial::var(s)},
        {VarId{"h", 0}, Polynomial()},
        {VarId{"f", 0}, Polynomial(1)},
    };
    // Omega(f + s e) = s * 1 + 0 = s
    S.restricted_invariants = {Polynomial::var(s)};
    return S;
}

std::map<VarId, Polynomial> jet_restriction(const SlicePresentation& S,
                                            const JetRing& slice_jr, int source_level) {
    // x_(-j-1) = T^j x / j!, so its image is T^j(image of x) / j! in the
    // slice jet ring. Constant images vanish at j >= 1.
    std::map<VarId, Polynomial> images;
    for (const auto& [v, img] : S.restriction) {
        Rational jfact = 1;
        Polynomial t = img;
        for (int j = 0; j <= source_level; ++j) {
            if (j > 0) {
                t = slice_jr.T(t);
                jfact *= j;
            }
            images[v.at_level(j)] = t * (1 / jfact);
        }
    }
    return images;
}

Polynomial restrict_to_slice(const SlicePresentation& S, const JetRing& slice_jr,
                             const Polynomial& p) {
    return p.substitute(jet_restriction(S, slice_jr, p.max_jet_level()));
}

namespace {

// Graded dimensions of the span of a polynomial list, by total degree.
// Elements are split into homogeneous components first; the spans we grade
// here are graded subspaces, so this computes their homogeneous pieces.
std::map<long, int> graded_dims(const std::vector<Polynomial>& polys) {
    std::map<long, std::vector<Polynomial>> by_degree;
    for (const auto& p : polys) {
        std::map<long, Polynomial> components;
        for (const auto& [m, c] : p.terms())
            components[m.total_degree()] += Polynomial::term(m, c);
        for (auto& [deg, comp] : components) by_degree[deg].push_back(std::move(comp));
    }
    std::map<long, int> dims;
    for (auto& [deg, list] : by_degree) {
        std::map<Monomial, int> idx;
        for (const auto& p : list)
            for (const auto& [m, c] : p.terms())
                idx.emplace(m, static_cast<int>(idx.size()));
        QMatrix rows;
        for (const auto& p : list) {
            QVector v(idx.size(), Rational(0));
            for (const auto& [m, c] : p.terms()) v[idx.at(m)] = c;
            rows.push_back(std::move(v));
        }
        dims[deg] = rank_bareiss(std::move(rows));
    }
    return dims;
}

} // namespace

CenterIsoReport center_isomorphism_check(const SlicePresentation& S, int n, long d) {
    JetRing jr(S.ring, n);
    auto grading = total_degree_grading(jr);

    std::vector<Polynomial> center = vp_center_upto(jr, Ideal{}, d, grading);

    // monomials in the restricted invariants and their T-derivatives
    std::vector<Polynomial> derived;
    for (const auto& psi : S.restricted_invariants) {
        Polynomial g = psi;
        for (int j = 0; j <= n; ++j) {
            derived.push_back(g);
            g = jr.T(g);
        }
    }
    std::vector<Polynomial> invariant_span;
    auto rec = [&](auto&& self, size_t i, Polynomial acc) -> void {
        auto deg = acc.total_degree();
        if (deg && *deg > d) return;
        if (i == derived.size()) {
            invariant_span.push_back(acc);
            return;
        }
        self(self, i + 1, acc);
        if (!derived[i].is_zero()) self(self, i, acc * derived[i]);
    };
    rec(rec, 0, Polynomial(1));

    CenterIsoReport rep;
    rep.center_dims = graded_dims(center);
    rep.invariant_dims = graded_dims(invariant_span);
    rep.equal = rep.center_dims == rep.invariant_dims;

    // containment: each invariant monomial must be a combination of center
    // elements; both lists are already normal forms mod the jet relations
    {
        std::map<Monomial, int> idx;
        for (const auto& p : center)
            for (const auto& [m, c] : p.terms()) idx.emplace(m, static_cast<int>(idx.size()));
        for (const auto& p : invariant_span)
            for (const auto& [m, c] : p.terms()) idx.emplace(m, static_cast<int>(idx.size()));
        auto vec = [&idx](const Polynomial& p) {
            QVector v(idx.size(), Rational(0));
            for (const auto& [m, c] : p.terms()) v[idx.at(m)] = c;
            return v;
        };
        QMatrix rows;
        for (const auto& p : center) rows.push_back(vec(p));
        RrefResult basis = rref(std::move(rows));
        rep.invariants_contained = true;
        for (const auto& p : invariant_span) {
            Polynomial nf = jr.jet_relations().normal_form(p);
            if (!in_row_span(basis, vec(nf))) {
                rep.invariants_contained = false;
                break;
            }
        }
    }

    // is the center the whole degree-d truncation?
    size_t all = monomials_up_to(jr.jet_vars(), grading, d).size();
    size_t center_dim = 0;
    for (const auto& [deg, dim] : rep.center_dims) center_dim += dim;
    rep.center_is_everything = center_dim == all;
    return rep;
}

} // namespace jetpva
