// Batch front end: load a ring presentation from JSON, run one jet/bracket/
// strata/center/core computation, print canonical text or JSON.
//
// Exit codes: 0 success, 1 input error, 2 resource budget exceeded.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jetpva/liealg.hpp"
#include "jetpva/ringio.hpp"
#include "jetpva/stratify.hpp"

using namespace jetpva;
using nlohmann::json;

namespace {

struct Options {
    std::string command;
    std::string input_path;
    int level = 0;
    long degree_bound = 2;
    unsigned long seed = 0;
    int samples = 50;
    int max_iter = 25;
    std::vector<std::string> point;       // k=v entries
    std::vector<std::string> xi;          // i,j=v entries
    std::vector<std::string> gens;        // polynomial texts
    std::vector<std::string> invariants;  // polynomial texts
    std::string lhs, rhs;                 // bracket operands
    long budget_spairs = 50000;
    int budget_degree = 40;
    std::string output = "text";
};

Rational parse_rational(const std::string& s) {
    Polynomial p = parse_polynomial(s);
    if (!p.is_zero() && (p.size() != 1 || !p.terms().begin()->first.is_one()))
        throw ParseError("expected a rational constant, got \"" + s + "\"");
    return p.is_zero() ? Rational(0) : p.terms().begin()->second;
}

JetPoint parse_point(const JetRing& jr, const std::vector<std::string>& entries) {
    JetPoint x;
    for (const auto& v : jr.jet_vars()) x.coords[v] = 0;
    for (const auto& e : entries) {
        auto eq = e.find('=');
        if (eq == std::string::npos) throw ParseError("--point entry \"" + e + "\" needs k=v");
        std::string name = e.substr(0, eq);
        Polynomial vp = parse_polynomial(name);
        if (vp.size() != 1 || vp.terms().begin()->first.exponents().size() != 1)
            throw ParseError("--point entry \"" + e + "\": \"" + name + "\" is not a variable");
        VarId var = vp.terms().begin()->first.exponents().begin()->first;
        if (!x.coords.count(var))
            throw ParseError("--point entry \"" + e + "\": unknown variable " + var.str());
        x.coords[var] = parse_rational(e.substr(eq + 1));
    }
    return x;
}

FiberSpec parse_xi(int level, const std::vector<std::string>& entries) {
    FiberSpec spec;
    spec.level = level;
    for (const auto& e : entries) {
        auto eq = e.find('=');
        auto comma = e.find(',');
        if (eq == std::string::npos || comma == std::string::npos || comma > eq)
            throw ParseError("--xi entry \"" + e + "\" needs i,j=v");
        int i = std::stoi(e.substr(0, comma));
        int j = std::stoi(e.substr(comma + 1, eq - comma - 1));
        if (i < 1 || j < 0 || j > level)
            throw ParseError("--xi entry \"" + e + "\": indices out of range");
        spec.xi[{i, j}] = parse_rational(e.substr(eq + 1));
    }
    return spec;
}

std::vector<Polynomial> parse_polys(const std::vector<std::string>& texts,
                                    const std::string& what) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) {
        try {
            out.push_back(parse_polynomial(t));
        } catch (const ParseError& e) {
            throw ParseError(what + " \"" + t + "\": " + e.what());
        }
    }
    return out;
}

json poly_list(const std::vector<Polynomial>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.str());
    return a;
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.output == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run(const Options& opt) {
    RingPresentation R = load_ring(opt.input_path);
    Budget budget{opt.budget_spairs, opt.budget_degree};
    JetRing jr(R, opt.level);

    if (opt.command == "jet-ring") {
        json j;
        j["level"] = opt.level;
        j["variables"] = json::array();
        for (const auto& v : jr.jet_vars()) j["variables"].push_back(v.str());
        j["relations"] = poly_list(jr.jet_relations().generators());
        std::ostringstream t;
        t << "level " << opt.level << "\n";
        t << "variables (" << jr.jet_vars().size() << "):";
        for (const auto& v : jr.jet_vars()) t << " " << v.str();
        t << "\nrelations (" << jr.jet_relations().generators().size() << "):\n";
        for (const auto& r : jr.jet_relations().generators()) t << "  " << r.str() << "\n";
        emit(opt, j, t.str());
        return 0;
    }

    if (opt.command == "bracket") {
        if (opt.lhs.empty() || opt.rhs.empty())
            throw ParseError("bracket needs --lhs and --rhs");
        Polynomial a = parse_polynomial(opt.lhs), b = parse_polynomial(opt.rhs);
        Polynomial r = poisson_bracket(R, a, b);
        json j;
        j["bracket"] = r.str();
        emit(opt, j, "{" + a.str() + ", " + b.str() + "} = " + r.str() + "\n");
        return 0;
    }

    if (opt.command == "axioms") {
        auto reports = pva_axiom_suite(jr, opt.samples, opt.seed);
        json j = json::array();
        std::ostringstream t;
        bool all = true;
        for (const auto& rep : reports) {
            all = all && rep.passed();
            json e;
            e["axiom"] = rep.axiom;
            e["samples"] = rep.samples;
            e["failures"] = json::array();
            for (const auto& f : rep.failures)
                e["failures"].push_back({{"a", f.a}, {"b", f.b}, {"c", f.c},
                                         {"lhs", f.lhs}, {"rhs", f.rhs}});
            j.push_back(e);
            t << rep.axiom << ": " << (rep.passed() ? "pass" : "FAIL") << " ("
              << rep.samples << " samples)\n";
            for (const auto& f : rep.failures)
                t << "  a=" << f.a << " b=" << f.b << " c=" << f.c << " lhs=" << f.lhs
                  << " rhs=" << f.rhs << "\n";
        }
        emit(opt, j, t.str());
        return all ? 0 : 1;
    }

    if (opt.command == "chiral-check") {
        Ideal I(parse_polys(opt.gens, "generator"), MonomialOrder{}, budget);
        auto cx = is_chiral_ideal(jr, I);
        json j;
        j["chiral"] = !cx.has_value();
        std::ostringstream t;
        if (cx) {
            j["counterexample"] = {{"source", cx->source.str()},
                                   {"mode", cx->mode},
                                   {"generator", cx->generator.str()},
                                   {"image", cx->image.str()}};
            t << "not chiral: " << cx->source.str() << "_(" << cx->mode << ") maps "
              << cx->generator.str() << " to " << cx->image.str() << ", outside the ideal\n";
        } else {
            t << "chiral\n";
        }
        emit(opt, j, t.str());
        return 0;
    }

    if (opt.command == "core") {
        Ideal I(parse_polys(opt.gens, "generator"), MonomialOrder{}, budget);
        auto res = chiral_core_upto(jr, I, opt.degree_bound, opt.max_iter,
                                    total_degree_grading(jr));
        json j;
        j["basis"] = poly_list(res.basis);
        j["converged"] = res.converged;
        j["iterations"] = res.iterations;
        std::ostringstream t;
        t << "core basis up to degree " << opt.degree_bound << " (dim " << res.basis.size()
          << ", " << (res.converged ? "converged" : "NOT converged") << " after "
          << res.iterations << " iterations):\n";
        for (const auto& p : res.basis) t << "  " << p.str() << "\n";
        emit(opt, j, t.str());
        return 0;
    }

    if (opt.command == "center") {
        Ideal Q(parse_polys(opt.gens, "generator"), MonomialOrder{}, budget);
        auto basis = vp_center_upto(jr, Q, opt.degree_bound, total_degree_grading(jr));
        json j;
        j["basis"] = poly_list(basis);
        std::ostringstream t;
        t << "center basis up to degree " << opt.degree_bound << " (dim " << basis.size()
          << "):\n";
        for (const auto& p : basis) t << "  " << p.str() << "\n";
        emit(opt, j, t.str());
        return 0;
    }

    if (opt.command == "rank") {
        RankMatrix M = build_rank_matrix(jr);
        JetPoint x = parse_point(jr, opt.point);
        RankInfo info = rank_at(M, x);
        json j;
        j["rank"] = info.rank;
        j["rk"] = info.rk;
        std::ostringstream t;
        t << "rank " << info.rank << ", rk " << info.rk << "\n";
        emit(opt, j, t.str());
        return 0;
    }

    if (opt.command == "strata") {
        int r = static_cast<int>(R.vars.size());
        json j = json::array();
        std::ostringstream t;
        for (int s = 0; s <= r; ++s) {
            Stratum st = stratum(jr, s);
            auto cx = is_chiral_ideal(jr, st.jet_ideal);
            json e;
            e["j"] = s;
            e["base_ideal"] = poly_list(st.base_ideal.generators());
            e["chiral"] = !cx.has_value();
            j.push_back(e);
            t << "stratum " << s << ": " << st.base_ideal.generators().size()
              << " generators, jet ideal " << (cx ? "not chiral" : "chiral") << "\n";
            for (const auto& g : st.base_ideal.generators()) t << "  " << g.str() << "\n";
        }
        emit(opt, j, t.str());
        return 0;
    }

    if (opt.command == "fibers") {
        LieAlgebraData L;
        L.ring = R;
        L.invariants = parse_polys(opt.invariants, "invariant");
        if (L.invariants.empty()) throw ParseError("fibers needs at least one --invariant");
        FiberSpec spec = parse_xi(opt.level, opt.xi);
        Ideal I = fiber_ideal(L, jr, spec);
        FiberSpec zero;
        zero.level = opt.level;
        Ideal I0 = fiber_ideal(L, jr, zero);
        std::map<VarId, long> w;
        for (const auto& v : jr.jet_vars()) w[v] = 1;
        bool gr_eq = ideal_equal(initial_ideal(I, w),
                                 Ideal(I0.generators(), MonomialOrder::weighted(w), budget));
        auto cx = is_chiral_ideal(jr, I);
        json j;
        j["generators"] = poly_list(I.generators());
        j["chiral"] = !cx.has_value();
        j["initial_ideal_is_zero_fiber"] = gr_eq;
        std::ostringstream t;
        t << "fiber ideal (" << I.generators().size() << " generators):\n";
        for (const auto& g : I.generators()) t << "  " << g.str() << "\n";
        t << "chiral: " << (cx ? "no" : "yes") << "\n";
        t << "initial ideal equals zero-fiber ideal: " << (gr_eq ? "yes" : "no") << "\n";
        emit(opt, j, t.str());
        return 0;
    }

    if (opt.command == "center-iso") {
        if (R.vars.size() != 1 || !R.has_poisson() || !R.poisson[0][0].is_zero())
            throw ParseError("center-iso expects the one-variable slice ring with zero bracket");
        SlicePresentation S = regular_slice_sl2();
        S.ring = R; // keep the user's variable name and weights
        S.restricted_invariants = {Polynomial::var(R.vars[0])};
        auto rep = center_isomorphism_check(S, opt.level, opt.degree_bound);
        json j;
        j["equal"] = rep.equal;
        j["invariants_contained"] = rep.invariants_contained;
        j["center_is_everything"] = rep.center_is_everything;
        j["center_dims"] = json::object();
        j["invariant_dims"] = json::object();
        for (const auto& [d, k] : rep.center_dims) j["center_dims"][std::to_string(d)] = k;
        for (const auto& [d, k] : rep.invariant_dims)
            j["invariant_dims"][std::to_string(d)] = k;
        std::ostringstream t;
        t << "graded dimensions (degree: center / invariant span):\n";
        for (const auto& [d, k] : rep.center_dims) {
            auto it = rep.invariant_dims.find(d);
            t << "  " << d << ": " << k << " / " << (it == rep.invariant_dims.end() ? 0 : it->second)
              << "\n";
        }
        t << "invariant span contained in center: " << (rep.invariants_contained ? "yes" : "no")
          << "\n";
        t << "graded dimensions equal: " << (rep.equal ? "yes" : "no") << "\n";
        emit(opt, j, t.str());
        return rep.equal ? 0 : 1;
    }

    throw ParseError("unknown command: " + opt.command);
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"jet schemes, vertex Poisson structures, rank strata"};
    app.add_option("command", opt.command,
                   "jet-ring|bracket|axioms|chiral-check|core|center|rank|strata|fibers|center-iso")
        ->required();
    app.add_option("input", opt.input_path, "ring presentation JSON file")->required();
    app.add_option("--level", opt.level, "jet level n")->check(CLI::NonNegativeNumber);
    app.add_option("--degree-bound", opt.degree_bound, "degree truncation d")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--samples", opt.samples, "samples per axiom");
    app.add_option("--max-iter", opt.max_iter, "core iteration cap");
    app.add_option("--point", opt.point, "jet point coordinates k=v")->delimiter(',');
    app.add_option("--xi", opt.xi, "fiber coordinates i,j=v");
    app.add_option("--gen", opt.gens, "ideal generator (repeatable)");
    app.add_option("--invariant", opt.invariants, "invariant polynomial (repeatable)");
    app.add_option("--lhs", opt.lhs, "bracket left operand");
    app.add_option("--rhs", opt.rhs, "bracket right operand");
    app.add_option("--budget-spairs", opt.budget_spairs, "S-pair reduction budget");
    app.add_option("--budget-degree", opt.budget_degree, "total degree budget");
    app.add_option("--output", opt.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return run(opt);
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
