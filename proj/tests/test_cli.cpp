#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "jetpva/polynomial.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the tool with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("JETPVA_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& file) {
    const char* dir = std::getenv("JETPVA_DATA_DIR");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + file;
}

} // namespace

TEST_CASE("jet-ring") {
    auto r = run_cli("jet-ring " + data("sl2.json") + " --level 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("variables (6): e e_(-2) h h_(-2) f f_(-2)") != std::string::npos);
    CHECK(r.out.find("relations (0)") != std::string::npos);
}

TEST_CASE("bracket") {
    auto r = run_cli("bracket " + data("sl2.json") + " --lhs h --rhs e");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{h, e} = 2*e\n");
}

TEST_CASE("rank") {
    auto r = run_cli("rank " + data("sl2.json") + " --level 0 --point e=1,h=0,f=0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "rank 2, rk 2\n");

    auto r1 = run_cli("rank " + data("sl2.json") + " --level 1 --point e=1");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == "rank 4, rk 2\n");
}

TEST_CASE("axioms pass and are deterministic") {
    std::string cmd = "axioms " + data("sl2.json") + " --level 2 --samples 50 --seed 7";
    auto a = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("PVA-1 translation: pass") != std::string::npos);
    CHECK(a.out.find("FAIL") == std::string::npos);

    auto b = run_cli(cmd);
    CHECK(a.out == b.out); // byte-identical rerun

    auto c = run_cli(cmd + " --output json");
    CHECK(c.exit_code == 0);
    auto d = run_cli(cmd + " --output json");
    CHECK(c.out == d.out);
}

TEST_CASE("json output round-trips through the polynomial grammar") {
    auto r = run_cli("center " + data("sl2.json") +
                     " --level 1 --degree-bound 3 --output json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["basis"].size() == 3);
    for (const auto& entry : j["basis"]) {
        jetpva::Polynomial p = jetpva::parse_polynomial(entry.get<std::string>());
        CHECK(p.str() == entry.get<std::string>());
    }

    auto s = run_cli("strata " + data("sl2.json") + " --level 1 --output json");
    CHECK(s.exit_code == 0);
    auto js = nlohmann::json::parse(s.out);
    CHECK(js[0]["chiral"] == true);
    for (const auto& entry : js[0]["base_ideal"])
        CHECK_NOTHROW(jetpva::parse_polynomial(entry.get<std::string>()));
}

TEST_CASE("core and chiral-check") {
    auto r = run_cli("core " + data("sl2.json") + " --level 0 --degree-bound 3 --gen e");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("dim 0, converged") != std::string::npos);

    auto c = run_cli("chiral-check " + data("sl2.json") +
                     " --level 1 --gen \"e*f + 1/4*h^2\"");
    CHECK(c.exit_code == 0);
    CHECK(c.out == "chiral\n");

    auto nc = run_cli("chiral-check " + data("sl2.json") + " --level 0 --gen e");
    CHECK(nc.exit_code == 0);
    CHECK(nc.out.find("not chiral") != std::string::npos);
}

TEST_CASE("input errors exit with 1") {
    CHECK(run_cli("jet-ring /nonexistent.json").exit_code == 1);

    auto bad = run_cli("chiral-check " + data("sl2.json") + " --gen \"e +\"");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("e +") != std::string::npos); // names the offending input

    CHECK(run_cli("frobnicate " + data("sl2.json")).exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("budget overflow exits with 2") {
    auto r = run_cli("chiral-check " + data("sl2.json") +
                     " --level 0 --gen \"e^2 - h\" --gen \"e*h - f\" --budget-degree 1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("resource limit") != std::string::npos);
}

TEST_CASE("center-iso on the slice fixture") {
    auto r = run_cli("center-iso " + data("sl2_slice_regular.json") +
                     " --level 1 --degree-bound 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("graded dimensions equal: yes") != std::string::npos);

    // the full sl2 ring is not a slice presentation
    CHECK(run_cli("center-iso " + data("sl2.json") + " --level 1").exit_code == 1);
}
