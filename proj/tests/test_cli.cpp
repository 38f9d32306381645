#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "splitiv/json_io.hpp"
#include "test_util.hpp"

using namespace splitiv;
using namespace splitiv::testing;

namespace {

std::string cli_path;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Json run_json(const std::string& args) {
    RunResult r = run(args);
    REQUIRE(r.exit_code == 0);
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("equalize output matches the library rendering") {
    auto z2 = DvrContext::make_zp(2);
    Json j = run_json("equalize --dvr zp --p 2 --set 0,1,2 --json");
    CHECK(j["mult"] == Json::array({1, 3, 1}));
    CHECK(j["const_val"] == 3);
    CHECK(j["matrix"]["rows"] == Json::parse("[[2,0,1],[0,1,0],[1,0,2]]"));

    SplitPolynomial f = equalizing_polynomial(z2, els(z2, {0, 1, 2}));
    Json lib = split_polynomial_json(f);
    for (auto key : {"roots", "mult", "const_val"}) CHECK(j[key] == lib[key]);
}

TEST_CASE("classify verdicts exit 0 regardless of outcome") {
    Json j = run_json("classify --dvr zp --p 2 --set 0,1 --mult 1,1 --const-val 1 --json");
    CHECK(j["verdict"] == "absolutely-irreducible");

    j = run_json("classify --dvr zp --p 2 --set 0,1 --mult 2,1 --const-val 1 --json");
    CHECK(j["verdict"] == "not-absolutely-irreducible");
    CHECK(j["failed_condition"] == "wrong-multiplicities");
    CHECK(j["witness"]["expected_mult"] == Json::array({1, 1}));

    j = run_json("classify --dvr zp --p 3 --set 0,1 --mult 1,1 --const-val 0 --json");
    CHECK(j["failed_condition"] == "size-congruence-prefilter");

    auto z2 = DvrContext::make_zp(2);
    auto report = classify(make_split_polynomial(z2, els(z2, {0, 1}), bigs({2, 1}), BigInt(1)));
    CHECK(run_json("classify --dvr zp --p 2 --set 0,1 --mult 2,1 --const-val 1 --json") ==
          report_json(z2, report));
}

TEST_CASE("partition output") {
    Json j = run_json("partition --dvr zp --p 2 --set 0,1,2 --json");
    REQUIRE(j["blocks"].size() == 3);
    CHECK(j["blocks"][0]["rho"] == 2);
    CHECK(j["blocks"][1]["rho"] == 1);
    CHECK(j["blocks"][2]["rho"] == 2);

    // q = 5 keeps R in one piece.
    j = run_json("partition --dvr zp --p 5 --set 0,1 --json");
    REQUIRE(j["blocks"].size() == 1);
    CHECK(j["blocks"][0]["rho"] == 0);
    CHECK(j["blocks"][0]["members"] == Json::array({"0", "1"}));
}

TEST_CASE("balanced certificate") {
    Json j = run_json("balanced --dvr zp --p 2 --set 0,2 --json");
    CHECK(j["balanced"] == false);
    CHECK(j["union_measure"] == "1/2");
    CHECK(j.contains("uncovered"));

    j = run_json("balanced --dvr zp --p 2 --set 0,1 --json");
    CHECK(j["balanced"] == true);
}

TEST_CASE("oracle subcommand") {
    Json j = run_json(
        "oracle --dvr zp --p 2 --set 0,1 --mult 1,1 --const-val 1 --max-mult 4 --json");
    CHECK(j["verdict"] == "confirmed-up-to-bound");

    j = run_json(
        "oracle --dvr zp --p 2 --set 0,1 --mult 2,1 --const-val 1 --max-mult 2 --serial --json");
    CHECK(j["verdict"] == "refuted");
    CHECK(j["witness"]["roots"] == Json::array({"0"}));
}

TEST_CASE("enumerate emits one set per line") {
    RunResult r = run("enumerate --dvr zp --p 2 --max-level 1 --max-size 2 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[\"0\"]\n[\"1\"]\n[\"0\",\"1\"]\n");
}

TEST_CASE("pordering and binom") {
    Json j = run_json("pordering --dvr zp --p 2 --length 4 --pool-level 3 --json");
    CHECK(j["seq"] == Json::array({"0", "1", "2", "3"}));
    CHECK(j["alpha"] == Json::array({0, 0, 1, 1}));

    j = run_json("binom --dvr zp --p 2 --n 2 --json");
    CHECK(j["report"]["verdict"] == "absolutely-irreducible");
    CHECK(j["poly"]["const_val"] == 3);

    auto z2 = DvrContext::make_zp(2);
    CHECK(run_json("pordering --dvr zp --p 2 --length 4 --pool-level 3 --json") ==
          pordering_json(greedy_p_ordering(z2, 4, 3)));
}

TEST_CASE("fqt elements use semicolon-separated digit lists") {
    Json j = run_json("partition --dvr fqt --p 2 --set \"0;1;0,1\" --json");
    CHECK(j["blocks"].size() == 3);

    j = run_json("balanced --dvr fqt --p 3 --f 2 --set \"0;1;2;3;4;5;6;7;8\" --json");
    CHECK(j["balanced"] == true);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("classify --dvr zp --p 2 --set 0,1 --mult 1,1").exit_code == 2);  // missing flag
    CHECK(run("partition --dvr zp --p 4 --set 0,1").exit_code == 2);            // p not prime
    CHECK(run("partition --dvr zp --p 2 --set 0,x").exit_code == 2);            // bad element
    CHECK(run("equalize --dvr zp --p 2 --set 0,2").exit_code == 2);             // not balanced
    CHECK(run("pordering --dvr zp --p 2 --length 9 --pool-level 2").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("expanded coefficients for zp") {
    Json j = run_json("equalize --dvr zp --p 2 --set 0,1 --expand --json");
    // x(x-1) = x^2 - x: coefficients constant-first.
    CHECK(j["coeffs"] == Json::array({0, -1, 1}));
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli [doctest options] <path-to-cli>\n");
        return 1;
    }
    cli_path = argv[argc - 1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}
