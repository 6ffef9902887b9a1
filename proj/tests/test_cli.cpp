#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "helpers.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string("'") + MINLAP_CLI_PATH + "' " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) {
    return std::string("'") + MINLAP_FIXTURE_DIR + "/" + name + "'";
}

std::string bad(const std::string& name) {
    return std::string("'") + MINLAP_TEST_DATA_DIR + "/" + name + "'";
}

}  // namespace

TEST_CASE("validate exit codes follow the contract") {
    REQUIRE(run("validate " + fixture("f01_rank1.json")).code == 0);
    REQUIRE(run("validate " + fixture("f05_rank2_block.json")).code == 0);
    // resonant at infinity: domain failure, not a usage error
    REQUIRE(run("validate " + fixture("f07_rank2_null.json")).code == 1);
    REQUIRE(run("validate " + bad("bad_resonant.json")).code == 1);
    REQUIRE(run("validate " + bad("bad_eigen.json")).code == 1);
    // decimal literal: parse error
    REQUIRE(run("validate " + bad("bad_parse.json")).code == 2);
    REQUIRE(run("validate '/nonexistent/path.json'").code == 2);
}

TEST_CASE("validate reports the violated clause") {
    auto r = run("validate " + bad("bad_resonant.json"));
    REQUIRE(r.code == 1);
    REQUIRE(r.out.find("Re(mu) integral") != std::string::npos);
    auto ok = run("validate " + fixture("f01_rank1.json"));
    REQUIRE(ok.out.find("\"passed\": true") != std::string::npos);
    REQUIRE(ok.out.find("input_digest") != std::string::npos);
}

TEST_CASE("transform emits a deterministic report") {
    std::string args = "transform " + fixture("f03_rank1_twopoints.json") + " --full --involution";
    auto a = run(args);
    auto b = run(args);
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(a.out.find("\"x_action\"") != std::string::npos);
    REQUIRE(a.out.find("\"involution\"") != std::string::npos);
    REQUIRE(a.out.find("-X(xi) dxi") != std::string::npos);
    // no decimal approximations anywhere in a report
    REQUIRE(a.out.find("0.") == std::string::npos);
}

TEST_CASE("predict-only skips the cokernel computation") {
    auto r = run("transform " + fixture("f05_rank2_block.json") + " --predict-only");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("\"prediction\"") != std::string::npos);
    REQUIRE(r.out.find("x_action") == std::string::npos);
    REQUIRE(r.out.find("\"transform\"") == std::string::npos);
    // default mode carries the transform summary but not the entries
    auto d = run("transform " + fixture("f05_rank2_block.json"));
    REQUIRE(d.code == 0);
    REQUIRE(d.out.find("\"transform\"") != std::string::npos);
    REQUIRE(d.out.find("x_action") == std::string::npos);
}

TEST_CASE("transform gates on the finite-side validators") {
    // resonant at infinity only: transform still legal, rank drops to zero
    auto r = run("transform " + fixture("f07_rank2_null.json"));
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("\"rank\": 0") != std::string::npos);
    // resonant at a finite point: rejected as a domain failure
    REQUIRE(run("transform " + bad("bad_resonant.json")).code == 1);
    REQUIRE(run("transform " + bad("bad_parse.json")).code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    REQUIRE(run("frobnicate").code == 2);
    REQUIRE(run("").code == 2);
    REQUIRE(run("transform").code == 2);
    auto conflict = run("transform " + fixture("f01_rank1.json") + " --predict-only --full", true);
    REQUIRE(conflict.code == 2);
    REQUIRE(run("--help").code == 0);
}

TEST_CASE("timing goes to stderr, never into the report") {
    std::string args = "transform " + fixture("f01_rank1.json") + " --timing";
    auto clean = run(args);
    REQUIRE(clean.code == 0);
    REQUIRE(clean.out.find(" ms") == std::string::npos);
    auto merged = run(args, true);
    REQUIRE(merged.out.find(" ms") != std::string::npos);
}

TEST_CASE("corpus-check confirms the stored golden reports") {
    auto r = run(std::string("corpus-check '") + MINLAP_FIXTURE_DIR + "'");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("all identical") != std::string::npos);
}
