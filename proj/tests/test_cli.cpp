#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "mpsym/cli.hpp"

namespace {

struct RunResult {
    int rc = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.rc = mpsym::cli_run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("symbol and kappa reproduce the published table") {
    RunResult r = run({"symbol", "--m", "1/2,0", "--s", "4", "--lambda", "[[],[3,2]]"});
    CHECK(r.rc == 0);
    CHECK(r.out == "1/2,3/2,5/2,7/2\n0,1,4,6\n");

    r = run({"kappa", "--m", "1/2,0", "--s", "4", "--lambda", "[[],[3,2]]"});
    CHECK(r.rc == 0);
    CHECK(r.out == "6,4,7/2,5/2,3/2,1,1/2,0\n");

    r = run({"kcompare", "--m", "1,0", "--lambda", "[[],[3,2]]", "--mu", "[[2,2,1],[]]"});
    CHECK(r.rc == 0);
    CHECK(r.out == "Less\n");

    r = run({"kcompare", "--m", "9/10,0", "--lambda", "[[],[3,2]]", "--mu",
             "[[2,2,1],[]]"});
    CHECK(r.out == "Incomparable\n");

    r = run({"nvalue", "--m", "1,0", "--s", "4", "--lambda", "[[],[3,2]]"});
    CHECK(r.out == "104\n");
}

TEST_CASE("bijection commands") {
    RunResult r = run({"tau", "--s", "1,-1", "--lambda", "[[2,2,1],[]]"});
    CHECK(r.rc == 0);
    CHECK(r.out == "[5,4,1,1]\n");

    r = run({"--l", "2", "tauinv", "--rho", "[5,4,1,1]"});
    CHECK(r.rc == 0);
    CHECK(r.out == "s: 1,-1\nlambda: [[2,2,1],[]]\n");

    r = run({"core", "--s", "2,-2"});
    CHECK(r.out == "[3,2,1]\n");

    r = run({"--l", "2", "jheart", "--rho", "[2,2,1]", "--j", "0"});
    CHECK(r.out == "[2,1]\n");
}

TEST_CASE("parameter commands") {
    RunResult r = run({"classify", "--theta", "0,1"});
    CHECK(r.rc == 0);
    CHECK(r.out == "Wall(d=0,+)\n");

    r = run({"classify", "--theta", "-1/2,3/2"});
    CHECK(r.out == "A_-1(+) = alpha((1,-1),(2,1),+)\n");

    r = run({"walls", "--h", "1,0", "--n", "2"});
    CHECK(r.out == "(i=1,j=1,m=0)\n");

    r = run({"walls", "--h", "1,1/3", "--n", "4"});
    CHECK(r.rc == 0);
    CHECK(r.out == "regular\n");

    r = run({"alcoverep", "--s", "1,-1", "--w", "2,1", "--sign", "+"});
    CHECK(r.out == "-1/2,3/2\n");
}

TEST_CASE("order and block commands") {
    RunResult r = run({"order", "--a", "[[],[3,2]]", "--b", "[[2,2,1],[]]", "--theta",
                       "1/2,1/2"});
    CHECK(r.rc == 0);
    CHECK(r.out == "Greater\n");

    r = run({"order", "--a", "[[],[3,2]]", "--b", "[[2,2,1],[]]", "--s", "1,-1", "--w",
             "2,1", "--sign", "+"});
    CHECK(r.out == "Less\n");

    r = run({"afn", "--m", "1/2,0", "--r", "1", "--lambda", "[[],[3,2]]"});
    CHECK(r.out == "65/2\n");

    r = run({"--l", "2", "blocks", "--n", "2", "--m", "0,0", "--s", "3"});
    CHECK(r.rc == 0);
    CHECK(r.out == "{[[],[2]],[[2],[]]}\n{[[],[1,1]],[[1,1],[]]}\n{[[1],[1]]}\n");

    r = run({"--l", "2", "--e", "2", "blocks-e", "--n", "2", "--h", "1,0"});
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "{[[],[2]]#0}\n{[[],[1,1]]#0}\n{[[1],[1]]#0} (split)\n{[[1],[1]]#1} (split)\n");

    r = run({"--l", "2", "hasse", "--n", "1", "--theta", "1/2,1/2", "--format", "pairs"});
    CHECK(r.out == "[[],[1]] -> [[1],[]]\n");

    r = run({"--l", "2", "hasse", "--n", "1", "--theta", "1/2,1/2"});
    CHECK(r.out.find("digraph") != std::string::npos);
}

TEST_CASE("json mode emits machine readable output") {
    RunResult r = run({"--json", "kappa", "--m", "1,0", "--s", "4", "--lambda",
                       "[[],[3,2]]"});
    REQUIRE(r.rc == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["kappa"].size() == 9);
    CHECK(j["kappa"][0] == "6");

    r = run({"--json", "tau", "--s", "1,-1", "--lambda", "[[2,2,1],[]]"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["rho"] == nlohmann::json::array({5, 4, 1, 1}));

    r = run({"--json", "--l", "2", "blocks", "--n", "2", "--m", "0,0", "--s", "3"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["classes"].size() == 3);

    r = run({"--json", "--l", "2", "--max-n", "2", "verify", "tau-transpose"});
    REQUIRE(r.rc == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["suite"] == "tau-transpose");
    CHECK(j["cases"] == 40);
    CHECK(j["passed"] == true);
    CHECK(j["counterexamples"].empty());
}

TEST_CASE("verify text report") {
    RunResult r = run({"--l", "2", "--max-n", "2", "verify", "tau-transpose"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("suite: tau-transpose\n") != std::string::npos);
    CHECK(r.out.find("cases: 40\n") != std::string::npos);
    CHECK(r.out.find("\nPASS\n") != std::string::npos);
}

TEST_CASE("domain errors exit 1 with the error name on stderr") {
    RunResult r = run({"symbol", "--m", "1/2,0", "--s", "2", "--lambda", "[[],[3,2]]"});
    CHECK(r.rc == 1);
    CHECK(r.err.rfind("SizeTooSmall:", 0) == 0);

    r = run({"afn", "--m", "1,0", "--r", "0", "--lambda", "[[],[1]]"});
    CHECK(r.rc == 1);
    CHECK(r.err.rfind("ZeroR:", 0) == 0);

    r = run({"order", "--a", "[[],[1]]", "--b", "[[1],[]]", "--theta", "0,1"});
    CHECK(r.rc == 1);
    CHECK(r.err.rfind("OnWall:", 0) == 0);

    r = run({"verify", "nope"});
    CHECK(r.rc == 1);
    CHECK(r.err.rfind("UnknownSuite:", 0) == 0);

    r = run({"tau", "--s", "2/3,1/3,-1", "--lambda", "[[],[],[]]"});
    CHECK(r.rc == 1);
    CHECK(r.err.rfind("MalformedCharge:", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
    RunResult r = run({});
    CHECK(r.rc == 2);

    r = run({"kappa", "--m", "1,0", "--lambda", "garbage"});
    CHECK(r.rc == 2);
    CHECK(r.err.rfind("usage error:", 0) == 0);

    r = run({"no-such-command"});
    CHECK(r.rc == 2);

    r = run({"kappa", "--m", "1,0"});
    CHECK(r.rc == 2);
}

TEST_CASE("help exits 0") {
    RunResult r = run({"--help"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("Usage") != std::string::npos);

    r = run({"verify", "--help"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("thm-kappa-tau") != std::string::npos);
}
