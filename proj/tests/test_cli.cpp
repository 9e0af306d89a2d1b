#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "aztec/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = aztec::cli_run(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("prob") {
    RunResult r = run({"prob", "--l", "0", "--m", "0", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "5/16\n");
    CHECK(run({"prob", "--l", "2", "--m", "0", "--n", "4"}).out == "0\n");
    CHECK(run({"prob", "--n", "6", "--cell-a", "0,-1", "--cell-b", "0,0"}).out == "1/4\n");
}

TEST_CASE("ratfunc") {
    RunResult r = run({"ratfunc", "--l", "0", "--m", "-4", "--alpha", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "(-10 - 12*p - 6*p^2)/(1 + 2*p + p^2)\n");
    CHECK(run({"ratfunc", "--l", "0", "--m", "0", "--alpha", "0"}).out ==
          "absent (probability is 0 by parity)\n");
    CHECK(run({"ratfunc", "--l", "0", "--m", "0", "--alpha", "3"}).out == "(0)\n");
}

TEST_CASE("count") {
    CHECK(run({"count", "--n", "3"}).out == "64\n");
    RunResult holed = run({"count", "--n", "6", "--remove", "-1,-1", "--remove", "-1,0",
                           "--remove", "0,-1", "--remove", "0,0"});
    CHECK(holed.out == "262144\n");
    RunResult toobig = run({"count", "--n", "13"});
    CHECK(toobig.code == 1);
    CHECK(toobig.err.find("too large") != std::string::npos);
}

TEST_CASE("cr") {
    CHECK(run({"cr", "--l", "0", "--m", "-1", "--n", "2"}).out == "1/2\n");
    CHECK(run({"cr", "--l", "0", "--m", "0", "--alpha", "1", "--symbolic"}).out == "(4)\n");
}

TEST_CASE("hole") {
    CHECK(run({"hole", "--l", "0", "--m", "0", "--n", "6"}).out == "262144\n");
    RunResult oracle = run({"hole", "--l", "0", "--m", "0", "--n", "4", "--oracle"});
    CHECK(oracle.code == 0);
    CHECK(oracle.out == "72 (oracle agrees)\n");
    RunResult sym = run({"hole", "--l", "0", "--m", "0", "--alpha", "1", "--symbolic"});
    CHECK(sym.out == "g = (8)\nh = (8)\n");
}

TEST_CASE("asym") {
    CHECK(run({"asym", "--x", "0", "--y", "0"}).out == "0.25\n");
    CHECK(run({"asym", "--x", "0.8", "--y", "0"}).out == "0\n");
}

TEST_CASE("sample is deterministic and emits tiling JSON") {
    RunResult a = run({"sample", "--n", "4", "--seed", "7"});
    RunResult b = run({"sample", "--n", "4", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    nlohmann::json t = nlohmann::json::parse(a.out);
    CHECK(t["order"] == 4);
    CHECK(t["dominoes"].size() == 4 * 5);
    // default seed is printed
    RunResult c = run({"sample", "--n", "2"});
    CHECK(c.err.find("seed") != std::string::npos);
}

TEST_CASE("mc runs and reports frequency") {
    RunResult r = run({"mc", "--n", "5", "--cell-a", "-1,0", "--cell-b", "0,0", "--samples",
                       "2000", "--seed", "9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("frequency") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"prob", "--l", "0", "--m", "0"}).code == 2);       // missing --n
    CHECK(run({"bogus"}).code == 2);                              // unknown subcommand
    CHECK(run({"prob", "--l", "x", "--m", "0", "--n", "1"}).code == 2);
    CHECK(run({"cr", "--l", "0", "--m", "0", "--symbolic"}).code == 2);  // needs --alpha
    CHECK(run({"hole", "--l", "0", "--m", "0", "--symbolic"}).code == 2);
    CHECK(run({"count", "--n", "2", "--remove", "9,9"}).code == 1);  // domain error
    CHECK(run({"mc", "--n", "4", "--cell-a", "0,0", "--cell-b", "3,3", "--samples", "10"}).code ==
          1);
}

TEST_CASE("json envelope") {
    RunResult r = run({"--json", "prob", "--l", "0", "--m", "0", "--n", "5"});
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "prob");
    CHECK(j["result"] == "5/16");
    CHECK(j["inputs"]["n"] == 5);
    CHECK(j["provenance"]["tool"] == "aztec");

    RunResult s = run({"--json", "sample", "--n", "3", "--seed", "5"});
    nlohmann::json sj = nlohmann::json::parse(s.out);
    CHECK(sj["result"]["order"] == 3);
    CHECK(sj["inputs"]["seed"] == 5);
}

TEST_CASE("oracle cap env override") {
    setenv("AZTEC_ORACLE_CAP", "3", 1);
    CHECK(run({"count", "--n", "4"}).code == 1);
    CHECK(run({"count", "--n", "3"}).out == "64\n");
    setenv("AZTEC_ORACLE_CAP", "junk", 1);
    CHECK(run({"count", "--n", "3"}).code == 1);
    unsetenv("AZTEC_ORACLE_CAP");
    CHECK(run({"count", "--n", "4"}).out == "1024\n");
}

TEST_CASE("verify smoke") {
    RunResult r = run({"verify", "--suite", "kravchuk"});
    CHECK(r.code == 0);
    CHECK(r.out.find("kravchuk.table1") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
}
