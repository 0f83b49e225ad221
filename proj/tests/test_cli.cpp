#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "../tools/cli_app.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = mdim::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify emits the family scorecard as csv") {
    const auto r = run_cli({"verify", "--n", "8..10"});
    CHECK(r.code == mdim::cli::exit_ok);
    CHECK(r.out ==
          "n,k,expected,beta,psi,sdim,witness_ok,verdict\n"
          "8,3,4,4,4,4,true,pass\n"
          "10,4,5,5,5,5,true,pass\n");
    CHECK(r.err == "verify: skipping n=9 (family requires even n >= 8)\n");
}

TEST_CASE("verify json output parses and carries the expected fields") {
    const auto r = run_cli({"verify", "--n", "8", "--format", "json"});
    REQUIRE(r.code == mdim::cli::exit_ok);
    const auto arr = nlohmann::json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["n"] == 8);
    CHECK(arr[0]["k"] == 3);
    CHECK(arr[0]["expected"] == 4);
    CHECK(arr[0]["beta"] == 4);
    CHECK(arr[0]["psi"] == 4);
    CHECK(arr[0]["sdim"] == 4);
    CHECK(arr[0]["witness_ok"] == true);
    CHECK(arr[0]["verdict"] == "pass");
}

TEST_CASE("verify with no valid order in range is a usage error") {
    const auto r = run_cli({"verify", "--n", "4..7"});
    CHECK(r.code == mdim::cli::exit_usage);
    CHECK(r.err.find("no valid n") != std::string::npos);
}

TEST_CASE("dims prints one json line per solved problem") {
    const auto r = run_cli({"dims", "8", "3", "--no-timing"});
    REQUIRE(r.code == mdim::cli::exit_ok);
    CHECK(r.out ==
          "{\"problem\":\"beta\",\"n\":8,\"optimum\":4,\"witness\":[0,1,2,3],"
          "\"method\":\"enumeration\",\"nodes\":83}\n"
          "{\"problem\":\"psi\",\"n\":8,\"optimum\":4,\"witness\":[0,1,2,3],"
          "\"method\":\"enumeration\",\"nodes\":4}\n"
          "{\"problem\":\"sdim\",\"n\":8,\"optimum\":4,\"witness\":[0,1,2,3],"
          "\"method\":\"enumeration\",\"nodes\":4}\n");
}

TEST_CASE("dims with timing has a millis field, without it none") {
    const auto with = run_cli({"dims", "8", "1", "--which", "beta"});
    REQUIRE(with.code == mdim::cli::exit_ok);
    const auto j = nlohmann::json::parse(with.out);
    CHECK(j.contains("millis"));
    CHECK(j["optimum"] == 2);
    CHECK(j["witness"] == nlohmann::json({0, 1}));
    const auto without = run_cli({"dims", "8", "1", "--which", "beta", "--no-timing"});
    CHECK_FALSE(nlohmann::json::parse(without.out).contains("millis"));
}

TEST_CASE("dims runs both strong-resolving routes on request") {
    const auto r = run_cli({"dims", "8", "3", "--which", "sdim", "--method", "both",
                            "--no-timing"});
    REQUIRE(r.code == mdim::cli::exit_ok);
    std::istringstream lines(r.out);
    std::string first, second;
    REQUIRE(std::getline(lines, first));
    REQUIRE(std::getline(lines, second));
    const auto a = nlohmann::json::parse(first);
    const auto b = nlohmann::json::parse(second);
    CHECK(a["method"] == "enumeration");
    CHECK(b["method"] == "vertex_cover_reduction");
    CHECK(a["optimum"] == b["optimum"]);
    CHECK(a["witness"] == b["witness"]);
}

TEST_CASE("dims table format is human readable") {
    const auto r = run_cli({"dims", "8", "3", "--which", "beta", "--format", "table",
                            "--no-timing"});
    REQUIRE(r.code == mdim::cli::exit_ok);
    CHECK(r.out == "beta = 4  witness {0,1,2,3}  method enumeration  nodes 83\n");
}

TEST_CASE("one-based labels shift every printed vertex") {
    const auto d = run_cli({"dims", "8", "3", "--which", "beta", "--one-based", "--no-timing"});
    CHECK(nlohmann::json::parse(d.out)["witness"] == nlohmann::json({1, 2, 3, 4}));
    const auto w = run_cli({"witness", "8", "--one-based"});
    CHECK(w.out.find("witness: {1,2,3,4}") != std::string::npos);
    const auto g = run_cli({"graph", "4", "1", "--format", "json", "--one-based"});
    const auto gj = nlohmann::json::parse(g.out);
    CHECK(gj["edges"][0] == nlohmann::json({1, 2}));
}

TEST_CASE("graph emits dot by default and json or distance csv on request") {
    const auto dot = run_cli({"graph", "8", "3"});
    REQUIRE(dot.code == mdim::cli::exit_ok);
    CHECK(dot.out.rfind("graph G {", 0) == 0);
    CHECK(dot.out.find("  0 -- 1;\n") != std::string::npos);

    const auto js = run_cli({"graph", "8", "3", "--format", "json"});
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["n"] == 8);
    CHECK(j["edge_count"] == 24);
    CHECK(j["edges"].size() == 24);

    const auto csv = run_cli({"graph", "8", "1", "--format", "csv"});
    CHECK(csv.out.rfind("0,1,2,3,4,3,2,1\n", 0) == 0);
}

TEST_CASE("sweep tabulates all half-widths of each order") {
    const auto r = run_cli({"sweep", "--n", "8..8"});
    REQUIRE(r.code == mdim::cli::exit_ok);
    CHECK(r.out ==
          "n,k,beta,psi,sdim,omega,diameter\n"
          "8,1,2,3,4,2,4\n"
          "8,2,3,3,5,3,2\n"
          "8,3,4,4,4,4,2\n");
}

TEST_CASE("sweep marks budget-starved cells instead of failing") {
    const auto r = run_cli({"sweep", "--n", "8..8", "--budget-subsets", "1"});
    REQUIRE(r.code == mdim::cli::exit_ok);
    CHECK(r.out.find("8,1,?,?,?,") != std::string::npos);
    // diameter needs no search and is always present
    CHECK(r.out.find(",4\n") != std::string::npos);
}

TEST_CASE("witness prints the canonical set and its three checks") {
    const auto r = run_cli({"witness", "8"});
    CHECK(r.code == mdim::cli::exit_ok);
    CHECK(r.out ==
          "n: 8\n"
          "witness: {0,1,2,3}\n"
          "resolving: true\n"
          "doubly_resolving: true\n"
          "strong_resolving: true\n");
    const auto j = run_cli({"witness", "10", "--format", "json"});
    const auto jj = nlohmann::json::parse(j.out);
    CHECK(jj["witness"] == nlohmann::json({0, 1, 2, 3, 4}));
    CHECK(jj["resolving"] == true);
}

TEST_CASE("usage and domain failures exit with code 2") {
    CHECK(run_cli({"graph", "8", "5"}).code == mdim::cli::exit_usage);   // k out of range
    CHECK(run_cli({"witness", "7"}).code == mdim::cli::exit_usage);      // odd order
    CHECK(run_cli({"verify", "--n", "5..x"}).code == mdim::cli::exit_usage);
    CHECK(run_cli({"dims", "8", "3", "--method", "fast"}).code == mdim::cli::exit_usage);
    CHECK(run_cli({"dims", "8", "3", "--format", "xml"}).code == mdim::cli::exit_usage);
    CHECK(run_cli({"dims", "8", "3", "--which", "gamma"}).code == mdim::cli::exit_usage);
    CHECK(run_cli({"sweep", "--n", "8", "--format", "json"}).code == mdim::cli::exit_usage);
    CHECK(run_cli({"dims", "8", "3", "--budget-subsets", "0"}).code == mdim::cli::exit_usage);
    CHECK(run_cli({}).code == mdim::cli::exit_usage);                    // no subcommand
    const auto bad = run_cli({"graph", "8", "5"});
    CHECK(bad.err.rfind("error: ", 0) == 0);
}

TEST_CASE("help requests exit cleanly with code 0") {
    const auto top = run_cli({"--help"});
    CHECK(top.code == mdim::cli::exit_ok);
    CHECK(top.out.find("graph") != std::string::npos);
    CHECK(run_cli({"dims", "--help"}).code == mdim::cli::exit_ok);
}

TEST_CASE("budget exhaustion exits with code 3 and reports bounds") {
    const auto r = run_cli({"dims", "12", "2", "--budget-subsets", "3"});
    CHECK(r.code == mdim::cli::exit_budget);
    CHECK(r.err.rfind("budget exhausted: ", 0) == 0);
    CHECK(r.err.find("bounds ") != std::string::npos);
    CHECK(r.err.find("nodes ") != std::string::npos);
}

TEST_CASE("verify output is byte-identical across thread counts") {
    const auto base = run_cli({"verify", "--n", "8..14", "--no-timing"});
    REQUIRE(base.code == mdim::cli::exit_ok);
    for (int t : {2, 8}) {
        const auto r = run_cli({"verify", "--n", "8..14", "--no-timing", "--threads",
                                std::to_string(t)});
        REQUIRE(r.code == base.code);
        REQUIRE(r.out == base.out);
        REQUIRE(r.err == base.err);
    }
}

TEST_CASE("sweep output is byte-identical across thread counts") {
    const auto base = run_cli({"sweep", "--n", "4..10"});
    REQUIRE(base.code == mdim::cli::exit_ok);
    for (int t : {2, 8}) {
        const auto r = run_cli({"sweep", "--n", "4..10", "--threads", std::to_string(t)});
        REQUIRE(r.out == base.out);
        REQUIRE(r.err == base.err);
    }
}
