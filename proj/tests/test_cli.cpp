// End-to-end tests driving the installed binary through a shell.

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& prefix = "") {
    std::string cmd = prefix + STATEFIBER_CLI_PATH " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
        r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const char* kTrefoil = "'X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)'";
const char* kPretzel =
    "'X(24,14,1,13) X(12,2,13,1) X(23,5,24,4) X(3,23,4,22) X(21,3,22,2) X(5,15,6,14) "
    "X(15,7,16,6) X(7,17,8,16) X(17,9,18,8) X(9,19,10,18) X(19,11,20,10) X(11,21,12,20)'";

}  // namespace

TEST_CASE("analyze reports a fiber verdict") {
    auto r = run(std::string("analyze ") + kTrefoil);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["diagram"]["crossings"] == 3);
    CHECK(j["diagram"]["writhe"] == 3);
    CHECK(j["diagram"]["alternating"] == true);
    CHECK(j["diagram"]["prime"] == true);
    CHECK(j["state"]["label"] == "AAA");
    CHECK(j["state"]["circles"] == 2);
    CHECK(j["verdict"]["verdict"] == "Fiber");
    CHECK(j["reduced_graph"]["chi"] == 1);
    CHECK(j["decomposition"]["composed_verdict"] == "Fiber");
}

TEST_CASE("analyze other states") {
    auto b = run(std::string("analyze --state all-b ") + kTrefoil);
    REQUIRE(b.exit_code == 0);
    auto jb = nlohmann::json::parse(b.out);
    CHECK(jb["verdict"]["verdict"] == "NotFiber:not-tree");
    CHECK(jb["verdict"]["reason"] == "graph-not-tree");
    CHECK(jb["verdict"]["witness_cycle"].size() == 3);

    // kinked trefoil: BAAA is a mixed state with both labels in one region
    auto m = run("analyze --state BAAA 'X(1,7,2,6) X(5,1,6,8) X(7,5,8,4) X(2,4,3,3)'");
    REQUIRE(m.exit_code == 0);
    auto jm = nlohmann::json::parse(m.out);
    CHECK(jm["verdict"]["verdict"] == "Inapplicable");
    CHECK(jm["verdict"]["reason"] == "state-not-homogeneous");
    CHECK_FALSE(jm["verdict"]["mixed_region"].is_null());
    CHECK(jm["decomposition"].is_null());
}

TEST_CASE("analyze with jones section") {
    auto r = run(std::string("analyze --jones ") + kTrefoil);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["jones"]["polynomial"] == "1*t^(2/2) + 1*t^(6/2) + -1*t^(8/2)");
    CHECK(j["jones"]["beta_prime"] == "0");
    CHECK(j["corollary"]["holds"] == true);
}

TEST_CASE("analyze pretty output is a flat table") {
    auto r = run(std::string("analyze --pretty ") + kTrefoil);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("verdict.verdict = \"Fiber\"") != std::string::npos);
    CHECK(r.out.find("diagram.writhe = 3") != std::string::npos);
}

TEST_CASE("input via stdin, file, and json") {
    auto stdin_run = run("analyze -", "echo 'X(1,1,2,2)' | ");
    REQUIRE(stdin_run.exit_code == 0);
    CHECK(nlohmann::json::parse(stdin_run.out)["verdict"]["verdict"] == "Fiber");

    std::string path = "cli_test_input.pd";
    std::ofstream(path) << "X(1,2,2,1)\n";
    auto file_run = run("analyze --file " + path);
    std::remove(path.c_str());
    REQUIRE(file_run.exit_code == 0);
    CHECK(nlohmann::json::parse(file_run.out)["diagram"]["writhe"] == -1);

    auto json_run = run("analyze '{\"crossings\": [[1,1,2,2]], \"free_loops\": 1}'");
    REQUIRE(json_run.exit_code == 0);
    auto j = nlohmann::json::parse(json_run.out);
    CHECK(j["diagram"]["free_loops"] == 1);
    CHECK(j["verdict"]["verdict"] == "NotFiber:split");
}

TEST_CASE("jones subcommand") {
    auto r = run(std::string("jones ") + kTrefoil);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["jones"]["k_half"] == 8);
    CHECK(j["jones"]["m_half"] == 2);
    CHECK(j["jones"]["alpha"] == "-1");

    auto c = run(std::string("jones --check-corollary ") + kTrefoil);
    CHECK(c.exit_code == 0);
    auto jc = nlohmann::json::parse(c.out);
    CHECK(jc["corollary"]["holds"] == true);
    CHECK(jc["corollary"]["a_side"]["fiber"] == true);
    CHECK(jc["corollary"]["b_side"]["tree"] == false);
}

TEST_CASE("graph subcommand") {
    auto dot = run(std::string("graph --format dot ") + kTrefoil);
    REQUIRE(dot.exit_code == 0);
    // 3 parallel edges in G plus 1 reduced edge
    size_t edges = 0;
    for (size_t p = dot.out.find("--"); p != std::string::npos; p = dot.out.find("--", p + 2))
        ++edges;
    CHECK(edges == 4);
    CHECK(dot.out.find("x3") != std::string::npos);
    CHECK(dot.out.find("A*3") != std::string::npos);

    auto js = run(std::string("graph --format json --state all-b ") + kTrefoil);
    REQUIRE(js.exit_code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["state_graph"]["vertices"] == 3);
    CHECK(j["state_graph"]["edges"].size() == 3);
    CHECK(j["reduced_graph"]["chi"] == 0);
}

TEST_CASE("corpus subcommand") {
    auto r = run("corpus");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("mismatches: 0") != std::string::npos);

    auto filtered = run("corpus --filter torus");
    CHECK(filtered.exit_code == 0);
    CHECK(filtered.out.find("fixtures: 6,") != std::string::npos);

    // --print regenerates exactly what is frozen in the bundled table
    auto printed = run("corpus --print");
    CHECK(printed.exit_code == 0);
    CHECK(printed.out.find("trefoil | ") != std::string::npos);
    CHECK(printed.out == run("corpus --print").out);
}

TEST_CASE("exit code contract") {
    CHECK(run(std::string("analyze ") + kTrefoil).exit_code == 0);
    CHECK(run("analyze 'X(1,2,3)'").exit_code == 2);
    CHECK(run("analyze 'X(1,2,3,4) X(3,4,1,2)'").exit_code == 2);  // not planar
    CHECK(run("analyze '{\"crossings\": 3}'").exit_code == 2);
    CHECK(run(std::string("jones --cap 8 ") + kPretzel).exit_code == 3);
    CHECK(run(std::string("jones ") + kPretzel, "STATEFIBER_CAP=8 ").exit_code == 3);
    CHECK(run(std::string("jones --cap 12 ") + kPretzel).exit_code == 0);
    CHECK(run("").exit_code == 64);
    CHECK(run("frobnicate").exit_code == 64);
    CHECK(run(std::string("analyze --no-such-flag ") + kTrefoil).exit_code == 64);
    CHECK(run(std::string("graph --format svg ") + kTrefoil).exit_code == 64);
    CHECK(run(std::string("analyze --state QQQ ") + kTrefoil).exit_code == 64);
}

TEST_CASE("reports are byte-stable across runs") {
    std::string cmd = std::string("analyze --jones ") + kTrefoil;
    CHECK(run(cmd).out == run(cmd).out);
    std::string cmd2 = std::string("analyze --state all-b ") + kPretzel;
    CHECK(run(cmd2).out == run(cmd2).out);
}
