// End-to-end checks of the installed command-line surface: spawns the real
// binary, captures stdout, and checks payloads and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MINKORDER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) {
    return std::string(MINKORDER_TEST_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("count on the worked example") {
    RunResult r = run_cli("count " + data("example4.json"));
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 7);
}

TEST_CASE("classify prints an all-spacelike matrix") {
    RunResult r = run_cli("classify " + data("example4.json"));
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    for (int i = 0; i < 4; ++i)
        for (int jj = 0; jj < 4; ++jj)
            CHECK(j["matrix"][i][jj] == (i == jj ? "self" : "spacelike"));
}

TEST_CASE("sweep reproduces the reference Lambda") {
    RunResult r = run_cli("sweep " + data("example4.json"));
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["lambda"] ==
          json::parse("[[1,3,2,4],[1,2,3,4],[1,2,4,3],[2,1,4,3],[2,4,1,3],[4,2,1,3],[4,2,3,1]]"));
}

TEST_CASE("enumerate honors --no-ball and --cap") {
    RunResult r = run_cli("enumerate --no-ball " + data("example4.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["ball_restricted"] == false);

    RunResult capped = run_cli("count --cap 3 " + data("example4.json"));
    CHECK(capped.exit_code == 2);
}

TEST_CASE("remaining event commands run clean on the worked example") {
    for (const std::string cmd : {"graph", "poset", "bounds", "generic", "charpoly",
                                  "chromatic"}) {
        RunResult r = run_cli(cmd + " " + data("example4.json"));
        REQUIRE(r.exit_code == 0);
        CHECK(!json::parse(r.out).empty());
    }
}

TEST_CASE("mc is seed-deterministic at the CLI") {
    RunResult a = run_cli("mc --samples 200 --seed 9 " + data("example4.json"));
    RunResult b = run_cli("mc --samples 200 --seed 9 " + data("example4.json"));
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("ranking and classical subcommands") {
    RunResult r = run_cli("ranking " + data("times3.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["regions"] == "2");

    RunResult c = run_cli("classical " + data("collinear3.json"));
    REQUIRE(c.exit_code == 0);
    CHECK(json::parse(c.out)["count"] == 4);
}

TEST_CASE("text format renders without error") {
    RunResult r = run_cli("--format text count " + data("example4.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("count: 7") != std::string::npos);
}

TEST_CASE("exit codes: parse error 1, precondition 2") {
    CHECK(run_cli("count " + data("no_such_file.json")).exit_code == 1);
    CHECK(run_cli("count " + data("lightlike.json")).exit_code == 2);
    CHECK(run_cli("sweep " + data("events2d.json")).exit_code == 2);
    CHECK(run_cli("count --bogus-flag " + data("example4.json")).exit_code == 1);
    CHECK(run_cli("").exit_code == 1); // a subcommand is required
}

TEST_CASE("outputs are byte-identical across runs") {
    RunResult a = run_cli("enumerate " + data("example4.json"));
    RunResult b = run_cli("enumerate " + data("example4.json"));
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}
