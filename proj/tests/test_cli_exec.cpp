// Spawns the real CLI binary (path passed as argv[1]) and checks its
// observable contract: formats, determinism, exit codes.
#define DOCTEST_CONFIG_IMPLEMENT
#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = g_cli_path + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) output += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("table csv contains the d=4 row") {
    const auto r = run_cli("table --max-d 8 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("d,vertices,c,c_plus,c_minus") == 0);
    CHECK(r.output.find("4,7,31,38,24") != std::string::npos);
}

TEST_CASE("table json is schema-stable and deterministic") {
    const auto a = run_cli("table --max-d 150 --format json");
    const auto b = run_cli("table --max-d 150 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("{\"rows\":[{\"d\":2,\"vertices\":5,\"c\":\"1\"") == 0);
    // counts near d = 140 exceed 64-bit range; they must arrive as strings
    CHECK(a.output.find("\"d\":150,") != std::string::npos);
}

TEST_CASE("invalid arguments exit with code 2") {
    CHECK(run_cli("table --max-d 0").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("verify exits zero and reports the documented finding") {
    const auto r = run_cli("verify --max-size 6 --order 25");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
    CHECK(r.output.find("documented findings") != std::string::npos);
}

TEST_CASE("asymptotics honors the precision env var") {
    const auto r = run_cli("asymptotics --max-d 12");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("2.83928675521") != std::string::npos);
    const std::string cmd = "GALECOUNT_FLOAT_DIGITS=4 " + g_cli_path + " asymptotics --max-d 12 2>&1";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) output += buf.data();
    pclose(pipe);
    CHECK(output.find("= 2.839 ") != std::string::npos);
    CHECK(output.find("2.83928675521") == std::string::npos);
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    if (argc > 1 && argv[1][0] != '-') {
        g_cli_path = argv[1];
        ctx.applyCommandLine(argc - 1, argv + 1);
    } else {
        ctx.applyCommandLine(argc, argv);
    }
    if (g_cli_path.empty()) {
        std::fprintf(stderr, "usage: cli_tests <path-to-galecount-binary>\n");
        return 1;
    }
    return ctx.run();
}
