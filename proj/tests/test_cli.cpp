#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

// End-to-end checks of the command-line surface. The binary path arrives via
// the VQF_CLI_BIN environment variable (set by ctest); the cases are skipped
// when it is absent so the unit binary stays usable standalone.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("VQF_CLI_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

bool cli_available() { return std::getenv("VQF_CLI_BIN") != nullptr; }

}  // namespace

TEST_CASE("cli eval-mu") {
    if (!cli_available()) return;
    const RunResult r = run_cli("eval-mu --point 0,1,2,3 --alpha 1,0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[1.0,0.0,0.0,0.0]\n");
}

TEST_CASE("cli structural defect") {
    if (!cli_available()) return;
    const RunResult r = run_cli("structural --alpha 1,1,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{\"defect\":\"0/1\"}\n");
}

TEST_CASE("cli validation failures exit 2 with an error object") {
    if (!cli_available()) return;
    const RunResult unknown = run_cli("no-such-verb");
    CHECK(unknown.exit_code == 2);
    CHECK(nlohmann::json::parse(unknown.output).contains("error"));

    const RunResult bad_point = run_cli("eval-mu --point 1,2 --alpha 1,0,0");
    CHECK(bad_point.exit_code == 2);
    CHECK(nlohmann::json::parse(bad_point.output).contains("error"));

    const RunResult singular = run_cli("eval-mu --point 1,0,0,0 --alpha 1,0,0");
    CHECK(singular.exit_code == 2);
}

TEST_CASE("cli apply-vq reports a small kernel residual") {
    if (!cli_available()) return;
    const RunResult r = run_cli("apply-vq --point 0.3,0.8,-0.5,0.4 --alpha 2,1,0");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    double norm_sq = 0;
    for (const auto& c : j) norm_sq += c.get<double>() * c.get<double>();
    CHECK(norm_sq <= 1e-12);
}

TEST_CASE("cli fd step override") {
    if (!cli_available()) return;
    // a coarse step degrades the kernel residual by orders of magnitude
    const RunResult coarse =
        run_cli("apply-vq --point 0.3,0.8,-0.5,0.4 --alpha 2,1,0 --step 0.05");
    const auto j = nlohmann::json::parse(coarse.output);
    double norm_sq = 0;
    for (const auto& c : j) norm_sq += c.get<double>() * c.get<double>();
    CHECK(norm_sq > 1e-10);
}

TEST_CASE("cli gleason residual on a scaling segment") {
    if (!cli_available()) return;
    const RunResult r =
        run_cli("gleason --a 0.4,0.6,-0.3,0.5 --b 0.6,0.9,-0.45,0.75 --gamma 1,1,0");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("residual").get<double>() <= 1e-7);
}

TEST_CASE("cli kernel and gram") {
    if (!cli_available()) return;
    const RunResult k = run_cli("kernel --x 0,0.5,0,0 --y 0,0.5,0,0 --trunc 40");
    CHECK(k.exit_code == 0);
    const auto jk = nlohmann::json::parse(k.output);
    CHECK(std::abs(jk.at("value")[0].get<double>() - 4.0 / 3.0) <= 1e-9);

    const std::string pts_path = "/tmp/vqf_cli_points.json";
    {
        std::ofstream out(pts_path);
        out << "[[0.1,0.4,0.2,-0.1],[0,0.3,-0.3,0.2],[0.2,0.1,0.5,0.1]]";
    }
    const RunResult g = run_cli("gram --in " + pts_path + " --trunc 25");
    CHECK(g.exit_code == 0);
    const auto jg = nlohmann::json::parse(g.output);
    CHECK(jg.at("psd").get<bool>());
    CHECK(jg.at("min_eigenvalue").get<double>() >= -1e-8);
    std::remove(pts_path.c_str());
}

TEST_CASE("cli blaschke and realize round trip") {
    if (!cli_available()) return;
    const RunResult b = run_cli("blaschke --a 0,0.3,0.1,-0.2 --trunc 8");
    CHECK(b.exit_code == 0);
    CHECK(nlohmann::json::parse(b.output).contains("series"));

    const std::string realization_path = "/tmp/vqf_cli_realization.json";
    const RunResult real = run_cli("realize --a 0,0.3,0.1,-0.2 --out " + realization_path);
    CHECK(real.exit_code == 0);

    // restriction of the realization at the base point vanishes
    const RunResult restricted =
        run_cli("realize --in " + realization_path + " --x 0.3,0.1,-0.2");
    CHECK(restricted.exit_code == 0);
    const auto jr = nlohmann::json::parse(restricted.output);
    for (const auto& entry : jr.at("data"))
        for (const auto& c : entry) CHECK(std::abs(c.get<double>()) <= 1e-10);
    std::remove(realization_path.c_str());
}

TEST_CASE("cli verify is deterministic and reports per check") {
    if (!cli_available()) return;
    const RunResult v1 = run_cli("verify --suite ck --seed 5");
    const RunResult v2 = run_cli("verify --suite ck --seed 5");
    CHECK(v1.exit_code == 0);
    CHECK(v1.output == v2.output);
    CHECK(v1.output.find("[PASS]") != std::string::npos);

    const RunResult unknown_suite = run_cli("verify --suite nope");
    CHECK(unknown_suite.exit_code == 2);
}
