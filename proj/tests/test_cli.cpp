// End-to-end exercises of the command-line front end: exit codes, JSON/CSV
// shapes, tolerance plumbing, and byte-level reproducibility.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "json.hpp"
#include "oracles.hpp"

namespace {

struct CliRun {
    int code = -1;
    std::string output;  // stdout + stderr
};

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

CliRun run_cli(const std::string& args) {
    static int counter = 0;
    std::string cap = "cli_capture_" + std::to_string(++counter) + ".txt";
    std::string cmd = std::string("\"") + CLIFF_CLI_PATH + "\" " + args + " > " + cap + " 2>&1";
    int rc = std::system(cmd.c_str());
    CliRun r;
    r.code = (rc == -1) ? -1 : WEXITSTATUS(rc);
    r.output = slurp(cap);
    std::remove(cap.c_str());
    return r;
}

// wall times and the timestamp are the only nondeterministic report fields
std::string scrub_timing(std::string s) {
    s = std::regex_replace(s, std::regex("\"timestamp\": \"[^\"]*\""), "\"timestamp\": \"X\"");
    s = std::regex_replace(s, std::regex("\"wall_ms\": [-+0-9.eE]+"), "\"wall_ms\": 0");
    return s;
}

}  // namespace

TEST_CASE("cli requires a subcommand") {
    REQUIRE(run_cli("").code == 2);
    REQUIRE(run_cli("frobnicate").code == 2);
}

TEST_CASE("constants prints the table") {
    CliRun r = run_cli("constants --n 3 --m 3");
    REQUIRE(r.code == 0);
    REQUIRE(r.output.find("K_m") != std::string::npos);
    REQUIRE(r.output.find("C1_min") != std::string::npos);
    REQUIRE(r.output.find("HLS lambda") != std::string::npos);
    REQUIRE(r.output.find("1.4142135623730951") != std::string::npos);
}

TEST_CASE("constants emits machine-checkable json") {
    CliRun r = run_cli("constants --n 3 --json");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    REQUIRE(j["K"].get<double>() == oracle::kn_real[2]);
    REQUIRE_THAT(j["omega"].get<double>(),
                 Catch::Matchers::WithinRel(oracle::omega_paper_n3, 1e-14));
    REQUIRE(j["omega_variant"] == "paper");
    REQUIRE(j["hls"].size() == 3);
    REQUIRE(j["fundamental"].size() == 2);

    CliRun s = run_cli("constants --n 3 --omega sphere --json");
    nlohmann::json js = nlohmann::json::parse(s.output);
    REQUIRE_THAT(js["omega"].get<double>(),
                 Catch::Matchers::WithinRel(oracle::omega_sphere_n3, 1e-14));
}

TEST_CASE("constants below the sobolev range reports what exists and exits 2") {
    CliRun r = run_cli("constants --n 2");
    REQUIRE(r.code == 2);
    REQUIRE(r.output.find("K_m") != std::string::npos);
    REQUIRE(r.output.find("omega_n") != std::string::npos);
}

TEST_CASE("verify runs a suite and writes a passing report") {
    CliRun r = run_cli(
        "verify --suite sobolev --grid 16 --extent 6 --cases 3 --quiet --out verify_ok.json");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(slurp("verify_ok.json"));
    REQUIRE(j["suite"] == "sobolev");
    REQUIRE(j["summary"]["failed"] == 0);
    REQUIRE(j["results"].size() > 0);
    REQUIRE(j["conventions"]["kernel_omega"] == "sphere");
    std::remove("verify_ok.json");
}

TEST_CASE("verify exit codes distinguish failure from misconfiguration") {
    REQUIRE(run_cli("verify --suite bogus --cases 1").code == 2);
    REQUIRE(run_cli("verify --suite holder --grid 15 --cases 1 --quiet").code == 2);
    REQUIRE(run_cli("verify --suite holder --n 7 --cases 1 --quiet").code == 2);
    REQUIRE(run_cli("verify --suite holder --cases 1 --tol bogus=1").code == 2);
    REQUIRE(run_cli("verify --suite holder --cases 1 --tol module_holder=abc").code == 2);

    // an impossible tolerance makes every check fail: exit 1, not 2
    CliRun fail = run_cli(
        "verify --suite holder --grid 12 --extent 4 --cases 2 --quiet --tol module_holder=-1 "
        "--out verify_fail.json");
    REQUIRE(fail.code == 1);
    nlohmann::json j = nlohmann::json::parse(slurp("verify_fail.json"));
    REQUIRE(j["summary"]["failed"] == j["summary"]["checks"]);
    std::remove("verify_fail.json");
}

TEST_CASE("verify reports are byte-identical apart from timing") {
    const char* args =
        "verify --suite poincare --grid 12 --extent 4 --cases 2 --seed 7 --quiet --out ";
    REQUIRE(run_cli(std::string(args) + "det_a.json").code == 0);
    REQUIRE(run_cli(std::string(args) + "det_b.json").code == 0);
    std::string a = scrub_timing(slurp("det_a.json"));
    std::string b = scrub_timing(slurp("det_b.json"));
    REQUIRE(a == b);
    REQUIRE(a.find("\"poincare\"") != std::string::npos);
    std::remove("det_a.json");
    std::remove("det_b.json");
}

TEST_CASE("plotdata sorts rows by margin") {
    REQUIRE(run_cli("verify --suite heat --grid 12 --extent 4 --cases 2 --quiet "
                    "--out plot_in.json")
                .code == 0);
    CliRun r = run_cli("plotdata --in plot_in.json --out plot_out.csv");
    REQUIRE(r.code == 0);

    nlohmann::json j = nlohmann::json::parse(slurp("plot_in.json"));
    std::ifstream is("plot_out.csv");
    std::string line;
    REQUIRE(std::getline(is, line));
    REQUIRE(line == "check_id,case_id,family,lhs,rhs,ratio,margin,pass");
    int rows = 0;
    double prev = -1e300;
    while (std::getline(is, line)) {
        ++rows;
        // margin is the second-to-last column
        auto last = line.rfind(',');
        auto prev_comma = line.rfind(',', last - 1);
        double margin = std::stod(line.substr(prev_comma + 1, last - prev_comma - 1));
        REQUIRE(margin >= prev);
        prev = margin;
    }
    REQUIRE(rows == static_cast<int>(j["results"].size()));
    std::remove("plot_in.json");
    std::remove("plot_out.csv");

    REQUIRE(run_cli("plotdata --in does_not_exist.json").code == 2);
    REQUIRE(run_cli("plotdata").code == 2);
}

TEST_CASE("dumpfield writes one row per cell") {
    CliRun r = run_cli("dumpfield --family bump --grid 8 --extent 4 --seed 3 --out dump.csv");
    REQUIRE(r.code == 0);
    std::ifstream is("dump.csv");
    std::string line;
    REQUIRE(std::getline(is, line));
    REQUIRE(line.rfind("x0,x1,x2,abs", 0) == 0);
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    REQUIRE(rows == 8 * 8 * 8);
    std::remove("dump.csv");

    REQUIRE(run_cli("dumpfield --family nosuch").code == 2);
}
