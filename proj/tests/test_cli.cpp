#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

std::string cli_path() {
    if (const char* path = std::getenv("BOGOAMP_CLI")) return path;
    return BOGOAMP_CLI_DEFAULT;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI with stderr folded into stdout.
RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
        result.output.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/bogoamp_test_") + name;
}

} // namespace

TEST_CASE("gain-sweep emits deterministic CSV") {
    const std::string base =
        "gain-sweep --model odba --gain-db 20 --omega-points 101";
    const std::string f1 = temp_path("det1.csv"), f2 = temp_path("det2.csv");
    CHECK(run(base + " --out " + f1).exit_code == 0);
    CHECK(run(base + " --out " + f2, "BOGOAMP_THREADS=1").exit_code == 0);
    const std::string a = slurp(f1), b = slurp(f2);
    CHECK(a == b);  // byte identical, independent of thread count
    CHECK(a.rfind("# config: ", 0) == 0);
    CHECK(a.find("omega,gain_db,gain_linear") != std::string::npos);
    // zero-frequency row carries the 20 dB point
    CHECK(a.find("\n0,20,100\n") != std::string::npos);
}

TEST_CASE("gain-sweep comparison columns") {
    const auto r = run(
        "gain-sweep --model odba --gain-db 20 --omega-points 11 --compare dpa");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("omega,gain_db,gain_linear,dpa_gain_db,dpa_gain_linear") !=
          std::string::npos);
}

TEST_CASE("json format parses and echoes the config") {
    const auto r = run(
        "gain-sweep --model oiba --gain-db 10 --omega-points 5 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["config"]["model"] == "oiba");
    CHECK(doc["data"].size() == 5);
    CHECK(doc["data"][2]["omega"] == 0.0);
}

TEST_CASE("config file drives the run and unknown keys are rejected") {
    const std::string good = temp_path("good.ini");
    {
        std::ofstream f(good);
        f << "[gain-sweep]\n"
          << "model=odba\n"
          << "gain-db=20\n"
          << "omega-points=11\n";
    }
    const std::string direct =
        run("gain-sweep --model odba --gain-db 20 --omega-points 11").output;
    const auto from_config = run("--config " + good + " gain-sweep");
    CHECK(from_config.exit_code == 0);
    CHECK(from_config.output == direct);

    const std::string bad = temp_path("bad.ini");
    {
        std::ofstream f(bad);
        f << "[gain-sweep]\n"
          << "model=odba\n"
          << "bogus-knob=3\n";
    }
    CHECK(run("--config " + bad + " gain-sweep").exit_code == 2);
}

TEST_CASE("flags override config values") {
    const std::string cfg = temp_path("override.ini");
    {
        std::ofstream f(cfg);
        f << "[gain-sweep]\ngain-db=10\nmodel=odba\nomega-points=3\n";
    }
    const auto r = run("--config " + cfg + " gain-sweep --gain-db 20");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("gain_db=20") != std::string::npos);
    CHECK(r.output.find("\n0,20,100\n") != std::string::npos);
}

TEST_CASE("config errors exit with code 2") {
    CHECK(run("gain-sweep --model nosuch").exit_code == 2);
    CHECK(run("gain-sweep --omega-min 2 --omega-max -2").exit_code == 2);
    CHECK(run("gain-sweep --omega-points 1").exit_code == 2);
    CHECK(run("nosuch-command").exit_code == 2);
    CHECK(run("gain-sweep --model dpa --kappa1 -1").exit_code == 2);
}

TEST_CASE("physical units scale the frequency axis") {
    const auto plain = run(
        "gain-sweep --model odba --gain-db 20 --omega-points 3 --omega-min -5 "
        "--omega-max 5");
    const auto mhz = run(
        "gain-sweep --model odba --gain-db 20 --kappa1 25 --units MHz "
        "--omega-points 3 --omega-min -125 --omega-max 125");
    CHECK(plain.exit_code == 0);
    CHECK(mhz.exit_code == 0);
    // same dimensionless sweep: omega 125 MHz = 5 kappa at kappa = 25 MHz
    CHECK(mhz.output.find("\n125,20,100") == std::string::npos);  // edge gain != 20
    CHECK(mhz.output.find("\n0,20,100\n") != std::string::npos);
    // gains agree row by row, only the omega column is rescaled
    std::istringstream a(plain.output), b(mhz.output);
    std::string la, lb;
    while (std::getline(a, la) && std::getline(b, lb)) {
        if (la.rfind("#", 0) == 0 || la.rfind("omega", 0) == 0) continue;
        const auto ga = la.substr(la.find(','));
        const auto gb = lb.substr(lb.find(','));
        CHECK(ga == gb);
    }
}

TEST_CASE("squeeze-sweep marks unit gain rows as not applicable") {
    const auto r = run(
        "squeeze-sweep --gain-min-db 0 --gain-max-db 20 --gain-points 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("gain_db,g0,d_amp,d_sq,d_single") != std::string::npos);
    CHECK(r.output.find("0,1,na,na,na") != std::string::npos);
    // matched amplification bandwidth stays at sqrt(2) kappa
    CHECK(r.output.find("20,100,1.414213562") != std::string::npos);
}

TEST_CASE("depletion sweep flags convergence and reports compression") {
    const auto r = run(
        "depletion --gain-db 20 --power-min 1e-4 --power-max 1 --power-points 12");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("# compression_oiba_rel:") != std::string::npos);
    CHECK(r.output.find("# compression_pa_rel:") != std::string::npos);
    CHECK(r.output.find("input_power_rel,oiba_gbar1,oiba_gbar2,oiba_delta_c,"
                        "oiba_gain_db,oiba_converged,pa_gbar1,pa_gain_db,"
                        "pa_converged") != std::string::npos);
    // all rows converged on this grid
    CHECK(r.output.find(",0\n") == std::string::npos);
}

TEST_CASE("compression subcommand orders the two schemes") {
    const auto r = run("compression --gain-db 20 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc["data"].size() == 2);
    const double oiba = doc["data"][0]["input_power_abs"].get<double>();
    const double pa = doc["data"][1]["input_power_abs"].get<double>();
    CHECK(oiba > pa);
}

TEST_CASE("model-dump prints matrices and the normal form") {
    const auto r = run("model-dump --model oiba --gain-db 20");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["h_matrix"].size() == 4);
    CHECK(doc["a_matrix"].size() == 4);
    CHECK(doc["eigenvalues"].size() == 4);
    CHECK(doc["stability"]["stable"].get<bool>());
    CHECK(doc["bogoliubov_form"]["kind"] == "imbalanced_hopping");
    CHECK(std::abs(doc["bogoliubov_form"]["squeeze_r"].get<double>() -
                   1.151292546497) < 1e-9);

    const auto qnd = run("model-dump --model qnd --g 0.5");
    const auto qnd_doc = nlohmann::json::parse(qnd.output);
    CHECK(qnd_doc["stability"]["hamiltonian_diagonalizable"].get<bool>() == false);
    CHECK(qnd_doc["bogoliubov_form"].contains("error"));
}

TEST_CASE("verify passes on a fresh build and fails under perturbation") {
    const auto ok = run("verify");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("FAIL") == std::string::npos);

    const auto broken = run("verify", "BOGOAMP_VERIFY_PERTURB=1");
    CHECK(broken.exit_code != 0);
    CHECK(broken.output.find("FAIL") != std::string::npos);
}
