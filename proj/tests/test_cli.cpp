#include <doctest.h>

#include "fbvp/cli.hpp"
#include "fbvp/error.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace fs = std::filesystem;
using namespace fbvp::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"fbvp"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    const char* env = std::getenv("FBVP_TEST_TMP");
    fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "fbvp_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("ml subcommand") {
    auto r = run_cli({"ml", "--alpha", "1", "--beta", "1", "--z", "1"});
    CHECK(r.code == kSuccess);
    CHECK(r.out == "2.71828182845905\n");
    r = run_cli({"ml", "--alpha", "1.55", "--beta", "1", "--z", "-1"});
    CHECK(r.out == "0.406904247722027\n");
    CHECK(run_cli({"ml", "--alpha", "0", "--beta", "1", "--z", "1"}).code == kUsage);
    CHECK(run_cli({"ml", "--alpha", "1", "--beta", "4", "--z", "1"}).code == kUsage);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == kUsage);
    CHECK(run_cli({"frobnicate"}).code == kUsage);
    CHECK(run_cli({"ml", "--alpha", "one", "--beta", "1", "--z", "1"}).code == kUsage);
    const char* base[] = {"solve-ivp", "--alpha", "1.5", "--t-end", "1", "--y0", "0", "--yp0", "0", "--rhs", "t"};
    auto with = [&](std::initializer_list<const char*> extra) {
        std::vector<const char*> argv{"fbvp"};
        argv.insert(argv.end(), std::begin(base), std::end(base));
        argv.insert(argv.end(), extra.begin(), extra.end());
        std::ostringstream out, err;
        return run(static_cast<int>(argv.size()), argv.data(), out, err);
    };
    CHECK(with({"--n", "10"}) == kSuccess);
    CHECK(with({}) == kUsage);                          // neither --n nor --h
    CHECK(with({"--n", "10", "--h", "0.1"}) == kUsage);  // both
    CHECK(with({"--n", "0"}) == kUsage);
    CHECK(with({"--h", "0.3"}) == kUsage);
    CHECK(with({"--n", "10", "--method", "euler"}) == kUsage);
    CHECK(run_cli({"solve-ivp", "--alpha", "2.5", "--t-end", "1", "--y0", "0", "--yp0", "0", "--rhs", "t", "--n", "5"})
              .code == kUsage);
    auto help = run_cli({"--help"});
    CHECK(help.code == kSuccess);
    CHECK(help.out.find("solve-bvp") != std::string::npos);
}

TEST_CASE("expression errors are usage errors with a caret") {
    auto r = run_cli({"solve-ivp", "--alpha", "1.5", "--t-end", "1", "--y0", "0", "--yp0", "0", "--rhs", "sin(t", "--n", "10"});
    CHECK(r.code == kUsage);
    CHECK(r.err.find("sin(t\n") != std::string::npos);
    CHECK(r.err.find("       ^") != std::string::npos);
}

TEST_CASE("numerical failures exit with 3") {
    auto r = run_cli({"solve-ivp", "--alpha", "1.5", "--t-end", "2", "--y0", "1", "--yp0", "-1", "--rhs", "log(y)", "--n", "100"});
    CHECK(r.code == kNumerical);
    CHECK(r.err.find("log(y)") != std::string::npos);
    r = run_cli({"figure1", "--h", "0.01", "--horizon", "3"});
    CHECK(r.code == kNumerical);
}

TEST_CASE("solve-bvp writes CSV and a reproducible JSON report") {
    const auto dir = scratch();
    const auto csv = (dir / "bvp.csv").string();
    const auto json1 = (dir / "r1.json").string();
    const auto json2 = (dir / "r2.json").string();
    auto args = [&](const std::string& report) {
        return run_cli({"solve-bvp", "--alpha", "1.55", "--t-end", "2.9", "--b0", "1", "--b1", "1.145", "--rhs",
                        kExampleRhs, "--h", "0.01", "--tol", "1e-8", "--out", csv.c_str(), "--report", report.c_str()});
    };
    const auto r = args(json1);
    CHECK(r.code == kSuccess);
    CHECK(r.out.rfind("converged: 6 IVP solves", 0) == 0);
    args(json2);
    CHECK(slurp(json1) == slurp(json2));

    const auto j = nlohmann::json::parse(slurp(json1));
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "solve-bvp");
    CHECK(j["inputs"]["n"] == 290);
    CHECK(j["inputs"]["rhs"] == kExampleRhs);
    CHECK(j["shooting"]["converged"] == true);
    CHECK(j["shooting"]["ivp_solve_count"] == j["shooting"]["iterations"].size());
    CHECK(j["shooting"]["iterations"][0]["lambda"].is_null());
    CHECK(j["shooting"]["iterations"][2]["lambda"].is_number());
    CHECK_FALSE(j.contains("wall_time_ms"));

    const auto tr = read_trajectory_csv(csv);
    REQUIRE(tr.values.size() == 291);
    CHECK(tr.values.front() == 1.0);
    CHECK(tr.times.back() == doctest::Approx(2.9));
    CHECK(std::abs(tr.values.back() - 1.145) <= 1e-8);
    CHECK(slurp(csv).rfind("t,y\n0,1\n", 0) == 0);

    const auto timed = (dir / "timed.json").string();
    run_cli({"solve-bvp", "--alpha", "1.55", "--t-end", "2.9", "--b0", "1", "--b1", "1.145", "--rhs", kExampleRhs,
             "--n", "100", "--report", timed.c_str(), "--timing"});
    CHECK(nlohmann::json::parse(slurp(timed)).contains("wall_time_ms"));
}

TEST_CASE("CSV round trip is exact") {
    const auto path = (scratch() / "roundtrip.csv").string();
    fbvp::ivp::Trajectory tr;
    tr.step = 0.1;
    tr.times = {0.0, 0.1, 0.2};
    tr.values = {1.0 / 3.0, -2.5e-300, 123456789.12345678};
    write_trajectory_csv(path, tr);
    const auto back = read_trajectory_csv(path);
    CHECK(back.times == tr.times);
    CHECK(back.values == tr.values);
    std::ofstream(path) << "x,y\n";
    CHECK_THROWS_AS(read_trajectory_csv(path), fbvp::DomainError);
}

TEST_CASE("non-convergence exits with 2") {
    const auto dir = scratch();
    const auto report = (dir / "nc.json").string();
    auto r = run_cli({"solve-bvp", "--alpha", "1.55", "--t-end", "2.9", "--b0", "1", "--b1", "1.145", "--rhs", kExampleRhs,
                      "--n", "100", "--tol", "1e-16", "--max-iter", "2", "--report", report.c_str()});
    CHECK(r.code == kNoConvergence);
    CHECK(r.out.find("not converged") != std::string::npos);
    const auto j = nlohmann::json::parse(slurp(report));
    CHECK(j["shooting"]["status"] == "max_iterations");
    CHECK(j["shooting"]["ivp_solve_count"] == 4);
}

TEST_CASE("initial slopes flag") {
    auto r = run_cli({"solve-bvp", "--alpha", "1.55", "--t-end", "2.9", "--b0", "1", "--b1", "1.145", "--rhs", kExampleRhs,
                      "--n", "100", "--slopes", "-0.2,-0.1"});
    CHECK(r.code == kSuccess);
    CHECK(run_cli({"solve-bvp", "--alpha", "1.55", "--t-end", "2.9", "--b0", "1", "--b1", "1.145", "--rhs", kExampleRhs,
                   "--n", "100", "--slopes", "-0.2"})
              .code == kUsage);
}

TEST_CASE("converge subcommand") {
    auto r = run_cli({"converge", "--alpha", "1.55", "--lambda", "-1", "--ns", "100,200"});
    CHECK(r.code == kSuccess);
    CHECK(r.out.find("Mittag-Leffler") != std::string::npos);
    r = run_cli({"converge", "--alpha", "1.5", "--const", "2", "--ns", "50,100"});
    CHECK(r.out.find("not measurable") != std::string::npos);
    r = run_cli({"converge", "--alpha", "1.5", "--rhs", "-y^3", "--method", "abm", "--ns", "20,40"});
    CHECK(r.code == kSuccess);
    CHECK(r.out.find("fine grid") != std::string::npos);
    CHECK(run_cli({"converge", "--alpha", "1.5", "--lambda", "-1", "--const", "2"}).code == kUsage);
}

TEST_CASE("horizon subcommand") {
    auto r = run_cli({"horizon", "--alpha", "1.8", "--a-lower", "-2"});
    CHECK(r.code == kSuccess);
    CHECK(r.out.find("t* = 2.3") != std::string::npos);
    r = run_cli({"horizon", "--alpha", "1.55", "--a-lower", "-0.3"});
    CHECK(r.code == kSuccess);
    CHECK(r.out.find("unbounded") != std::string::npos);
    r = run_cli({"horizon", "--alpha", "1.55", "--a-lower", "0.1"});
    CHECK(r.out.find("unbounded") != std::string::npos);
    r = run_cli({"horizon", "--alpha", "1.55", "--rhs", kExampleRhs, "--y0", "1", "--yp0", "-0.15", "--t-end", "2.9"});
    CHECK(r.code == kSuccess);
    CHECK(r.out.find("sampled a_lower") != std::string::npos);
    CHECK(run_cli({"horizon", "--alpha", "1.55"}).code == kUsage);
}

TEST_CASE("figure1 writes both curves") {
    const auto prefix = (scratch() / "fig").string();
    auto r = run_cli({"figure1", "--h", "0.001", "--out-prefix", prefix.c_str()});
    CHECK(r.code == kSuccess);
    CHECK(r.out.rfind("t* = 5.38", 0) == 0);
    CHECK(read_trajectory_csv(prefix + "_y1.csv").values.size() == 5501);
    CHECK(read_trajectory_csv(prefix + "_y2.csv").values.size() == 5501);
}
