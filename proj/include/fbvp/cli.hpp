#pragma once

#include "fbvp/analysis.hpp"
#include "fbvp/ivp.hpp"
#include "fbvp/shooting.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fbvp::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,          // bad flags, invalid values, expression parse errors
    kNoConvergence = 2,  // shooting did not reach the tolerance
    kNumerical = 3,      // IVP solver or evaluation failure
};

/// Entry point of the `fbvp` tool. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Writes `t,y` rows at 17 significant digits, LF line endings.
void write_trajectory_csv(const std::string& path, const ivp::Trajectory& trajectory);

/// Reads a file written by write_trajectory_csv.
ivp::Trajectory read_trajectory_csv(const std::string& path);

// Built-in example: D^1.55 y = sin(1.3 t y) / (t + 5)^0.65.
inline constexpr double kExampleAlpha = 1.55;
inline constexpr const char* kExampleRhs = "sin(1.3*t*y)/(t+5)^0.65";
double example_rhs(double t, double y);

// Boundary value problem y(0) = 1, y(2.9) = 1.145 for the built-in example.
inline constexpr double kExampleHorizon = 2.9;
inline constexpr double kExampleB0 = 1.0;
inline constexpr double kExampleB1 = 1.145;
shooting::BvpProblem example_bvp();

struct Table1Row {
    double step = 0.0;
    double tol = 0.0;
    std::size_t n_steps = 0;
    shooting::ShootingReport report;
    double max_error = 0.0;  // over the row's grid, against the reference
};

struct Table1Result {
    std::size_t reference_steps = 0;        // h = 1/12800
    double reference_tol = 0.0;
    double self_test_terminal_diff = 0.0;   // reference vs h = 1/6400, at T
    double self_test_max_diff = 0.0;        // same, max over the common nodes
    std::vector<Table1Row> rows;
};

/// Step sizes 1/100 .. 1/800 with tolerances 1e-4 .. 1e-10 on the built-in BVP,
/// errors measured against a BDF2 solution at h = 1/12800.
Table1Result run_table1();

struct Figure1Result {
    ivp::Trajectory first;   // slope -0.15
    ivp::Trajectory second;  // slope -0.3
    analysis::Intersection crossing;
};

/// Two IVPs of the built-in example with y(0) = 1 and slopes -0.15, -0.3.
/// Throws NoIntersection when they do not cross within the horizon.
Figure1Result run_figure1(double step, double horizon);

}  // namespace fbvp::cli
