#pragma once

#include "fbvp/ivp.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fbvp::shooting {

/// D^alpha y = f(t, y) on [0, T], y(0) = b0, y(T) = b1, alpha in (1, 2).
struct BvpProblem {
    double alpha = 1.5;
    double horizon = 1.0;
    double b0 = 0.0;
    double b1 = 0.0;
    ivp::Rhs rhs;

    void validate() const;
};

struct ShootingConfig {
    double tol = 1e-8;  // on |y_k(T) - b1|
    int max_iter = 25;  // secant updates
    std::optional<std::pair<double, double>> initial_slopes;
    double min_denominator = 1e-14;

    void validate() const;
};

/// One IVP solve of the shooting sequence.
struct ShotRecord {
    double slope = 0.0;
    double terminal = 0.0;
    double residual = 0.0;         // terminal - b1
    std::optional<double> lambda;  // weight of the secant step that produced `slope`
};

enum class Status { Converged, MaxIterations, DegenerateSecant };

std::string_view to_string(Status s);

struct ShootingReport {
    std::vector<ShotRecord> shots;  // every IVP solve, in order
    Status status = Status::MaxIterations;
    std::string diagnostic;

    bool converged() const noexcept { return status == Status::Converged; }
    /// Every IVP solve, including the two initializing ones.
    std::size_t ivp_solve_count() const noexcept { return shots.size(); }
    std::size_t secant_steps() const noexcept;
};

struct InitialGuesses {
    double s0 = 0.0;
    /// Empty when the slope-0 trajectory already hits b1 exactly (only possible for b0 == b1).
    std::optional<double> s1;
    /// Terminal value of the slope-0 solve; only computed when b0 == b1.
    std::optional<double> zero_slope_terminal;
};

/// s0 = 0, s1 = (b1 - b0) / T; when b0 == b1, s1 = +1 or -1 according to the
/// sign of y_0(T) - b1 (one extra IVP solve).
InitialGuesses initial_guesses(const BvpProblem& problem, const ivp::GridConfig& grid);

struct SecantStep {
    double slope = 0.0;
    double lambda = 0.0;
};

/// lambda = (b1 - yT_prev) / (yT_curr - yT_prev), s_next = lambda s_curr + (1 - lambda) s_prev.
/// Throws DegenerateSecant when |yT_curr - yT_prev| <= min_denominator * max(1, |yT_curr|).
SecantStep secant_update(double s_prev, double s_curr, double yT_prev, double yT_curr, double b1,
                         double min_denominator = 1e-14);

struct BvpSolution {
    ivp::Trajectory trajectory;  // last computed shot
    ShootingReport report;
};

/// Shooting with proportional secting. Non-convergence is reported through
/// report.status, not thrown; IVP solver errors propagate.
BvpSolution solve_bvp(const BvpProblem& problem, const ivp::GridConfig& grid,
                      const ShootingConfig& config);

}  // namespace fbvp::shooting
