#pragma once

#include "fbvp/fastconv.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace fbvp::ivp {

/// Right-hand side f(t, y) of D^alpha y = f(t, y).
using Rhs = std::function<double(double t, double y)>;

enum class Method { Abm, Bdf2 };

std::string_view to_string(Method m);
/// Accepts "abm" / "bdf2" (case-insensitive). Throws DomainError otherwise.
Method parse_method(std::string_view text);

/// Caputo initial value problem of order alpha in (1, 2) on [0, horizon]:
///     D^alpha y = f(t, y),  y(0) = y0,  y'(0) = y0prime.
struct IvpProblem {
    double alpha = 1.5;
    double horizon = 1.0;
    double y0 = 0.0;
    double y0prime = 0.0;
    Rhs rhs;

    /// Throws DomainError on alpha outside (1, 2), non-positive horizon or missing rhs.
    void validate() const;
};

struct GridConfig {
    std::size_t n_steps = 100;
    Method method = Method::Bdf2;
    int corrector_sweeps = 1;      // ABM only
    double newton_tol = 1e-13;     // BDF2 only, relative
    int newton_max_iter = 50;      // BDF2 only
    std::size_t base_block = 64;   // history engine

    void validate() const;
};

/// N = round(horizon / h); rejects h that does not divide the horizon to 1e-9 relative.
std::size_t steps_from_step_size(double horizon, double h);

/// Discrete solution on t_j = j h, j = 0..N.
struct Trajectory {
    double step = 0.0;
    std::vector<double> times;
    std::vector<double> values;
    std::vector<double> rhs_values;  // f(t_j, y_j)

    std::size_t n_steps() const noexcept { return values.empty() ? 0 : values.size() - 1; }
    double terminal() const { return values.back(); }
};

/// Convolution weights of the fractional BDF2 for the fractional integral of order alpha.
///
/// omega holds the coefficients of ((3 - 4 xi + xi^2) / 2)^-alpha. start_weights[n]
/// are the corrections on f_0, f_1, f_2 that make the n-th row exact for t^nu,
/// nu in exponents = {0, 1, alpha}. Row 0 is zero.
struct CqWeights {
    double alpha = 0.0;
    std::vector<double> omega;
    std::vector<std::array<double, 3>> start_weights;
    std::array<double, 3> exponents{};
};

/// Requires 1 < alpha < 2 and n >= 2.
CqWeights compute_cq_weights(double alpha, std::size_t n);

/// Product-trapezoidal kernels of the fractional Adams-Bashforth-Moulton scheme.
struct AbmKernels {
    double alpha = 0.0;
    std::vector<double> predictor;  // b_m = (m+1)^a - m^a, m = 0..N-1
    std::vector<double> corrector;  // d_m = (m+1)^(a+1) - 2 m^(a+1) + (m-1)^(a+1), m = 0..N (d_0 unused)
    std::vector<double> boundary;   // c_{0,n+1} = n^(a+1) - (n - a)(n+1)^a, n = 0..N-1
};

/// Requires 1 < alpha < 2 and n >= 1.
AbmKernels abm_kernels(double alpha, std::size_t n);

/// Solver bound to one (alpha, horizon, grid). Construction precomputes the
/// weights and the history plans, so repeated solves with different initial
/// data (as in shooting) reuse them. Immutable; solve() may run concurrently.
class IvpSolver {
public:
    IvpSolver(double alpha, double horizon, GridConfig grid);

    double alpha() const noexcept { return alpha_; }
    double horizon() const noexcept { return horizon_; }
    const GridConfig& grid() const noexcept { return grid_; }
    double step() const noexcept { return step_; }

    /// Throws SolverError on a non-finite rhs value or a failed implicit solve.
    Trajectory solve(double y0, double y0prime, const Rhs& rhs) const;

private:
    Trajectory solve_bdf2(double y0, double y0prime, const Rhs& rhs) const;
    Trajectory solve_abm(double y0, double y0prime, const Rhs& rhs) const;

    double alpha_;
    double horizon_;
    GridConfig grid_;
    double step_;
    std::size_t internal_steps_;  // BDF2 startup needs at least two steps

    std::optional<CqWeights> cq_;
    std::optional<AbmKernels> abm_;
    std::shared_ptr<const fastconv::ConvolutionPlan> history_;    // BDF2 omega / ABM predictor
    std::shared_ptr<const fastconv::ConvolutionPlan> corrector_;  // ABM only
};

Trajectory solve_ivp(const IvpProblem& problem, const GridConfig& grid);

/// Empirical order from the terminal errors at N and 2N steps.
struct OrderEstimate {
    std::size_t n_coarse = 0;
    double error_coarse = 0.0;
    double error_fine = 0.0;
    std::optional<double> order;  // empty: an error fell below 1e-14, not measurable

    bool measurable() const noexcept { return order.has_value(); }
};

/// Terminal-value order estimate at grid.n_steps and 2 * grid.n_steps against
/// `reference`, the exact (or much finer) terminal value.
OrderEstimate estimate_order(const IvpProblem& problem, const GridConfig& grid, double reference);

/// Reference terminal value from a solve `refinement` times finer (>= 8).
double fine_grid_reference(const IvpProblem& problem, const GridConfig& grid,
                           std::size_t refinement = 16);

}  // namespace fbvp::ivp
