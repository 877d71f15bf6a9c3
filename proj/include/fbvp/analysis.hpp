#pragma once

#include "fbvp/ivp.hpp"

#include <cstddef>
#include <vector>

namespace fbvp::analysis {

/// Sampled estimates of the extreme difference quotients
///     (f(tau, y + y1(tau)) - f(tau, y1(tau))) / y
/// around a base trajectory y1. These are sampled under/over-estimates of the
/// true inf/sup, not the inf/sup themselves.
struct SlopeRange {
    double a_lower = 0.0;
    double a_upper = 0.0;
};

/// Quotients over every trajectory node and y in +-{window k / samples : k = 1..samples}.
/// Throws SolverError on a non-finite rhs value.
SlopeRange estimate_slope_range(const ivp::Rhs& rhs, const ivp::Trajectory& base, double y_window,
                                std::size_t samples);

/// Running version: entry j covers the nodes tau_0..tau_j, i.e. it estimates
/// the range over [0, t_j].
std::vector<SlopeRange> slope_range_profile(const ivp::Rhs& rhs, const ivp::Trajectory& base,
                                            double y_window, std::size_t samples);

/// Both sides of the separation estimate for two solutions whose initial slopes
/// differ by slope_diff:
///     slope_diff t E_{alpha,2}(a_lower t^alpha) <= y2(t) - y1(t) <= slope_diff t E_{alpha,2}(a_upper t^alpha)
struct SeparationEstimate {
    double a_lower = 0.0;
    double a_upper = 0.0;
    double t = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
};

SeparationEstimate separation_bounds(double alpha, double slope_diff, double t, double a_lower,
                                     double a_upper);

/// Largest t* such that the lower separation bound stays positive on (0, t*):
/// +infinity when a_lower >= 0, else (x* / |a_lower|)^(1/alpha) with x* the first
/// positive zero of E_{alpha,2}(-x). Throws RootNotFound when E_{alpha,2}(-x)
/// keeps its sign (checked on (0, 1e6], or until the oscillating part provably
/// can no longer reach zero).
double uniqueness_horizon(double alpha, double a_lower);

/// First positive zero of E_{alpha,2}(-x); throws RootNotFound as above.
double first_ml_zero(double alpha);

struct Intersection {
    double t_star = 0.0;
    double y_star = 0.0;
    std::size_t node = 0;  // first node past the crossing
};

/// First sign change of y1 - y2 after t = 0, linearly interpolated between the
/// bracketing nodes. Throws NoIntersection.
Intersection find_intersection(const ivp::Trajectory& y1, const ivp::Trajectory& y2);

/// Solves both problems (which must share alpha, horizon and y0) on one grid,
/// then locates their first crossing.
Intersection find_intersection(const ivp::IvpProblem& p1, const ivp::IvpProblem& p2,
                               const ivp::GridConfig& grid);

}  // namespace fbvp::analysis
