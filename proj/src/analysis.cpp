#include "fbvp/analysis.hpp"

#include "fbvp/error.hpp"
#include "fbvp/mlf.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fbvp::analysis {

namespace {

void require_order(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0)) {
        std::ostringstream os;
        os << "order alpha must lie strictly inside (1, 2), got " << alpha;
        throw DomainError(os.str());
    }
}

double checked_rhs(const ivp::Rhs& f, double t, double y) {
    const double v = f(t, y);
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "right-hand side is not finite at t=" << t << ", y=" << y;
        throw SolverError(os.str(), t, y);
    }
    return v;
}

}  // namespace

std::vector<SlopeRange> slope_range_profile(const ivp::Rhs& rhs, const ivp::Trajectory& base,
                                            double y_window, std::size_t samples) {
    if (!(y_window > 0.0)) throw DomainError("sampling window must be positive");
    if (samples == 0) throw DomainError("sample count must be positive");
    if (base.values.empty()) throw DomainError("base trajectory is empty");

    std::vector<SlopeRange> profile(base.values.size());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t j = 0; j < base.values.size(); ++j) {
        const double tau = base.times[j];
        const double y1 = base.values[j];
        const double f1 = checked_rhs(rhs, tau, y1);
        for (std::size_t k = 1; k <= samples; ++k) {
            const double dy = y_window * static_cast<double>(k) / static_cast<double>(samples);
            for (double y : {dy, -dy}) {
                const double q = (checked_rhs(rhs, tau, y1 + y) - f1) / y;
                lo = std::min(lo, q);
                hi = std::max(hi, q);
            }
        }
        profile[j] = {lo, hi};
    }
    return profile;
}

SlopeRange estimate_slope_range(const ivp::Rhs& rhs, const ivp::Trajectory& base, double y_window,
                                std::size_t samples) {
    return slope_range_profile(rhs, base, y_window, samples).back();
}

SeparationEstimate separation_bounds(double alpha, double slope_diff, double t, double a_lower,
                                     double a_upper) {
    require_order(alpha);
    if (!(t >= 0.0)) throw DomainError("time must be non-negative");
    if (a_lower > a_upper) throw DomainError("a_lower must not exceed a_upper");
    const double ta = std::pow(t, alpha);
    SeparationEstimate est{a_lower, a_upper, t, 0.0, 0.0};
    est.lower_bound = slope_diff * t * mlf::mittag_leffler(alpha, 2.0, a_lower * ta);
    est.upper_bound = slope_diff * t * mlf::mittag_leffler(alpha, 2.0, a_upper * ta);
    return est;
}

double first_ml_zero(double alpha) {
    require_order(alpha);
    using std::numbers::pi;
    auto e = [alpha](double x) { return mlf::mittag_leffler(alpha, 2.0, -x); };

    // Scan in u = x^(1/alpha): the oscillating part of E_{alpha,2}(-x) has period
    // 2 pi / sin(pi / alpha) >= 2 pi in u.
    constexpr double kDu = 0.05;
    constexpr double kMaxX = 1e6;
    const double decay = std::cos(pi / alpha);  // < 0
    const double algebraic = mlf::reciprocal_gamma(2.0 - alpha);  // E ~ algebraic / x
    double prev_x = 0.0;
    double prev_v = 1.0;  // E_{alpha,2}(0)
    for (int i = 1;; ++i) {
        const double u = kDu * i;
        const double x = std::pow(u, alpha);
        if (x > kMaxX) break;
        const double v = e(x);
        if (v == 0.0) return x;
        if ((v < 0.0) != (prev_v < 0.0)) {
            double lo = prev_x, hi = x;
            while (hi - lo > 1e-10 * std::max(1.0, hi)) {
                const double mid = 0.5 * (lo + hi);
                const double vm = e(mid);
                if (vm == 0.0) return mid;
                ((vm < 0.0) == (prev_v < 0.0) ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        // Beyond this point the oscillating residues (2/alpha) u^-1 e^{u cos(pi/alpha)} stay below
        // a quarter of the positive algebraic part, so no further sign change can occur.
        if (x >= 100.0 && (2.0 / alpha) * std::exp(u * decay) / u < 0.25 * algebraic / x) {
            break;
        }
        prev_x = x;
        prev_v = v;
    }
    std::ostringstream os;
    os << "E_{" << alpha << ",2}(-x) has no sign change for x > 0; the lower separation bound "
       << "stays positive";
    throw RootNotFound(os.str());
}

double uniqueness_horizon(double alpha, double a_lower) {
    require_order(alpha);
    if (a_lower >= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::pow(first_ml_zero(alpha) / std::abs(a_lower), 1.0 / alpha);
}

Intersection find_intersection(const ivp::Trajectory& y1, const ivp::Trajectory& y2) {
    if (y1.values.size() != y2.values.size() || y1.values.size() < 2) {
        throw DomainError("trajectories must share a grid of at least two nodes");
    }
    const std::size_t n = y1.values.size();
    auto diff = [&](std::size_t j) { return y1.values[j] - y2.values[j]; };

    std::size_t j = 1;
    while (j < n && diff(j) == 0.0) ++j;
    if (j == n) {
        throw NoIntersection("trajectories coincide on the whole grid");
    }
    const bool positive = diff(j) > 0.0;
    for (++j; j < n; ++j) {
        const double d = diff(j);
        if (d == 0.0 || (d > 0.0) != positive) {
            const double d0 = diff(j - 1);
            const double frac = d0 / (d0 - d);
            const double t = y1.times[j - 1] + frac * (y1.times[j] - y1.times[j - 1]);
            const double y = y1.values[j - 1] + frac * (y1.values[j] - y1.values[j - 1]);
            return {t, y, j};
        }
    }
    std::ostringstream os;
    os << "no intersection on [0, " << y1.times.back() << "]";
    throw NoIntersection(os.str());
}

Intersection find_intersection(const ivp::IvpProblem& p1, const ivp::IvpProblem& p2,
                               const ivp::GridConfig& grid) {
    p1.validate();
    p2.validate();
    if (p1.alpha != p2.alpha || p1.horizon != p2.horizon || p1.y0 != p2.y0) {
        throw DomainError("intersection problems must differ only in the initial slope");
    }
    const ivp::IvpSolver solver(p1.alpha, p1.horizon, grid);
    return find_intersection(solver.solve(p1.y0, p1.y0prime, p1.rhs),
                             solver.solve(p2.y0, p2.y0prime, p2.rhs));
}

}  // namespace fbvp::analysis
