#include "fbvp/shooting.hpp"

#include "fbvp/error.hpp"

#include <cmath>
#include <sstream>

namespace fbvp::shooting {

void BvpProblem::validate() const {
    if (!(alpha > 1.0 && alpha < 2.0)) {
        std::ostringstream os;
        os << "order alpha must lie strictly inside (1, 2), got " << alpha;
        throw DomainError(os.str());
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw DomainError("horizon must be positive and finite");
    }
    if (!std::isfinite(b0) || !std::isfinite(b1)) {
        throw DomainError("boundary values must be finite");
    }
    if (!rhs) {
        throw DomainError("right-hand side is not set");
    }
}

void ShootingConfig::validate() const {
    if (!(tol > 0.0)) throw DomainError("shooting tolerance must be positive");
    if (max_iter < 1) throw DomainError("max_iter must be positive");
    if (!(min_denominator >= 0.0)) throw DomainError("min_denominator must be non-negative");
    if (initial_slopes && initial_slopes->first == initial_slopes->second) {
        throw DomainError("the two initial slopes must differ");
    }
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Converged: return "converged";
        case Status::MaxIterations: return "max_iterations";
        case Status::DegenerateSecant: return "degenerate_secant";
    }
    return "unknown";
}

std::size_t ShootingReport::secant_steps() const noexcept {
    std::size_t count = 0;
    for (const auto& s : shots) {
        if (s.lambda) ++count;
    }
    return count;
}

namespace {

// Slope choice once y_0(T) is known for b0 == b1.
std::optional<double> equal_boundary_slope(double terminal, double b1) {
    if (terminal > b1) return 1.0;
    if (terminal < b1) return -1.0;
    return std::nullopt;
}

}  // namespace

InitialGuesses initial_guesses(const BvpProblem& problem, const ivp::GridConfig& grid) {
    problem.validate();
    InitialGuesses g;
    if (problem.b0 != problem.b1) {
        g.s1 = (problem.b1 - problem.b0) / problem.horizon;
        return g;
    }
    const ivp::IvpSolver solver(problem.alpha, problem.horizon, grid);
    const double terminal = solver.solve(problem.b0, 0.0, problem.rhs).terminal();
    g.zero_slope_terminal = terminal;
    g.s1 = equal_boundary_slope(terminal, problem.b1);
    return g;
}

SecantStep secant_update(double s_prev, double s_curr, double yT_prev, double yT_curr, double b1,
                         double min_denominator) {
    const double denom = yT_curr - yT_prev;
    if (!(std::abs(denom) > min_denominator * std::max(1.0, std::abs(yT_curr)))) {
        std::ostringstream os;
        os << "secant denominator vanished: terminal values " << yT_prev << " and " << yT_curr
           << " for slopes " << s_prev << " and " << s_curr;
        throw DegenerateSecant(os.str());
    }
    const double lambda = (b1 - yT_prev) / denom;
    return {lambda * s_curr + (1.0 - lambda) * s_prev, lambda};
}

BvpSolution solve_bvp(const BvpProblem& problem, const ivp::GridConfig& grid,
                      const ShootingConfig& config) {
    problem.validate();
    config.validate();
    const ivp::IvpSolver solver(problem.alpha, problem.horizon, grid);

    BvpSolution out;
    auto& report = out.report;
    auto shoot = [&](double slope, std::optional<double> lambda) {
        out.trajectory = solver.solve(problem.b0, slope, problem.rhs);
        const double terminal = out.trajectory.terminal();
        report.shots.push_back({slope, terminal, terminal - problem.b1, lambda});
        return std::abs(terminal - problem.b1) <= config.tol;
    };
    auto done = [&]() {
        report.status = Status::Converged;
        return std::move(out);
    };

    const double s0 = config.initial_slopes ? config.initial_slopes->first : 0.0;
    if (shoot(s0, std::nullopt)) {
        return done();
    }
    double s1;
    if (config.initial_slopes) {
        s1 = config.initial_slopes->second;
    } else if (problem.b0 != problem.b1) {
        s1 = (problem.b1 - problem.b0) / problem.horizon;
    } else {
        // y_0(T) == b1 exactly was accepted above
        s1 = *equal_boundary_slope(report.shots.back().terminal, problem.b1);
    }
    if (shoot(s1, std::nullopt)) {
        return done();
    }

    for (int k = 0; k < config.max_iter; ++k) {
        const auto& prev = report.shots[report.shots.size() - 2];
        const auto& curr = report.shots.back();
        SecantStep step;
        try {
            step = secant_update(prev.slope, curr.slope, prev.terminal, curr.terminal, problem.b1,
                                 config.min_denominator);
        } catch (const DegenerateSecant& e) {
            report.status = Status::DegenerateSecant;
            report.diagnostic = e.what();
            return out;
        }
        if (shoot(step.slope, step.lambda)) {
            return done();
        }
    }
    std::ostringstream os;
    os << "no convergence after " << config.max_iter << " secant updates; last residual "
       << report.shots.back().residual;
    report.status = Status::MaxIterations;
    report.diagnostic = os.str();
    return out;
}

}  // namespace fbvp::shooting
