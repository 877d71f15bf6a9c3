#include "fbvp/ivp.hpp"

#include "fbvp/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

namespace fbvp::ivp {

std::string_view to_string(Method m) {
    return m == Method::Abm ? "abm" : "bdf2";
}

Method parse_method(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "abm") return Method::Abm;
    if (lower == "bdf2") return Method::Bdf2;
    throw DomainError("unknown method '" + std::string(text) + "' (expected abm or bdf2)");
}

void IvpProblem::validate() const {
    if (!(alpha > 1.0 && alpha < 2.0)) {
        std::ostringstream os;
        os << "order alpha must lie strictly inside (1, 2), got " << alpha;
        throw DomainError(os.str());
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw DomainError("horizon must be positive and finite");
    }
    if (!std::isfinite(y0) || !std::isfinite(y0prime)) {
        throw DomainError("initial values must be finite");
    }
    if (!rhs) {
        throw DomainError("right-hand side is not set");
    }
}

void GridConfig::validate() const {
    if (n_steps < 1) throw DomainError("number of steps must be positive");
    if (corrector_sweeps < 1) throw DomainError("corrector sweeps must be positive");
    if (!(newton_tol > 0.0)) throw DomainError("Newton tolerance must be positive");
    if (newton_max_iter < 1) throw DomainError("Newton iteration cap must be positive");
}

std::size_t steps_from_step_size(double horizon, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("step size must be positive");
    }
    const double ratio = std::round(horizon / h);
    if (ratio < 1.0) {
        throw DomainError("step size exceeds the horizon");
    }
    if (std::abs(ratio * h - horizon) > 1e-9 * horizon) {
        std::ostringstream os;
        os << "step size " << h << " does not divide the horizon " << horizon;
        throw DomainError(os.str());
    }
    return static_cast<std::size_t>(ratio);
}

namespace {

double checked(double value, double t, double y) {
    if (!std::isfinite(value)) {
        std::ostringstream os;
        os << "right-hand side is not finite at t=" << t << ", y=" << y;
        throw SolverError(os.str(), t, y);
    }
    return value;
}

double eval(const Rhs& f, double t, double y) { return checked(f(t, y), t, y); }

}  // namespace

IvpSolver::IvpSolver(double alpha, double horizon, GridConfig grid)
    : alpha_(alpha), horizon_(horizon), grid_(grid) {
    IvpProblem{alpha, horizon, 0.0, 0.0, [](double, double) { return 0.0; }}.validate();
    grid_.validate();
    step_ = horizon_ / static_cast<double>(grid_.n_steps);
    internal_steps_ = std::max<std::size_t>(grid_.n_steps, 2);

    if (grid_.method == Method::Bdf2) {
        cq_ = compute_cq_weights(alpha_, internal_steps_);
        std::vector<double> kernel(cq_->omega.begin() + 1, cq_->omega.end());
        history_ = std::make_shared<fastconv::ConvolutionPlan>(std::move(kernel), grid_.base_block);
    } else {
        abm_ = abm_kernels(alpha_, internal_steps_);
        // predictor: S_{n+1} = sum_j b_{n-j} f_j  ->  kernel w_m = b_{m-1}
        history_ = std::make_shared<fastconv::ConvolutionPlan>(abm_->predictor, grid_.base_block);
        // corrector: S_{n+1} = sum_{j>=1} d_{n+1-j} f_j  ->  kernel w_m = d_m, input g_0 = 0
        std::vector<double> kernel(abm_->corrector.begin() + 1, abm_->corrector.end());
        corrector_ = std::make_shared<fastconv::ConvolutionPlan>(std::move(kernel), grid_.base_block);
    }
}

Trajectory IvpSolver::solve(double y0, double y0prime, const Rhs& rhs) const {
    if (!rhs) throw DomainError("right-hand side is not set");
    if (!std::isfinite(y0) || !std::isfinite(y0prime)) {
        throw DomainError("initial values must be finite");
    }
    return grid_.method == Method::Bdf2 ? solve_bdf2(y0, y0prime, rhs) : solve_abm(y0, y0prime, rhs);
}

Trajectory IvpSolver::solve_bdf2(double y0, double y0prime, const Rhs& f) const {
    const std::size_t total = internal_steps_;
    const double h = step_;
    const double ha = std::pow(h, alpha_);
    const auto& omega = cq_->omega;
    const auto& start = cq_->start_weights;
    const double tol = grid_.newton_tol;

    std::vector<double> t(total + 1), y(total + 1), fv(total + 1);
    for (std::size_t j = 0; j <= total; ++j) {
        t[j] = static_cast<double>(j) * h;
    }
    auto taylor = [&](std::size_t j) { return y0 + y0prime * t[j]; };

    y[0] = y0;
    fv[0] = eval(f, 0.0, y0);

    fastconv::HistoryStream history(history_);
    const double s1 = history.advance(fv[0]);  // omega_1 f_0

    // Startup: y_1 and y_2 are coupled through the starting weights.
    {
        auto residual = [&](double y1, double y2, double& r1, double& r2) {
            const double f1 = eval(f, t[1], y1);
            const double f2 = eval(f, t[2], y2);
            const auto& w1 = start[1];
            const auto& w2 = start[2];
            r1 = y1 - taylor(1) -
                 ha * (s1 + omega[0] * f1 + w1[0] * fv[0] + w1[1] * f1 + w1[2] * f2);
            r2 = y2 - taylor(2) -
                 ha * (omega[2] * fv[0] + omega[1] * f1 + omega[0] * f2 + w2[0] * fv[0] + w2[1] * f1 +
                       w2[2] * f2);
        };
        const double gamma1 = std::tgamma(alpha_ + 1.0);
        double y1 = taylor(1) + fv[0] * std::pow(t[1], alpha_) / gamma1;
        double y2 = taylor(2) + fv[0] * std::pow(t[2], alpha_) / gamma1;
        bool converged = false;
        for (int it = 0; it < grid_.newton_max_iter; ++it) {
            double r1, r2;
            residual(y1, y2, r1, r2);
            const double d1 = 1e-7 * std::max(1.0, std::abs(y1));
            const double d2 = 1e-7 * std::max(1.0, std::abs(y2));
            double a1, a2, b1, b2;
            residual(y1 + d1, y2, a1, a2);
            residual(y1, y2 + d2, b1, b2);
            const double j11 = (a1 - r1) / d1, j21 = (a2 - r2) / d1;
            const double j12 = (b1 - r1) / d2, j22 = (b2 - r2) / d2;
            const double det = j11 * j22 - j12 * j21;
            if (!(std::abs(det) > 0.0) || !std::isfinite(det)) {
                break;
            }
            const double dy1 = (r1 * j22 - r2 * j12) / det;
            const double dy2 = (j11 * r2 - j21 * r1) / det;
            y1 -= dy1;
            y2 -= dy2;
            if (std::abs(dy1) <= tol * std::max(1.0, std::abs(y1)) &&
                std::abs(dy2) <= tol * std::max(1.0, std::abs(y2))) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            std::ostringstream os;
            os << "BDF2 startup system did not converge at t=" << t[2];
            throw SolverError(os.str(), t[2], y2);
        }
        y[1] = y1;
        y[2] = y2;
        fv[1] = eval(f, t[1], y1);
        fv[2] = eval(f, t[2], y2);
    }
    history.advance(fv[1]);  // S_2

    const double a = ha * omega[0];
    for (std::size_t n = 3; n <= total; ++n) {
        const double hist = history.advance(fv[n - 1]);  // S_n
        const auto& w = start[n];
        const double known = taylor(n) + ha * (hist + w[0] * fv[0] + w[1] * fv[1] + w[2] * fv[2]);
        const double tn = t[n];

        // y = known + a f(t_n, y)
        double yn = 2.0 * y[n - 1] - y[n - 2];
        bool converged = false;
        for (int it = 0; it < grid_.newton_max_iter; ++it) {
            const double fy = eval(f, tn, yn);
            const double g = yn - known - a * fy;
            const double delta = 1e-7 * std::max(1.0, std::abs(yn));
            const double fd = (eval(f, tn, yn + delta) - fy) / delta;
            const double slope = 1.0 - a * fd;
            if (!(std::abs(slope) > 1e-12) || !std::isfinite(slope)) {
                break;
            }
            const double step = g / slope;
            yn -= step;
            if (std::abs(step) <= tol * std::max(1.0, std::abs(yn))) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            // damped fixed point
            yn = y[n - 1];
            for (int it = 0; it < 20 * grid_.newton_max_iter; ++it) {
                const double next = 0.5 * yn + 0.5 * (known + a * eval(f, tn, yn));
                const double change = next - yn;
                yn = next;
                if (std::abs(change) <= tol * std::max(1.0, std::abs(yn))) {
                    converged = true;
                    break;
                }
            }
        }
        if (!converged) {
            std::ostringstream os;
            os << "BDF2 implicit step did not converge at t=" << tn << ", y=" << yn;
            throw SolverError(os.str(), tn, yn);
        }
        y[n] = yn;
        fv[n] = eval(f, tn, yn);
    }

    const std::size_t keep = grid_.n_steps + 1;
    t.resize(keep);
    y.resize(keep);
    fv.resize(keep);
    return Trajectory{h, std::move(t), std::move(y), std::move(fv)};
}

Trajectory IvpSolver::solve_abm(double y0, double y0prime, const Rhs& f) const {
    const std::size_t total = grid_.n_steps;
    const double h = step_;
    const double ha = std::pow(h, alpha_);
    const double pred_scale = ha / std::tgamma(alpha_ + 1.0);
    const double corr_scale = ha / std::tgamma(alpha_ + 2.0);
    const auto& boundary = abm_->boundary;

    std::vector<double> t(total + 1), y(total + 1), fv(total + 1);
    for (std::size_t j = 0; j <= total; ++j) {
        t[j] = static_cast<double>(j) * h;
    }
    y[0] = y0;
    fv[0] = eval(f, 0.0, y0);

    fastconv::HistoryStream predictor(history_);
    fastconv::HistoryStream corrector(corrector_);
    for (std::size_t n = 0; n < total; ++n) {
        const std::size_t next = n + 1;
        const double taylor = y0 + y0prime * t[next];
        const double pred_hist = predictor.advance(fv[n]);
        const double corr_hist = corrector.advance(n == 0 ? 0.0 : fv[n]);

        double yp = taylor + pred_scale * pred_hist;
        const double fixed = taylor + corr_scale * (boundary[n] * fv[0] + corr_hist);
        for (int sweep = 0; sweep < grid_.corrector_sweeps; ++sweep) {
            yp = fixed + corr_scale * eval(f, t[next], yp);
        }
        y[next] = yp;
        fv[next] = eval(f, t[next], yp);
    }
    return Trajectory{h, std::move(t), std::move(y), std::move(fv)};
}

Trajectory solve_ivp(const IvpProblem& problem, const GridConfig& grid) {
    problem.validate();
    const IvpSolver solver(problem.alpha, problem.horizon, grid);
    return solver.solve(problem.y0, problem.y0prime, problem.rhs);
}

}  // namespace fbvp::ivp
