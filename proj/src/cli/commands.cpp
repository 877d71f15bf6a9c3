#include "fbvp/cli.hpp"

#include "fbvp/error.hpp"
#include "fbvp/expr.hpp"
#include "fbvp/mlf.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace fbvp::cli {

using nlohmann::ordered_json;

namespace {

std::string g17(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string g(double v, int digits) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

ivp::Rhs rhs_from_text(const std::string& text) {
    auto e = std::make_shared<const expr::Expression>(expr::Expression::parse(text));
    return [e](double t, double y) { return e->evaluate(t, y); };
}

struct GridFlags {
    std::optional<std::size_t> n;
    std::optional<double> h;
    std::string method = "bdf2";
    int sweeps = 1;

    void add_to(CLI::App& app) {
        auto* n_opt = app.add_option("--n", n, "number of steps N (h = T/N)");
        auto* h_opt = app.add_option("--h", h, "step size; must divide the horizon");
        n_opt->excludes(h_opt);
        app.add_option("--method", method, "abm or bdf2")->capture_default_str();
        app.add_option("--sweeps", sweeps, "ABM corrector sweeps")->capture_default_str();
    }

    ivp::GridConfig build(double horizon) const {
        ivp::GridConfig grid;
        if (n) {
            grid.n_steps = *n;
        } else if (h) {
            grid.n_steps = ivp::steps_from_step_size(horizon, *h);
        } else {
            throw DomainError("one of --n or --h is required");
        }
        grid.method = ivp::parse_method(method);
        grid.corrector_sweeps = sweeps;
        grid.validate();
        return grid;
    }
};

struct BvpFlags {
    double alpha = 0.0;
    double t_end = 0.0;
    double b0 = 0.0;
    double b1 = 0.0;
    std::string rhs;
    GridFlags grid;
    double tol = 1e-8;
    int max_iter = 25;
    std::vector<double> slopes;
    std::string out;
    std::string report;
    bool timing = false;
};

struct IvpFlags {
    double alpha = 0.0;
    double t_end = 0.0;
    double y0 = 0.0;
    double yp0 = 0.0;
    std::string rhs;
    GridFlags grid;
    std::string out;
};

struct Figure1Flags {
    double h = 1e-4;
    double horizon = 5.5;
    std::string out_prefix;
};

struct ConvergeFlags {
    double alpha = 0.0;
    double t_end = 1.0;
    double y0 = 1.0;
    double yp0 = 0.0;
    std::optional<double> lambda;
    std::optional<double> constant;
    std::string rhs;
    std::string method = "bdf2";
    std::vector<std::size_t> ns{100, 200, 400, 800};
};

struct MlFlags {
    double alpha = 0.0;
    double beta = 0.0;
    double z = 0.0;
};

struct HorizonFlags {
    double alpha = 0.0;
    std::optional<double> a_lower;
    std::string rhs;
    double y0 = 0.0;
    double yp0 = 0.0;
    double t_end = 0.0;
    std::size_t n = 1000;
    double window = 1.0;
    std::size_t samples = 100;
};

ordered_json report_json(const shooting::ShootingReport& r) {
    ordered_json shots = ordered_json::array();
    for (const auto& s : r.shots) {
        shots.push_back({{"slope", s.slope},
                         {"terminal", s.terminal},
                         {"residual", s.residual},
                         {"lambda", s.lambda ? ordered_json(*s.lambda) : ordered_json(nullptr)}});
    }
    return {{"converged", r.converged()},
            {"status", std::string(shooting::to_string(r.status))},
            {"diagnostic", r.diagnostic},
            {"ivp_solve_count", r.ivp_solve_count()},
            {"secant_steps", r.secant_steps()},
            {"iterations", shots}};
}

void write_json(const std::string& path, const ordered_json& j) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open '" + path + "' for writing");
    f << j.dump(2) << '\n';
}

int cmd_solve_bvp(const BvpFlags& flags, std::ostream& out) {
    const auto started = std::chrono::steady_clock::now();
    shooting::BvpProblem problem{flags.alpha, flags.t_end, flags.b0, flags.b1, rhs_from_text(flags.rhs)};
    problem.validate();
    const ivp::GridConfig grid = flags.grid.build(problem.horizon);
    shooting::ShootingConfig config;
    config.tol = flags.tol;
    config.max_iter = flags.max_iter;
    if (!flags.slopes.empty()) {
        if (flags.slopes.size() != 2) throw DomainError("--slopes takes exactly two values");
        config.initial_slopes = std::pair{flags.slopes[0], flags.slopes[1]};
    }
    config.validate();

    const auto solution = shooting::solve_bvp(problem, grid, config);
    const auto& report = solution.report;
    if (!flags.out.empty()) {
        write_trajectory_csv(flags.out, solution.trajectory);
    }
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    if (!flags.report.empty()) {
        ordered_json inputs = {{"alpha", problem.alpha},
                               {"t_end", problem.horizon},
                               {"b0", problem.b0},
                               {"b1", problem.b1},
                               {"rhs", flags.rhs},
                               {"method", std::string(ivp::to_string(grid.method))},
                               {"n", grid.n_steps},
                               {"h", problem.horizon / static_cast<double>(grid.n_steps)},
                               {"sweeps", grid.corrector_sweeps},
                               {"tol", config.tol},
                               {"max_iter", config.max_iter},
                               {"initial_slopes", config.initial_slopes
                                                      ? ordered_json::array({config.initial_slopes->first,
                                                                             config.initial_slopes->second})
                                                      : ordered_json(nullptr)}};
        ordered_json j = {{"schema", 1},
                          {"command", "solve-bvp"},
                          {"inputs", inputs},
                          {"shooting", report_json(report)},
                          {"outputs", {{"trajectory_csv", flags.out.empty() ? ordered_json(nullptr)
                                                                             : ordered_json(flags.out)}}}};
        if (flags.timing) {
            j["wall_time_ms"] = elapsed_ms;
        }
        write_json(flags.report, j);
    }

    const double residual = report.shots.back().residual;
    out << (report.converged() ? "converged" : "not converged") << ": " << report.ivp_solve_count()
        << " IVP solves (" << report.secant_steps() << " secant steps), residual " << g(residual, 3)
        << ", slope " << g17(report.shots.back().slope) << ", " << g(elapsed_ms, 4) << " ms\n";
    if (!report.converged()) {
        out << "diagnostic: " << report.diagnostic << '\n';
        return kNoConvergence;
    }
    return kSuccess;
}

int cmd_solve_ivp(const IvpFlags& flags, std::ostream& out) {
    ivp::IvpProblem problem{flags.alpha, flags.t_end, flags.y0, flags.yp0, rhs_from_text(flags.rhs)};
    problem.validate();
    const auto trajectory = ivp::solve_ivp(problem, flags.grid.build(problem.horizon));
    if (!flags.out.empty()) {
        write_trajectory_csv(flags.out, trajectory);
    }
    out << "y(" << g17(problem.horizon) << ") = " << g17(trajectory.terminal()) << '\n';
    return kSuccess;
}

int cmd_table1(std::ostream& out) {
    const auto result = run_table1();
    out << "reference: BDF2, N = " << result.reference_steps << ", shooting tol "
        << g(result.reference_tol, 3) << "\n";
    out << "reference self-test (h = 1/6400 vs 1/12800): |diff at T| = "
        << g(result.self_test_terminal_diff, 3) << ", max |diff| = " << g(result.self_test_max_diff, 3)
        << "\n\n";
    out << std::left << std::setw(11) << "step size" << std::setw(11) << "requested" << std::setw(12)
        << "iterations" << std::setw(14) << "secant steps" << "max error over [0, 2.9]\n";
    bool all_converged = true;
    for (const auto& row : result.rows) {
        std::ostringstream step;
        step << "1/" << std::llround(1.0 / row.step);
        out << std::left << std::setw(11) << step.str() << std::setw(11) << g(row.tol, 3)
            << std::setw(12) << row.report.ivp_solve_count() << std::setw(14)
            << row.report.secant_steps() << g(row.max_error, 3) << '\n';
        all_converged = all_converged && row.report.converged();
    }
    return all_converged ? kSuccess : kNoConvergence;
}

int cmd_figure1(const Figure1Flags& flags, std::ostream& out) {
    const auto result = run_figure1(flags.h, flags.horizon);
    if (!flags.out_prefix.empty()) {
        write_trajectory_csv(flags.out_prefix + "_y1.csv", result.first);
        write_trajectory_csv(flags.out_prefix + "_y2.csv", result.second);
    }
    out << "t* = " << g(result.crossing.t_star, 8) << ", y* = " << g(result.crossing.y_star, 8) << '\n';
    return kSuccess;
}

int cmd_converge(const ConvergeFlags& flags, std::ostream& out) {
    const int kinds = (flags.lambda ? 1 : 0) + (flags.constant ? 1 : 0) + (flags.rhs.empty() ? 0 : 1);
    if (kinds != 1) throw DomainError("give exactly one of --lambda, --const or --rhs");
    if (flags.ns.empty()) throw DomainError("--ns must list at least one step count");

    ivp::IvpProblem problem{flags.alpha, flags.t_end, flags.y0, flags.yp0, {}};
    std::optional<double> exact;
    std::string label;
    if (flags.lambda) {
        const double lam = *flags.lambda;
        problem.rhs = [lam](double, double y) { return lam * y; };
        problem.validate();
        const double z = lam * std::pow(flags.t_end, flags.alpha);
        exact = flags.y0 * mlf::mittag_leffler(flags.alpha, 1.0, z) +
                flags.yp0 * flags.t_end * mlf::mittag_leffler(flags.alpha, 2.0, z);
        label = "Mittag-Leffler closed form";
    } else if (flags.constant) {
        const double c = *flags.constant;
        problem.rhs = [c](double, double) { return c; };
        problem.validate();
        exact = flags.y0 + flags.yp0 * flags.t_end +
                c * std::pow(flags.t_end, flags.alpha) / std::tgamma(flags.alpha + 1.0);
        label = "closed form";
    } else {
        problem.rhs = rhs_from_text(flags.rhs);
        problem.validate();
    }

    ivp::GridConfig grid;
    grid.method = ivp::parse_method(flags.method);
    double reference;
    if (exact) {
        reference = *exact;
    } else {
        grid.n_steps = *std::max_element(flags.ns.begin(), flags.ns.end());
        reference = ivp::fine_grid_reference(problem, grid, 16);
        label = "fine grid, N = " + std::to_string(grid.n_steps * 16);
    }
    out << "method " << ivp::to_string(grid.method) << ", reference y(T) = " << g17(reference) << " ("
        << label << ")\n";
    out << std::left << std::setw(10) << "N" << std::setw(16) << "error" << "order\n";

    double prev_error = 0.0;
    std::size_t prev_n = 0;
    for (std::size_t n : flags.ns) {
        grid.n_steps = n;
        const double error = std::abs(ivp::solve_ivp(problem, grid).terminal() - reference);
        out << std::left << std::setw(10) << n << std::setw(16) << g(error, 6);
        if (prev_n != 0) {
            if (error < 1e-14 || prev_error < 1e-14) {
                out << "order not measurable at this resolution";
            } else {
                out << g(std::log(prev_error / error) / std::log(static_cast<double>(n) / prev_n), 4);
            }
        }
        out << '\n';
        prev_error = error;
        prev_n = n;
    }
    return kSuccess;
}

int cmd_ml(const MlFlags& flags, std::ostream& out) {
    if (!(flags.alpha > 0.0 && flags.alpha <= 2.0) || !(flags.beta > 0.0 && flags.beta <= 3.0)) {
        throw DomainError("require 0 < alpha <= 2 and 0 < beta <= 3");
    }
    out << g(mlf::mittag_leffler(flags.alpha, flags.beta, flags.z), 15) << '\n';
    return kSuccess;
}

int cmd_horizon(const HorizonFlags& flags, std::ostream& out) {
    double a_lower;
    if (flags.a_lower) {
        a_lower = *flags.a_lower;
    } else {
        if (flags.rhs.empty()) throw DomainError("give --a-lower or --rhs with --t-end");
        ivp::IvpProblem problem{flags.alpha, flags.t_end, flags.y0, flags.yp0, rhs_from_text(flags.rhs)};
        problem.validate();
        ivp::GridConfig grid;
        grid.n_steps = flags.n;
        const auto base = ivp::solve_ivp(problem, grid);
        const auto range = analysis::estimate_slope_range(problem.rhs, base, flags.window, flags.samples);
        a_lower = range.a_lower;
        out << "sampled a_lower = " << g(range.a_lower, 10) << ", a_upper = " << g(range.a_upper, 10)
            << " over [0, " << g17(flags.t_end) << "]\n";
    }
    try {
        const double t_star = analysis::uniqueness_horizon(flags.alpha, a_lower);
        if (std::isinf(t_star)) {
            out << "uniqueness horizon: unbounded (a_lower >= 0)\n";
        } else {
            out << "uniqueness horizon: t* = " << g(t_star, 10) << '\n';
        }
    } catch (const RootNotFound& e) {
        out << "uniqueness horizon: unbounded (" << e.what() << ")\n";
    }
    return kSuccess;
}

void print_parse_error(const ParseError& e, const std::string& source, std::ostream& err) {
    err << "error: " << e.what() << '\n';
    if (!source.empty()) {
        err << "  " << source << "\n  " << std::string(std::min(e.offset(), source.size()), ' ') << "^\n";
    }
}

}  // namespace

double example_rhs(double t, double y) { return std::sin(1.3 * t * y) / std::pow(t + 5.0, 0.65); }

shooting::BvpProblem example_bvp() {
    return {kExampleAlpha, kExampleHorizon, kExampleB0, kExampleB1, example_rhs};
}

void write_trajectory_csv(const std::string& path, const ivp::Trajectory& trajectory) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open '" + path + "' for writing");
    std::string buf = "t,y\n";
    for (std::size_t j = 0; j < trajectory.values.size(); ++j) {
        buf += g17(trajectory.times[j]);
        buf += ',';
        buf += g17(trajectory.values[j]);
        buf += '\n';
    }
    f << buf;
}

ivp::Trajectory read_trajectory_csv(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(f, line) || line != "t,y") throw DomainError("'" + path + "' lacks the t,y header");
    ivp::Trajectory tr;
    while (std::getline(f, line)) {
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw DomainError("malformed CSV row: " + line);
        double t = 0.0, y = 0.0;
        const auto r1 = std::from_chars(line.data(), line.data() + comma, t);
        const auto r2 = std::from_chars(line.data() + comma + 1, line.data() + line.size(), y);
        if (r1.ec != std::errc() || r2.ec != std::errc()) throw DomainError("malformed CSV row: " + line);
        tr.times.push_back(t);
        tr.values.push_back(y);
    }
    if (tr.times.size() >= 2) tr.step = tr.times[1] - tr.times[0];
    return tr;
}

Table1Result run_table1() {
    struct Setting {
        std::size_t inverse_step;
        double tol;
    };
    constexpr Setting kRows[] = {{100, 1e-4}, {100, 1e-8}, {200, 1e-8},
                                 {400, 1e-8}, {400, 1e-10}, {800, 1e-10}};
    constexpr std::size_t kReferenceInverseStep = 12800;
    const auto problem = example_bvp();
    auto steps_for = [&](std::size_t inverse_step) {
        return ivp::steps_from_step_size(problem.horizon, 1.0 / static_cast<double>(inverse_step));
    };

    Table1Result result;
    result.reference_tol = 1e-13;
    shooting::ShootingConfig ref_config;
    ref_config.tol = result.reference_tol;
    ref_config.max_iter = 40;
    ivp::GridConfig ref_grid;
    ref_grid.n_steps = steps_for(kReferenceInverseStep);
    result.reference_steps = ref_grid.n_steps;
    const auto reference = shooting::solve_bvp(problem, ref_grid, ref_config);
    if (!reference.report.converged()) {
        throw SolverError("reference solve did not converge: " + reference.report.diagnostic,
                          problem.horizon, reference.trajectory.terminal());
    }

    ivp::GridConfig half_grid;
    half_grid.n_steps = steps_for(kReferenceInverseStep / 2);
    const auto half = shooting::solve_bvp(problem, half_grid, ref_config);
    result.self_test_terminal_diff = std::abs(half.trajectory.terminal() - reference.trajectory.terminal());
    for (std::size_t j = 0; j <= half_grid.n_steps; ++j) {
        result.self_test_max_diff = std::max(
            result.self_test_max_diff, std::abs(half.trajectory.values[j] - reference.trajectory.values[2 * j]));
    }

    for (const auto& setting : kRows) {
        Table1Row row;
        row.step = 1.0 / static_cast<double>(setting.inverse_step);
        row.tol = setting.tol;
        ivp::GridConfig grid;
        grid.n_steps = steps_for(setting.inverse_step);
        row.n_steps = grid.n_steps;
        shooting::ShootingConfig config;
        config.tol = setting.tol;
        auto solution = shooting::solve_bvp(problem, grid, config);
        const std::size_t stride = kReferenceInverseStep / setting.inverse_step;
        for (std::size_t j = 0; j <= grid.n_steps; ++j) {
            row.max_error = std::max(row.max_error, std::abs(solution.trajectory.values[j] -
                                                             reference.trajectory.values[j * stride]));
        }
        row.report = std::move(solution.report);
        result.rows.push_back(std::move(row));
    }
    return result;
}

Figure1Result run_figure1(double step, double horizon) {
    ivp::GridConfig grid;
    grid.n_steps = ivp::steps_from_step_size(horizon, step);
    const ivp::IvpSolver solver(kExampleAlpha, horizon, grid);
    Figure1Result r;
    r.first = solver.solve(1.0, -0.15, example_rhs);
    r.second = solver.solve(1.0, -0.3, example_rhs);
    r.crossing = analysis::find_intersection(r.first, r.second);
    return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shooting solver for fractional Dirichlet boundary value problems of order in (1, 2)",
                 "fbvp"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", "fbvp 1.0");

    BvpFlags bvp;
    auto* solve_bvp = app.add_subcommand("solve-bvp", "solve D^a y = f(t,y), y(0)=b0, y(T)=b1 by shooting");
    solve_bvp->add_option("--alpha", bvp.alpha, "order in (1, 2)")->required();
    solve_bvp->add_option("--t-end", bvp.t_end, "right end point T")->required();
    solve_bvp->add_option("--b0", bvp.b0, "y(0)")->required();
    solve_bvp->add_option("--b1", bvp.b1, "y(T)")->required();
    solve_bvp->add_option("--rhs", bvp.rhs, "right-hand side f(t, y)")->required();
    bvp.grid.add_to(*solve_bvp);
    solve_bvp->add_option("--tol", bvp.tol, "absolute tolerance on |y(T) - b1|")->capture_default_str();
    solve_bvp->add_option("--max-iter", bvp.max_iter, "secant update cap")->capture_default_str();
    solve_bvp->add_option("--slopes", bvp.slopes, "two initial slopes s0,s1")->delimiter(',');
    solve_bvp->add_option("--out", bvp.out, "trajectory CSV path");
    solve_bvp->add_option("--report", bvp.report, "JSON report path");
    solve_bvp->add_flag("--timing", bvp.timing, "record wall time in the JSON report");

    IvpFlags ivpf;
    auto* solve_ivp = app.add_subcommand("solve-ivp", "solve D^a y = f(t,y), y(0)=y0, y'(0)=yp0");
    solve_ivp->add_option("--alpha", ivpf.alpha, "order in (1, 2)")->required();
    solve_ivp->add_option("--t-end", ivpf.t_end, "horizon")->required();
    solve_ivp->add_option("--y0", ivpf.y0, "y(0)")->required();
    solve_ivp->add_option("--yp0", ivpf.yp0, "y'(0)")->required();
    solve_ivp->add_option("--rhs", ivpf.rhs, "right-hand side f(t, y)")->required();
    ivpf.grid.add_to(*solve_ivp);
    solve_ivp->add_option("--out", ivpf.out, "trajectory CSV path");

    auto* table1 = app.add_subcommand("table1", "iteration counts and errors of the built-in BVP example");

    Figure1Flags fig;
    auto* figure1 = app.add_subcommand("figure1", "crossing of two solutions with y(0)=1, y'(0)=-0.15/-0.3");
    figure1->add_option("--h", fig.h, "step size")->capture_default_str();
    figure1->add_option("--horizon", fig.horizon, "integration horizon")->capture_default_str();
    figure1->add_option("--out-prefix", fig.out_prefix, "write <prefix>_y1.csv and <prefix>_y2.csv");

    ConvergeFlags conv;
    auto* converge = app.add_subcommand("converge", "empirical convergence order of the IVP solvers");
    converge->add_option("--alpha", conv.alpha, "order in (1, 2)")->required();
    converge->add_option("--t-end", conv.t_end, "horizon")->capture_default_str();
    converge->add_option("--y0", conv.y0, "y(0)")->capture_default_str();
    converge->add_option("--yp0", conv.yp0, "y'(0)")->capture_default_str();
    converge->add_option("--lambda", conv.lambda, "linear problem f = lambda*y (Mittag-Leffler reference)");
    converge->add_option("--const", conv.constant, "constant f = c (closed-form reference)");
    converge->add_option("--rhs", conv.rhs, "general f(t, y) (fine-grid reference)");
    converge->add_option("--method", conv.method, "abm or bdf2")->capture_default_str();
    converge->add_option("--ns", conv.ns, "step counts, comma separated")->delimiter(',')->capture_default_str();

    MlFlags ml;
    auto* mlcmd = app.add_subcommand("ml", "evaluate the Mittag-Leffler function E_{alpha,beta}(z)");
    mlcmd->add_option("--alpha", ml.alpha, "alpha in (0, 2]")->required();
    mlcmd->add_option("--beta", ml.beta, "beta in (0, 3]")->required();
    mlcmd->add_option("--z", ml.z, "real argument")->required()->allow_extra_args(false);

    HorizonFlags hor;
    auto* horizon = app.add_subcommand("horizon", "uniqueness horizon from the separation lower bound");
    horizon->add_option("--alpha", hor.alpha, "order in (1, 2)")->required();
    horizon->add_option("--a-lower", hor.a_lower, "lower difference-quotient bound");
    horizon->add_option("--rhs", hor.rhs, "sample a_lower along the IVP solution of this rhs");
    horizon->add_option("--y0", hor.y0, "y(0) of the base trajectory");
    horizon->add_option("--yp0", hor.yp0, "y'(0) of the base trajectory");
    horizon->add_option("--t-end", hor.t_end, "sampling interval [0, t-end]");
    horizon->add_option("--n", hor.n, "steps of the base trajectory")->capture_default_str();
    horizon->add_option("--window", hor.window, "y sampling half-width")->capture_default_str();
    horizon->add_option("--samples", hor.samples, "samples per side")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    std::string rhs_text;
    try {
        if (*solve_bvp) {
            rhs_text = bvp.rhs;
            return cmd_solve_bvp(bvp, out);
        }
        if (*solve_ivp) {
            rhs_text = ivpf.rhs;
            return cmd_solve_ivp(ivpf, out);
        }
        if (*table1) return cmd_table1(out);
        if (*figure1) return cmd_figure1(fig, out);
        if (*converge) {
            rhs_text = conv.rhs;
            return cmd_converge(conv, out);
        }
        if (*mlcmd) return cmd_ml(ml, out);
        if (*horizon) {
            rhs_text = hor.rhs;
            return cmd_horizon(hor, out);
        }
    } catch (const ParseError& e) {
        print_parse_error(e, rhs_text, err);
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NoIntersection& e) {
        err << "no intersection: " << e.what() << '\n';
        return kNumerical;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kNumerical;
    }
    return kUsage;
}

}  // namespace fbvp::cli
