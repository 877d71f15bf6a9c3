#include "fbvp/ivp.hpp"

#include "fbvp/error.hpp"

#include <cmath>

namespace fbvp::ivp {

OrderEstimate estimate_order(const IvpProblem& problem, const GridConfig& grid, double reference) {
    problem.validate();
    GridConfig fine = grid;
    fine.n_steps = 2 * grid.n_steps;

    OrderEstimate est;
    est.n_coarse = grid.n_steps;
    est.error_coarse = std::abs(solve_ivp(problem, grid).terminal() - reference);
    est.error_fine = std::abs(solve_ivp(problem, fine).terminal() - reference);
    if (est.error_coarse >= 1e-14 && est.error_fine >= 1e-14) {
        est.order = std::log2(est.error_coarse / est.error_fine);
    }
    return est;
}

double fine_grid_reference(const IvpProblem& problem, const GridConfig& grid, std::size_t refinement) {
    if (refinement < 8) {
        throw DomainError("fine-grid reference must be at least 8 times finer");
    }
    GridConfig fine = grid;
    fine.n_steps = grid.n_steps * refinement;
    return solve_ivp(problem, fine).terminal();
}

}  // namespace fbvp::ivp
