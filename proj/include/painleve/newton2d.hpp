// newton2d.hpp -- shared two-phase solver for the 2D semilinear Dirichlet
// problems: preconditioned energy descent to get into the Newton basin, then
// damped Newton with matrix-free PCG on the interior system.
#pragma once

#include <functional>
#include <vector>

#include "painleve/grid.hpp"
#include "painleve/solver_errors.hpp"

namespace painleve {

struct Solve2DStats {
    int descent_iters = 0;
    std::vector<NewtonStep> steps;
    double final_residual = 0.0;
    double initial_energy = 0.0;
    double final_energy = 0.0;
};

struct Newton2DProblem {
    // Full-field residual; boundary slots must come out 0 (rows are pinned).
    std::function<void(const Field2D&, std::vector<double>&)> residual;
    // Diagonal of the linearization at interior nodes (interior-indexed):
    // the Newton matrix is A = -coef_lap*Lap + diag(q).
    std::function<void(const Field2D&, std::vector<double>&)> jacobian_diag;
    // Discrete energy for the descent line search.
    std::function<double(const Field2D&)> energy;
    double coef_lap = 1.0;
    double descent_precond_c = 1.0;  // c in the descent preconditioner (-coef*Lap + c)^{-1}
    double descent_exit = 1e-2;      // residual sup-norm for switching to Newton
    int descent_max_iters = 600;
};

// `y` enters with boundary values pinned to the Dirichlet data; only interior
// values are updated. Throws NewtonDiverged if the residual cannot be reduced.
Field2D solve_newton2d(Field2D y, const SolverConfig& cfg, const Newton2DProblem& prob,
                       Solve2DStats* stats = nullptr);

}  // namespace painleve
