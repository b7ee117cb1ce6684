// hastings_mcleod.hpp -- the Hastings-McLeod solution of the second Painleve
// equation y'' = x y + 2 y^3, computed as a two-point boundary-value problem
// on a truncated interval, with an independent shooting oracle.
#pragma once

#include <optional>
#include <vector>

#include "painleve/grid.hpp"
#include "painleve/solver_errors.hpp"

namespace painleve {

// Boundary data follows the two asymptotic branches: y ~ Ai(x) as x -> +inf
// and y ~ sqrt(|x|/2) as x -> -inf. left_bc pins the leading-order branch
// value sqrt(|a|/2); right_bc pins Ai(b).
struct HMProblem {
    Grid1D grid;
    double left_bc = 0.0;
    double right_bc = 0.0;
    SolverConfig config;

    // Builds the boundary data from the grid endpoints.
    static HMProblem make(const Grid1D& grid, const SolverConfig& config);
    // Truncation [-12, 8] with 2001 nodes; endpoint branch errors are below
    // 1e-3 there.
    static HMProblem defaults();

    void validate() const;
};

// Interior: y'' - x y - 2 y^3 via the 3-point stencil; boundary: y - bc.
Field1D residual_hm(const Field1D& y, const HMProblem& prob);

struct HMSolveStats {
    std::vector<NewtonStep> steps;
    double final_residual = 0.0;
};

// Damped Newton with an analytic tridiagonal Jacobian (Thomas solves).
// Default initial guess: the branch splice max(sqrt((-x)+/2), Ai(x)) smoothed
// by a 5-point moving average. The returned field is verified positive and
// strictly decreasing; violations raise NonPhysical.
Field1D solve_hastings_mcleod(const HMProblem& prob,
                              const Field1D* init = nullptr,
                              HMSolveStats* stats = nullptr);

// Backward RK4 integration of the ODE seeded on the Airy branch:
// y(x_start) = k*Ai(x_start), y'(x_start) = k*Ai'(x_start). k = 1 reproduces
// the Hastings-McLeod solution; k above/below 1 brackets it (blow-up to +inf
// or departure into the oscillatory regime). Blow-up (|y| > 1e6) is an
// expected outcome reported in the result, not an error.
struct ShootResult {
    Field1D field;          // valid when !blew_up
    bool blew_up = false;
    double blowup_x = 0.0;  // where |y| exceeded 1e6
};

ShootResult shoot_hm_oracle(double k, double x_start, double x_end,
                            double step = 1e-3);

}  // namespace painleve
