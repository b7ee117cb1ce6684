// connect.hpp -- the odd connecting solution of the generalized Painleve
// equation Lap(y) = x1 y + 2 y^3 on a truncated half-plane (the axis x2 = 0
// carries the odd symmetry as a zero Dirichlet row), plus the deep-left
// rescaling onto the Allen-Cahn heteroclinic and the Airy-decay check.
#pragma once

#include <vector>

#include "painleve/grid.hpp"
#include "painleve/newton2d.hpp"
#include "painleve/solver_errors.hpp"

namespace painleve {

// h_ref must live on exactly the x1-axis of the grid (same endpoints, same
// node count): the x2-independent extension of h_ref then solves the same
// discrete interior equations, which makes the ordering check y <= h_ref
// meaningful at the solver tolerance.
struct ConnectProblem {
    Grid2D grid;
    Field1D h_ref;
    SolverConfig config;

    // Truncation x1 in [-12, 6], x2 in [0, 16], h = 0.05. h_ref is computed
    // by the 1D Hastings-McLeod solve on the x1-axis.
    static ConnectProblem defaults();
    // Builds h_ref on the x1-axis of `grid` and validates.
    static ConnectProblem make(const Grid2D& grid, const SolverConfig& config);

    void validate() const;
};

// Dirichlet data: bottom (axis) 0; top h_ref(x1); right 0 (Airy-small);
// left the deep-x1 layer profile sqrt(-x1/2)*tanh(x2*sqrt(-x1)/sqrt(2))
// capped above by h_ref(x1min). Corners belong to the left/right columns.
struct BoundaryData {
    std::vector<double> bottom, top;  // length n1
    std::vector<double> left, right;  // length n2
    double value(const Grid2D& g, int i1, int i2) const;
};

BoundaryData assemble_bc(const ConnectProblem& prob);

// Interior: Lap(y) - x1 y - 2 y^3; boundary: y - g.
Field2D residual_p2(const Field2D& y, const ConnectProblem& prob);

// Two-phase solve (preconditioned descent on the Painleve energy, then damped
// Newton). Default init: h_ref(x1) * tanh(x2/sqrt(2)). The converged field is
// checked for 0 <= y <= h_ref + 5*abs_tol and strict monotonicity in x1/x2;
// violations raise NonPhysical.
Field2D solve_connecting(const ConnectProblem& prob, const Field2D* init = nullptr,
                         Solve2DStats* stats = nullptr);

// Discrete Painleve energy (cell-midpoint quadrature over the solve domain):
// integral of 1/2|grad y|^2 + 1/2 x1 y^2 + 1/2 y^4.
double pii_energy(const Field2D& y);

// Profile of ytilde(t2) = sqrt(2)*(-x1)^{-1/2} * y(x1, x2_offset + t2*(-x1)^{-1/2})
// on a uniform t2 grid over [-t2_window, t2_window]; the limit along x1 -> -inf
// is tanh(t2/sqrt(2)) for x2_offset = 0 and +-1 off the axis.
struct RescaledProfile {
    double x1_level = 0.0;
    double x2_offset = 0.0;
    std::vector<double> t2_samples;
    std::vector<double> values;
};

RescaledProfile rescale_to_allen_cahn(const Field2D& y, double x1_level,
                                      double x2_offset, double t2_window,
                                      int samples = 161);

// M = max over nodes with x1 >= 1 of |y| exp((2/3) x1^{3/2}); passes when the
// maximum sits in the slab 1 <= x1 <= 2 (the ratio does not grow with x1).
struct DecayCheck {
    double M = 0.0;
    bool pass = false;
    double argmax_x1 = 0.0;
};

DecayCheck check_decay(const Field2D& y);

}  // namespace painleve
