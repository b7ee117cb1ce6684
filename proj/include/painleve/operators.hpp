// operators.hpp -- finite-difference operators, interpolation, norms.
#pragma once

#include "painleve/grid.hpp"
#include "painleve/kernels.hpp"

namespace painleve {

// Discrete Laplacian: 5-point stencil at interior nodes, 0 at boundary nodes
// (solvers treat boundary rows as pinned Dirichlet identities, so boundary
// residual slots are never read from operator output).
Field2D laplacian_2d(const Field2D& f, kernels::Exec ex = kernels::Exec::omp);

// 3-point second derivative; same boundary convention.
Field1D second_derivative_1d(const Field1D& f);

// Bilinear interpolation at a point strictly inside the grid rectangle.
// Exact on bilinear functions; reproduces nodal values exactly at nodes.
double sample(const Field2D& f, double x1, double x2);

// Odd-in-x2 extension of a half-plane field (grid.x2min must be 0):
// value(x1, -x2) = -value(x1, x2).
double sample_odd_x2(const Field2D& f, double x1, double x2);

double sup_norm(const Field1D& f);
double sup_norm(const Field2D& f);

// Grid-weighted L2 norm: sqrt(sum v^2 * w) with trapezoid weights, so the
// weights sum exactly to the domain measure.
double l2_norm_scaled(const Field1D& f);
double l2_norm_scaled(const Field2D& f);

// Polynomial (Lagrange) interpolation of a 1D field using `points` nearest
// nodes. Used for resampling converged solutions between grids.
double lagrange_interp_1d(const Field1D& f, double x, int points = 6);

}  // namespace painleve
