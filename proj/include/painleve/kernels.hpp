// kernels.hpp -- data-parallel interior kernels, in an OpenMP variant and a
// serial reference variant. Both variants share the same per-node arithmetic,
// so their outputs are bit-identical; tests assert this. Reductions (norms,
// dot products) are deliberately kept sequential elsewhere so results do not
// depend on the thread count.
#pragma once

#include "painleve/grid.hpp"

namespace painleve::kernels {

enum class Exec { serial, omp };

// 5-point Laplacian at interior nodes; boundary entries of out are set to 0.
void laplacian_interior(const Grid2D& g, const double* y, double* out, Exec ex);

// r = Lap(y) - x1*y - 2*y^3 at interior nodes; boundary entries set to 0.
void pii_residual_interior(const Grid2D& g, const double* y, double* out, Exec ex);

// r = eps2*Lap(u) + mu*u - u^3 at interior nodes; boundary entries set to 0.
// mu is a full-size nodal array.
void gl_residual_interior(const Grid2D& g, double eps2, const double* mu,
                          const double* u, double* out, Exec ex);

// Interior-block Helmholtz apply: out = -coef*Lap(v) + q.*v on an m1 x m2
// interior block (row-major, i2 fastest) with homogeneous Dirichlet data
// outside the block.
void helmholtz_apply_interior(int m1, int m2, double inv_h1sq, double inv_h2sq,
                              double coef, const double* q, const double* v,
                              double* out, Exec ex);

}  // namespace painleve::kernels
