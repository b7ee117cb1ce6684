// gl.hpp -- odd minimizer of the Ginzburg-Landau energy
//   E(u) = integral of eps/2 |grad u|^2 - 1/(2 eps) mu(x) u^2 + 1/(4 eps) u^4
// on the upper half-square (odd reflection across x2 = 0), and the blow-up
// rescaling at xi = (rho, 0) that produces the Painleve connecting profile.
#pragma once

#include "painleve/grid.hpp"
#include "painleve/newton2d.hpp"
#include "painleve/special.hpp"

namespace painleve {

struct GLProblem {
    GLParams params;
    Grid2D grid;  // [-L, L] x [0, L], equal spacings, x1 = 0 is a node
    SolverConfig config;

    // Resolution guarantees at least `nodes_per_layer` nodes across the
    // eps^{2/3} (-mu1)^{-1/3} transition layer.
    static GLProblem make(double epsilon, double chi, double L = 2.5,
                          int nodes_per_layer = 16);

    void validate() const;
};

// Doubled (full-plane) energy by cell-midpoint quadrature; gradient of u by
// centered differences on cell edges.
double gl_energy(const Field2D& u, const GLProblem& prob);

// Energy together with the doubled quartic integral S = integral of u^4; any
// critical point satisfies E = -S/(4 eps), so |E + S/(4 eps)| / |E| doubles
// as a quadrature/consistency audit.
struct GLEnergyParts {
    double energy = 0.0;
    double quartic = 0.0;
    double identity_gap_rel = 0.0;
};

GLEnergyParts gl_energy_parts(const Field2D& u, const GLProblem& prob);

// Energy descent then damped Newton on eps^2 Lap(u) + mu u - u^3 = 0 with
// zero Dirichlet data on the axis and the outer boundary. Default init:
// sqrt(mu^+) tanh(x2/eps), clamped. The converged field must be positive on
// the open upper half and x1-symmetric within 5*abs_tol (NonPhysical else).
Field2D minimize_odd(const GLProblem& prob, const Field2D* init = nullptr,
                     Solve2DStats* stats = nullptr);

// Rescaled window at xi = (rho, 0), theta = 0 frame:
//   w(s) = 2^{-1/2} (-mu1 eps)^{-1/3} u(rho + eps^{2/3} s1/(-mu1)^{1/3},
//                                        eps^{2/3} s2/(-mu1)^{1/3})
// with odd extension of u for s2 < 0.
struct BlowupWindow {
    double s1min = -3.0, s1max = 3.0;
    double s2min = -3.0, s2max = 3.0;
    int m1 = 121, m2 = 121;
};

Field2D blowup_rescale(const Field2D& u, const GLProblem& prob, const BlowupWindow& win);

// Max of ||u| - sqrt(mu)| over the bulk region |x| <= rho - delta, x2 >= delta
// with delta = min(3 eps^{2/3}, 0.45 rho); the cap keeps the probe region
// nonempty at eps = 0.1.
struct TFGap {
    double gap = 0.0;
    double argmax_x1 = 0.0;
    double argmax_x2 = 0.0;
    double delta = 0.0;
};

TFGap thomas_fermi_gap(const Field2D& u, const GLProblem& prob);

// Smallest K with |u| <= K (sqrt(mu^+) + eps^{1/3}) over all nodes.
double min_k_bound(const Field2D& u, const GLProblem& prob);

}  // namespace painleve
