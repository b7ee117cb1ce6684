#include "painleve/gl.hpp"

#include <algorithm>
#include <cmath>

#include "painleve/kernels.hpp"
#include "painleve/operators.hpp"

namespace painleve {

namespace {

// Round up so the count has only factors 2, 3, 5: keeps the sine transforms
// fast and grid halving exact.
int round_up_smooth(int n) {
    for (int m = n;; ++m) {
        int r = m;
        for (int f : {2, 3, 5})
            while (r % f == 0) r /= f;
        if (r == 1) return m;
    }
}

Field2D mu_field(const GLProblem& prob) {
    Field2D m(prob.grid);
    for (int i1 = 0; i1 < prob.grid.n1; ++i1)
        for (int i2 = 0; i2 < prob.grid.n2; ++i2)
            m.at(i1, i2) = mu(prob.params, prob.grid.x1(i1), prob.grid.x2(i2));
    return m;
}

}  // namespace

GLProblem GLProblem::make(double epsilon, double chi, double L, int nodes_per_layer) {
    GLProblem p;
    p.params = GLParams::make(epsilon, chi);
    if (nodes_per_layer < 2)
        throw std::invalid_argument("GLProblem: nodes_per_layer must be >= 2");
    const double layer = std::pow(epsilon, 2.0 / 3.0) / std::cbrt(-p.params.mu1);
    const double h_target = layer / nodes_per_layer;
    const int half = round_up_smooth(static_cast<int>(std::ceil(L / h_target)));
    p.grid = Grid2D(-L, L, 0.0, L, 2 * half + 1, half + 1);
    p.config.abs_tol = 1e-9;
    p.config.max_newton_iters = 40;
    p.config.clamp_bound = 2.0 * std::sqrt(1.0 - chi) + 1.0;
    p.validate();
    return p;
}

void GLProblem::validate() const {
    grid.validate();
    config.validate();
    if (grid.x2min != 0.0)
        throw std::invalid_argument("GLProblem: x2min must be 0 (odd axis on the boundary)");
    if (!(grid.x2max > params.rho + 1.0) || !(grid.x1max > params.rho + 1.0) ||
        !(-grid.x1min > params.rho + 1.0))
        throw std::invalid_argument("GLProblem: domain must contain the circle |x| = rho with margin 1");
}

GLEnergyParts gl_energy_parts(const Field2D& u, const GLProblem& prob) {
    const Grid2D& g = u.grid;
    if (!(g == prob.grid))
        throw std::invalid_argument("gl_energy: field grid does not match problem grid");
    const double eps = prob.params.epsilon;
    const double h1 = g.h1(), h2 = g.h2();
    double acc = 0.0, quart = 0.0;
    for (int i1 = 0; i1 + 1 < g.n1; ++i1) {
        const double x1c = g.x1(i1) + 0.5 * h1;
        for (int i2 = 0; i2 + 1 < g.n2; ++i2) {
            const double x2c = g.x2(i2) + 0.5 * h2;
            const double v00 = u.at(i1, i2), v10 = u.at(i1 + 1, i2);
            const double v01 = u.at(i1, i2 + 1), v11 = u.at(i1 + 1, i2 + 1);
            const double vc = 0.25 * (v00 + v10 + v01 + v11);
            const double dx1 = ((v10 + v11) - (v00 + v01)) / (2.0 * h1);
            const double dx2 = ((v01 + v11) - (v00 + v10)) / (2.0 * h2);
            const double muc = mu(prob.params, x1c, x2c);
            const double v2 = vc * vc;
            acc += 0.5 * eps * (dx1 * dx1 + dx2 * dx2) - 0.5 / eps * muc * v2 +
                   0.25 / eps * v2 * v2;
            quart += v2 * v2;
        }
    }
    GLEnergyParts parts;
    parts.energy = 2.0 * acc * h1 * h2;  // odd reflection doubles the energy
    parts.quartic = 2.0 * quart * h1 * h2;
    const double gap = std::abs(parts.energy + parts.quartic / (4.0 * eps));
    parts.identity_gap_rel = (parts.energy != 0.0) ? gap / std::abs(parts.energy) : gap;
    return parts;
}

double gl_energy(const Field2D& u, const GLProblem& prob) {
    return gl_energy_parts(u, prob).energy;
}

namespace {

void enforce_gl_physical(const Field2D& u, const GLProblem& prob) {
    const Grid2D& g = u.grid;
    const GLParams& par = prob.params;

    double min_all = 0.0, min_bulk = 1e300, max_abs = 0.0;
    const double x2_bulk = 2.0 * g.h2();
    for (int i1 = 1; i1 < g.n1 - 1; ++i1) {
        for (int i2 = 1; i2 < g.n2 - 1; ++i2) {
            const double v = u.at(i1, i2);
            min_all = std::min(min_all, v);
            max_abs = std::max(max_abs, std::abs(v));
            if (mu(par, g.x1(i1), g.x2(i2)) >= 0.05 && g.x2(i2) >= x2_bulk)
                min_bulk = std::min(min_bulk, v);
        }
    }
    if (min_all < -1e-8)
        throw NonPhysical("minimize_odd: negative values beyond noise in the upper half");
    if (!(min_bulk > 0.0))
        throw NonPhysical("minimize_odd: not strictly positive in the bulk");
    if (!(max_abs < 0.5 * prob.config.clamp_bound))
        throw NonPhysical("minimize_odd: safeguard clamp active at convergence");

    // x1-reflection symmetry (the grid is symmetric and x1 = 0 is a node).
    double asym = 0.0;
    for (int i1 = 0; i1 < g.n1; ++i1)
        for (int i2 = 0; i2 < g.n2; ++i2)
            asym = std::max(asym, std::abs(u.at(i1, i2) - u.at(g.n1 - 1 - i1, i2)));
    if (asym > 5.0 * prob.config.abs_tol)
        throw NonPhysical("minimize_odd: x1-symmetry violated: " + std::to_string(asym));
}

}  // namespace

Field2D minimize_odd(const GLProblem& prob, const Field2D* init, Solve2DStats* stats) {
    prob.validate();
    const Grid2D& g = prob.grid;
    const GLParams& par = prob.params;
    const Field2D muf = mu_field(prob);

    Field2D u(g);
    if (init) {
        if (!(init->grid == g))
            throw std::invalid_argument("minimize_odd: init grid mismatch");
        u = *init;
    } else {
        for (int i1 = 0; i1 < g.n1; ++i1) {
            for (int i2 = 0; i2 < g.n2; ++i2) {
                const double m = std::max(muf.at(i1, i2), 0.0);
                double v = std::sqrt(m) * std::tanh(g.x2(i2) / par.epsilon);
                u.at(i1, i2) = std::clamp(v, -prob.config.clamp_bound, prob.config.clamp_bound);
            }
        }
    }
    // Zero Dirichlet data on the axis and the outer boundary.
    for (int i1 = 0; i1 < g.n1; ++i1) {
        u.at(i1, 0) = 0.0;
        u.at(i1, g.n2 - 1) = 0.0;
    }
    for (int i2 = 0; i2 < g.n2; ++i2) {
        u.at(0, i2) = 0.0;
        u.at(g.n1 - 1, i2) = 0.0;
    }

    const double eps2 = par.epsilon * par.epsilon;
    Newton2DProblem np;
    np.coef_lap = eps2;
    np.descent_precond_c = std::max(0.1, par.chi);
    np.descent_exit = 1e-2;
    np.residual = [&muf, eps2](const Field2D& f, std::vector<double>& out) {
        kernels::gl_residual_interior(f.grid, eps2, muf.values.data(), f.values.data(),
                                      out.data(), kernels::Exec::omp);
    };
    np.jacobian_diag = [&muf, &g](const Field2D& f, std::vector<double>& q) {
        const int m2 = g.n2 - 2;
        for (int i1 = 1; i1 < g.n1 - 1; ++i1)
            for (int i2 = 1; i2 < g.n2 - 1; ++i2) {
                const double v = f.at(i1, i2);
                q[static_cast<std::size_t>(i1 - 1) * m2 + (i2 - 1)] =
                    -muf.at(i1, i2) + 3.0 * v * v;
            }
    };
    np.energy = [&prob](const Field2D& f) { return gl_energy(f, prob); };

    Field2D sol = solve_newton2d(std::move(u), prob.config, np, stats);
    enforce_gl_physical(sol, prob);
    return sol;
}

Field2D blowup_rescale(const Field2D& u, const GLProblem& prob, const BlowupWindow& win) {
    const GLParams& par = prob.params;
    if (!(win.s1min < win.s1max) || !(win.s2min < win.s2max) || win.m1 < 2 || win.m2 < 2)
        throw std::invalid_argument("blowup_rescale: bad window");
    const double eps23 = std::pow(par.epsilon, 2.0 / 3.0);
    const double mscale = std::cbrt(-par.mu1);
    const double stretch = eps23 / mscale;  // physical length per unit s
    const double amp = 1.0 / (std::sqrt(2.0) * std::cbrt(-par.mu1 * par.epsilon));

    const Grid2D& g = u.grid;
    auto x1_of = [&](double s1) { return par.rho + stretch * s1; };
    auto x2_of = [&](double s2) { return stretch * s2; };
    for (double s1 : {win.s1min, win.s1max})
        if (x1_of(s1) < g.x1min || x1_of(s1) > g.x1max)
            throw std::domain_error("blowup_rescale: window escapes the grid in x1");
    for (double s2 : {win.s2min, win.s2max})
        if (std::abs(x2_of(s2)) > g.x2max)
            throw std::domain_error("blowup_rescale: window escapes the grid in x2");

    Grid2D wgrid(win.s1min, win.s1max, win.s2min, win.s2max, win.m1, win.m2);
    Field2D w(wgrid);
    // centered s2 coordinates: for a symmetric window the sample set is
    // exactly sign-symmetric, so odd sampling gives exact antisymmetry
    const double mid2 = 0.5 * (win.m2 - 1);
    const double c2 = 0.5 * (win.s2min + win.s2max);
    for (int i1 = 0; i1 < win.m1; ++i1) {
        const double x1 = x1_of(wgrid.x1(i1));
        for (int i2 = 0; i2 < win.m2; ++i2) {
            const double s2 = (i2 - mid2) * wgrid.h2() + c2;
            w.at(i1, i2) = amp * sample_odd_x2(u, x1, x2_of(s2));
        }
    }
    return w;
}

TFGap thomas_fermi_gap(const Field2D& u, const GLProblem& prob) {
    const Grid2D& g = u.grid;
    const GLParams& par = prob.params;
    TFGap out;
    out.delta = std::min(3.0 * std::pow(par.epsilon, 2.0 / 3.0), 0.45 * par.rho);
    const double r_in = par.rho - out.delta;
    for (int i1 = 0; i1 < g.n1; ++i1) {
        const double x1 = g.x1(i1);
        for (int i2 = 0; i2 < g.n2; ++i2) {
            const double x2 = g.x2(i2);
            if (x2 < out.delta || x1 * x1 + x2 * x2 > r_in * r_in) continue;
            const double diff = std::abs(std::abs(u.at(i1, i2)) -
                                         std::sqrt(mu(par, x1, x2)));
            if (diff > out.gap) {
                out.gap = diff;
                out.argmax_x1 = x1;
                out.argmax_x2 = x2;
            }
        }
    }
    return out;
}

double min_k_bound(const Field2D& u, const GLProblem& prob) {
    const Grid2D& g = u.grid;
    const GLParams& par = prob.params;
    const double e13 = std::cbrt(par.epsilon);
    double k = 0.0;
    for (int i1 = 0; i1 < g.n1; ++i1)
        for (int i2 = 0; i2 < g.n2; ++i2) {
            const double m = std::max(mu(par, g.x1(i1), g.x2(i2)), 0.0);
            k = std::max(k, std::abs(u.at(i1, i2)) / (std::sqrt(m) + e13));
        }
    return k;
}

}  // namespace painleve
