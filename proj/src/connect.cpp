#include "painleve/connect.hpp"

#include <algorithm>
#include <cmath>

#include "painleve/hastings_mcleod.hpp"
#include "painleve/kernels.hpp"
#include "painleve/operators.hpp"
#include "painleve/special.hpp"

namespace painleve {

namespace {

Field1D solve_h_ref(const Grid1D& axis) {
    SolverConfig hm_cfg;
    hm_cfg.abs_tol = 1e-6;
    hm_cfg.max_newton_iters = 60;
    hm_cfg.clamp_bound = std::sqrt(-axis.a / 2.0) + 1.0;
    return solve_hastings_mcleod(HMProblem::make(axis, hm_cfg));
}

}  // namespace

ConnectProblem ConnectProblem::make(const Grid2D& grid, const SolverConfig& config) {
    ConnectProblem p;
    p.grid = grid;
    p.h_ref = solve_h_ref(Grid1D(grid.x1min, grid.x1max, grid.n1));
    p.config = config;
    p.validate();
    return p;
}

ConnectProblem ConnectProblem::defaults() {
    SolverConfig cfg;
    cfg.abs_tol = 1e-9;
    cfg.max_newton_iters = 40;
    cfg.clamp_bound = std::sqrt(6.0) + 1.0;
    return make(Grid2D(-12.0, 6.0, 0.0, 16.0, 361, 321), cfg);
}

void ConnectProblem::validate() const {
    grid.validate();
    config.validate();
    if (grid.x2min != 0.0)
        throw std::invalid_argument("ConnectProblem: x2min must be 0 (odd axis on the boundary)");
    if (!(grid.x1min < 0.0))
        throw std::invalid_argument("ConnectProblem: x1min must be < 0");
    if (h_ref.grid.a != grid.x1min || h_ref.grid.b != grid.x1max || h_ref.grid.n != grid.n1)
        throw std::invalid_argument("ConnectProblem: h_ref must live on the x1-axis of the grid");
    if (static_cast<int>(h_ref.values.size()) != grid.n1)
        throw std::invalid_argument("ConnectProblem: h_ref length mismatch");
}

double BoundaryData::value(const Grid2D& g, int i1, int i2) const {
    if (i1 == 0) return left[i2];
    if (i1 == g.n1 - 1) return right[i2];
    if (i2 == 0) return bottom[i1];
    return top[i1];
}

BoundaryData assemble_bc(const ConnectProblem& prob) {
    const Grid2D& g = prob.grid;
    BoundaryData bc;
    bc.bottom.assign(g.n1, 0.0);
    bc.top = prob.h_ref.values;
    bc.right.assign(g.n2, 0.0);
    bc.left.resize(g.n2);
    const double amp = std::sqrt(-g.x1min / 2.0);
    const double rate = std::sqrt(-g.x1min) / std::sqrt(2.0);
    const double cap = prob.h_ref.values.front();
    for (int i2 = 0; i2 < g.n2; ++i2)
        bc.left[i2] = std::min(amp * std::tanh(g.x2(i2) * rate), cap);
    return bc;
}

namespace {

void pin_boundary(Field2D& y, const BoundaryData& bc) {
    const Grid2D& g = y.grid;
    for (int i1 = 0; i1 < g.n1; ++i1) {
        y.at(i1, 0) = bc.value(g, i1, 0);
        y.at(i1, g.n2 - 1) = bc.value(g, i1, g.n2 - 1);
    }
    for (int i2 = 0; i2 < g.n2; ++i2) {
        y.at(0, i2) = bc.value(g, 0, i2);
        y.at(g.n1 - 1, i2) = bc.value(g, g.n1 - 1, i2);
    }
}

// Cell-midpoint quadrature of 1/2|grad y|^2 + 1/2 x1 y^2 + 1/2 y^4.
double pii_energy_impl(const Field2D& y) {
    const Grid2D& g = y.grid;
    const double h1 = g.h1(), h2 = g.h2();
    double acc = 0.0;
    for (int i1 = 0; i1 + 1 < g.n1; ++i1) {
        const double x1c = g.x1(i1) + 0.5 * h1;
        for (int i2 = 0; i2 + 1 < g.n2; ++i2) {
            const double v00 = y.at(i1, i2), v10 = y.at(i1 + 1, i2);
            const double v01 = y.at(i1, i2 + 1), v11 = y.at(i1 + 1, i2 + 1);
            const double vc = 0.25 * (v00 + v10 + v01 + v11);
            const double dx1 = ((v10 + v11) - (v00 + v01)) / (2.0 * h1);
            const double dx2 = ((v01 + v11) - (v00 + v10)) / (2.0 * h2);
            acc += 0.5 * (dx1 * dx1 + dx2 * dx2) + 0.5 * x1c * vc * vc +
                   0.5 * vc * vc * vc * vc;
        }
    }
    return acc * h1 * h2;
}

void enforce_connect_physical(const Field2D& y, const ConnectProblem& prob) {
    const Grid2D& g = y.grid;
    const double slack = 5.0 * prob.config.abs_tol;
    double min_y = 0.0, max_gap = -1.0;
    for (int i1 = 0; i1 < g.n1; ++i1) {
        const double href = prob.h_ref.values[i1];
        for (int i2 = 0; i2 < g.n2; ++i2) {
            const double v = y.at(i1, i2);
            min_y = std::min(min_y, v);
            max_gap = std::max(max_gap, v - href);
        }
    }
    if (min_y < -slack)
        throw NonPhysical("solve_connecting: negative values beyond tolerance");
    if (max_gap > slack)
        throw NonPhysical("solve_connecting: solution exceeds h_ref beyond tolerance");

    const double band = 1e-10;
    for (int i1 = 1; i1 < g.n1 - 1; ++i1) {
        for (int i2 = 1; i2 < g.n2 - 1; ++i2) {
            if (i1 <= g.n1 - 2 && y.at(i1 + 1, i2) - y.at(i1, i2) >= band)
                throw NonPhysical("solve_connecting: not strictly decreasing in x1");
            if (i2 <= g.n2 - 2 && y.at(i1, i2 + 1) - y.at(i1, i2) <= -band)
                throw NonPhysical("solve_connecting: not strictly increasing in x2");
        }
    }
}

}  // namespace

Field2D residual_p2(const Field2D& y, const ConnectProblem& prob) {
    if (!(y.grid == prob.grid))
        throw std::invalid_argument("residual_p2: field grid does not match problem grid");
    const Grid2D& g = prob.grid;
    Field2D r(g);
    kernels::pii_residual_interior(g, y.values.data(), r.values.data(),
                                   kernels::Exec::omp);
    const BoundaryData bc = assemble_bc(prob);
    for (int i1 = 0; i1 < g.n1; ++i1) {
        r.at(i1, 0) = y.at(i1, 0) - bc.value(g, i1, 0);
        r.at(i1, g.n2 - 1) = y.at(i1, g.n2 - 1) - bc.value(g, i1, g.n2 - 1);
    }
    for (int i2 = 0; i2 < g.n2; ++i2) {
        r.at(0, i2) = y.at(0, i2) - bc.value(g, 0, i2);
        r.at(g.n1 - 1, i2) = y.at(g.n1 - 1, i2) - bc.value(g, g.n1 - 1, i2);
    }
    return r;
}

double pii_energy(const Field2D& y) { return pii_energy_impl(y); }

Field2D solve_connecting(const ConnectProblem& prob, const Field2D* init,
                         Solve2DStats* stats) {
    prob.validate();
    const Grid2D& g = prob.grid;
    const BoundaryData bc = assemble_bc(prob);

    Field2D y(g);
    if (init) {
        if (!(init->grid == g))
            throw std::invalid_argument("solve_connecting: init grid mismatch");
        y = *init;
    } else {
        const double isqrt2 = 1.0 / std::sqrt(2.0);
        for (int i1 = 0; i1 < g.n1; ++i1)
            for (int i2 = 0; i2 < g.n2; ++i2)
                y.at(i1, i2) = prob.h_ref.values[i1] * std::tanh(g.x2(i2) * isqrt2);
    }
    pin_boundary(y, bc);

    Newton2DProblem np;
    np.coef_lap = 1.0;
    np.descent_precond_c = std::max(0.0, -g.x1min);
    np.descent_exit = 1e-2;
    np.residual = [&prob](const Field2D& f, std::vector<double>& out) {
        kernels::pii_residual_interior(f.grid, f.values.data(), out.data(),
                                       kernels::Exec::omp);
    };
    np.jacobian_diag = [&g](const Field2D& f, std::vector<double>& q) {
        const int m2 = g.n2 - 2;
        for (int i1 = 1; i1 < g.n1 - 1; ++i1) {
            const double x1 = g.x1(i1);
            for (int i2 = 1; i2 < g.n2 - 1; ++i2) {
                const double v = f.at(i1, i2);
                q[static_cast<std::size_t>(i1 - 1) * m2 + (i2 - 1)] = x1 + 6.0 * v * v;
            }
        }
    };
    np.energy = [](const Field2D& f) { return pii_energy_impl(f); };

    Field2D sol = solve_newton2d(std::move(y), prob.config, np, stats);
    enforce_connect_physical(sol, prob);
    return sol;
}

RescaledProfile rescale_to_allen_cahn(const Field2D& y, double x1_level,
                                      double x2_offset, double t2_window,
                                      int samples) {
    const Grid2D& g = y.grid;
    if (!(x1_level < 0.0))
        throw std::invalid_argument("rescale_to_allen_cahn: x1_level must be < 0");
    if (!(x1_level > g.x1min) || !(x1_level < g.x1max))
        throw std::domain_error("rescale_to_allen_cahn: x1_level outside grid");
    if (!(t2_window > 0.0) || samples < 2)
        throw std::invalid_argument("rescale_to_allen_cahn: bad window");
    const double scale = 1.0 / std::sqrt(-x1_level);
    const double vmax = std::abs(x2_offset) + t2_window * scale;
    if (vmax > g.x2max)
        throw std::domain_error("rescale_to_allen_cahn: sample points escape the grid");

    RescaledProfile p;
    p.x1_level = x1_level;
    p.x2_offset = x2_offset;
    p.t2_samples.resize(samples);
    p.values.resize(samples);
    const double amp = std::sqrt(2.0) * scale;
    const double step = 2.0 * t2_window / (samples - 1);
    const double mid = 0.5 * (samples - 1);
    for (int j = 0; j < samples; ++j) {
        // centered form keeps the sample set exactly sign-symmetric
        const double t2 = (j - mid) * step;
        p.t2_samples[j] = t2;
        p.values[j] = amp * sample_odd_x2(y, x1_level, x2_offset + t2 * scale);
    }
    return p;
}

DecayCheck check_decay(const Field2D& y) {
    const Grid2D& g = y.grid;
    if (!(g.x1max >= 4.0))
        throw std::invalid_argument("check_decay: grid must extend to x1 >= 4");
    DecayCheck out;
    out.argmax_x1 = 1.0;
    for (int i1 = 0; i1 < g.n1; ++i1) {
        const double x1 = g.x1(i1);
        if (x1 < 1.0) continue;
        const double w = std::exp((2.0 / 3.0) * x1 * std::sqrt(x1));
        for (int i2 = 0; i2 < g.n2; ++i2) {
            const double r = std::abs(y.at(i1, i2)) * w;
            if (r > out.M) {
                out.M = r;
                out.argmax_x1 = x1;
            }
        }
    }
    out.pass = out.argmax_x1 >= 1.0 && out.argmax_x1 <= 2.0;
    return out;
}

}  // namespace painleve
