#include "painleve/newton2d.hpp"

#include <algorithm>
#include <cmath>

#include "painleve/kernels.hpp"
#include "painleve/pcg.hpp"
#include "painleve/poisson_dst.hpp"

namespace painleve {

namespace {

double sup(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

void gather_interior(const Grid2D& g, const std::vector<double>& full,
                     std::vector<double>& inner) {
    const int m2 = g.n2 - 2;
    for (int i1 = 1; i1 < g.n1 - 1; ++i1) {
        const double* src = full.data() + g.idx(i1, 1);
        double* dst = inner.data() + static_cast<std::size_t>(i1 - 1) * m2;
        std::copy(src, src + m2, dst);
    }
}

void add_interior(Field2D& y, const std::vector<double>& inner, double scale,
                  const Field2D& base, double clamp_bound) {
    const Grid2D& g = y.grid;
    const int m2 = g.n2 - 2;
    for (int i1 = 1; i1 < g.n1 - 1; ++i1) {
        const double* d = inner.data() + static_cast<std::size_t>(i1 - 1) * m2;
        for (int i2 = 1; i2 < g.n2 - 1; ++i2) {
            double v = base.at(i1, i2) + scale * d[i2 - 1];
            y.at(i1, i2) = std::clamp(v, -clamp_bound, clamp_bound);
        }
    }
}

}  // namespace

Field2D solve_newton2d(Field2D y, const SolverConfig& cfg, const Newton2DProblem& prob,
                       Solve2DStats* stats) {
    cfg.validate();
    const Grid2D& g = y.grid;
    const int m1 = g.n1 - 2, m2 = g.n2 - 2;
    const std::size_t ni = static_cast<std::size_t>(m1) * m2;

    DirichletPoissonDST fast(m1, m2, g.h1(), g.h2());
    std::vector<double> r_full(g.size()), r_int(ni), dir(ni), q(ni), delta(ni);

    prob.residual(y, r_full);
    double res = sup(r_full);
    if (stats) stats->initial_energy = prob.energy(y);

    // Phase 1: preconditioned energy descent until the residual is small
    // enough for Newton.
    Field2D trial(g);
    trial = y;
    double energy = prob.energy(y);
    int descent_iters = 0;
    while (res > prob.descent_exit && descent_iters < prob.descent_max_iters) {
        gather_interior(g, r_full, r_int);
        fast.solve(prob.coef_lap, prob.descent_precond_c, r_int.data(), dir.data());
        double alpha = 1.0;
        bool accepted = false;
        while (alpha > 1e-6) {
            add_interior(trial, dir, alpha, y, cfg.clamp_bound);
            const double e_trial = prob.energy(trial);
            if (std::isfinite(e_trial) && e_trial < energy) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;  // stalled; hand over to damped Newton
        std::swap(y.values, trial.values);
        energy = prob.energy(y);
        prob.residual(y, r_full);
        res = sup(r_full);
        ++descent_iters;
    }
    if (stats) stats->descent_iters = descent_iters;

    // Phase 2: damped Newton. A = -coef*Lap + diag(q) is solved with PCG,
    // preconditioned by the constant-shift fast solver.
    const double ih1 = 1.0 / (g.h1() * g.h1());
    const double ih2 = 1.0 / (g.h2() * g.h2());
    int polish_left = 3;
    bool converged = res <= cfg.abs_tol;

    for (int iter = 1; iter <= cfg.max_newton_iters; ++iter) {
        if (converged && (polish_left == 0 || res < 1e-13)) break;
        if (converged) --polish_left;

        prob.jacobian_diag(y, q);
        gather_interior(g, r_full, r_int);

        double qsum = 0.0;
        for (double v : q) qsum += v;
        const double c_pcg = std::max(1e-3, qsum / static_cast<double>(ni));

        auto apply_a = [&](const double* v, double* out) {
            kernels::helmholtz_apply_interior(m1, m2, ih1, ih2, prob.coef_lap, q.data(),
                                              v, out, kernels::Exec::omp);
        };
        auto apply_minv = [&](const double* v, double* out) {
            fast.solve(prob.coef_lap, c_pcg, v, out);
        };
        std::fill(delta.begin(), delta.end(), 0.0);
        const PcgResult lin = pcg_solve(apply_a, apply_minv, r_int, delta, cfg.linsolve_tol, 4000);
        if (lin.breakdown && lin.iterations == 0) {
            // Indefinite at the first direction: fall back to the
            // preconditioned residual and let damping sort it out.
            fast.solve(prob.coef_lap, c_pcg, r_int.data(), delta.data());
        }

        double lambda = 1.0;
        double new_res = res;
        bool accepted = false;
        while (true) {
            add_interior(trial, delta, lambda, y, cfg.clamp_bound);
            prob.residual(trial, r_full);
            new_res = sup(r_full);
            if (std::isfinite(new_res) && new_res < res) {
                accepted = true;
                break;
            }
            if (lambda <= cfg.damping_min) break;
            lambda = std::max(cfg.damping_min, 0.5 * lambda);
        }
        if (!accepted) {
            if (converged) {
                prob.residual(y, r_full);  // restore r_full for the final state
                break;
            }
            throw NewtonDiverged("solve_newton2d: no residual decrease at damping floor");
        }
        std::swap(y.values, trial.values);
        res = new_res;
        converged = converged || res <= cfg.abs_tol;
        if (stats) stats->steps.push_back({iter, res, lambda});
    }

    if (res > cfg.abs_tol)
        throw NewtonDiverged("solve_newton2d: iteration cap reached at residual " +
                             std::to_string(res));
    if (stats) {
        stats->final_residual = res;
        stats->final_energy = prob.energy(y);
    }
    return y;
}

}  // namespace painleve
