#include "painleve/hastings_mcleod.hpp"

#include <algorithm>
#include <cmath>

#include "painleve/operators.hpp"
#include "painleve/special.hpp"
#include "painleve/tridiag.hpp"

namespace painleve {

HMProblem HMProblem::make(const Grid1D& grid, const SolverConfig& config) {
    HMProblem p;
    p.grid = grid;
    p.left_bc = std::sqrt(-grid.a / 2.0);
    p.right_bc = airy_ai(grid.b);
    p.config = config;
    p.validate();
    return p;
}

HMProblem HMProblem::defaults() {
    SolverConfig cfg;
    cfg.abs_tol = 1e-6;
    cfg.max_newton_iters = 60;
    cfg.clamp_bound = std::sqrt(6.0) + 1.0;
    return make(Grid1D(-12.0, 8.0, 2001), cfg);
}

void HMProblem::validate() const {
    grid.validate();
    config.validate();
    if (!(grid.a < 0.0)) throw std::invalid_argument("HMProblem: need a < 0");
    if (!(left_bc > 0.0)) throw std::invalid_argument("HMProblem: left_bc must be > 0");
    if (!(right_bc > 0.0)) throw std::invalid_argument("HMProblem: right_bc must be > 0");
}

Field1D residual_hm(const Field1D& y, const HMProblem& prob) {
    if (!(y.grid == prob.grid))
        throw std::invalid_argument("residual_hm: field grid does not match problem grid");
    const Grid1D& g = prob.grid;
    const double ih = 1.0 / (g.h() * g.h());
    Field1D r(g);
    r.values[0] = y.values[0] - prob.left_bc;
    r.values[g.n - 1] = y.values[g.n - 1] - prob.right_bc;
    for (int i = 1; i < g.n - 1; ++i) {
        const double v = y.values[i];
        r.values[i] = (y.values[i - 1] - 2.0 * v + y.values[i + 1]) * ih -
                      g.x(i) * v - 2.0 * v * v * v;
    }
    return r;
}

namespace {

Field1D default_init(const HMProblem& prob) {
    const Grid1D& g = prob.grid;
    std::vector<double> raw(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        const double branch = (x < 0.0) ? std::sqrt(-x / 2.0) : 0.0;
        raw[i] = std::max(branch, airy_ai(x));
    }
    // 5-point moving average takes the kink out of the splice; a kink in the
    // initial guess stalls the first Newton steps.
    std::vector<double> sm(g.n);
    for (int i = 0; i < g.n; ++i) {
        double s = 0.0;
        int cnt = 0;
        for (int j = std::max(0, i - 2); j <= std::min(g.n - 1, i + 2); ++j) {
            s += raw[j];
            ++cnt;
        }
        sm[i] = s / cnt;
    }
    sm[0] = prob.left_bc;
    sm[g.n - 1] = prob.right_bc;
    return Field1D(g, std::move(sm));
}

void enforce_physical(const Field1D& y, const HMProblem& prob) {
    const int n = y.grid.n;
    for (int i = 0; i < n; ++i)
        if (!(y.values[i] > 0.0))
            throw NonPhysical("solve_hastings_mcleod: converged solution not positive");
    for (int i = 0; i + 1 < n; ++i)
        if (!(y.values[i + 1] - y.values[i] < 0.0))
            throw NonPhysical("solve_hastings_mcleod: converged solution not strictly decreasing");
    (void)prob;
}

}  // namespace

Field1D solve_hastings_mcleod(const HMProblem& prob, const Field1D* init,
                              HMSolveStats* stats) {
    prob.validate();
    const Grid1D& g = prob.grid;
    const SolverConfig& cfg = prob.config;
    const double ih = 1.0 / (g.h() * g.h());

    Field1D y = init ? *init : default_init(prob);
    if (!(y.grid == g))
        throw std::invalid_argument("solve_hastings_mcleod: init grid mismatch");
    y.values[0] = prob.left_bc;
    y.values[g.n - 1] = prob.right_bc;

    std::vector<double> lo(g.n), di(g.n), up(g.n);
    double res = sup_norm(residual_hm(y, prob));
    // Converge to abs_tol, then polish with a few more full steps: Newton is
    // quadratic here and the extra accuracy is free.
    int polish_left = 3;

    for (int iter = 1; iter <= cfg.max_newton_iters; ++iter) {
        if (res <= cfg.abs_tol) {
            if (polish_left == 0 || res < 1e-13) break;
            --polish_left;
        }

        Field1D r = residual_hm(y, prob);
        // Identity rows at the boundary keep the system square; interior rows
        // carry the stencil and the diagonal term -x - 6 y^2.
        lo[0] = 0.0; di[0] = 1.0; up[0] = 0.0;
        lo[g.n - 1] = 0.0; di[g.n - 1] = 1.0; up[g.n - 1] = 0.0;
        for (int i = 1; i < g.n - 1; ++i) {
            lo[i] = ih;
            up[i] = ih;
            di[i] = -2.0 * ih - g.x(i) - 6.0 * y.values[i] * y.values[i];
        }
        std::vector<double> step = r.values;
        for (double& v : step) v = -v;
        thomas_solve(lo, di, up, step);

        double lambda = 1.0;
        Field1D trial(g);
        double new_res;
        while (true) {
            for (int i = 0; i < g.n; ++i) {
                double v = y.values[i] + lambda * step[i];
                trial.values[i] = std::clamp(v, -cfg.clamp_bound, cfg.clamp_bound);
            }
            trial.values[0] = prob.left_bc;
            trial.values[g.n - 1] = prob.right_bc;
            new_res = sup_norm(residual_hm(trial, prob));
            if (std::isfinite(new_res) && new_res < res) break;
            // Backtrack by halving down to the damping floor.
            if (lambda <= cfg.damping_min) {
                if (res <= cfg.abs_tol) { lambda = 0.0; break; }  // polishing stalled
                throw NewtonDiverged(
                    "solve_hastings_mcleod: no residual decrease at damping floor");
            }
            lambda = std::max(cfg.damping_min, 0.5 * lambda);
        }
        if (lambda == 0.0) break;
        y = trial;
        res = new_res;
        if (stats) stats->steps.push_back({iter, res, lambda});
    }

    if (res > cfg.abs_tol)
        throw NewtonDiverged("solve_hastings_mcleod: iteration cap reached at residual " +
                             std::to_string(res));
    if (stats) stats->final_residual = res;
    enforce_physical(y, prob);
    return y;
}

ShootResult shoot_hm_oracle(double k, double x_start, double x_end, double step) {
    if (!(x_start >= 5.0))
        throw std::invalid_argument("shoot_hm_oracle: x_start must be >= 5 (asymptotic seeding)");
    if (!(x_end < x_start))
        throw std::invalid_argument("shoot_hm_oracle: need x_end < x_start");
    if (!(step > 0.0)) throw std::invalid_argument("shoot_hm_oracle: step must be > 0");

    const int nsteps = static_cast<int>(std::ceil((x_start - x_end) / step));
    const double h = (x_start - x_end) / nsteps;  // integrate right to left

    auto accel = [](double x, double y) { return x * y + 2.0 * y * y * y; };

    std::vector<double> vals(nsteps + 1);
    double y = k * airy_ai(x_start);
    double p = k * airy_ai_prime(x_start);
    vals[nsteps] = y;  // field stored left-to-right on [x_end, x_start]

    ShootResult result;
    for (int s = 0; s < nsteps; ++s) {
        const double x = x_start - s * h;
        const double hh = -h;  // classical RK4, negative step
        const double k1y = p, k1p = accel(x, y);
        const double k2y = p + 0.5 * hh * k1p, k2p = accel(x + 0.5 * hh, y + 0.5 * hh * k1y);
        const double k3y = p + 0.5 * hh * k2p, k3p = accel(x + 0.5 * hh, y + 0.5 * hh * k2y);
        const double k4y = p + hh * k3p, k4p = accel(x + hh, y + hh * k3y);
        y += hh / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        p += hh / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        if (!std::isfinite(y) || std::abs(y) > 1e6) {
            result.blew_up = true;
            result.blowup_x = x - h;
            return result;
        }
        vals[nsteps - 1 - s] = y;
    }
    result.field = Field1D(Grid1D(x_end, x_start, nsteps + 1), std::move(vals));
    return result;
}

}  // namespace painleve
