// pcg.hpp -- preconditioned conjugate gradient with sequential (reproducible)
// reductions and a nonpositive-curvature safeguard.
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace painleve {

struct PcgResult {
    int iterations = 0;
    double rel_residual = 0.0;
    bool breakdown = false;  // nonpositive curvature encountered
};

// Solves A x = b to a relative residual tolerance. apply_a and apply_minv map
// an input vector to an output vector of the same size. x holds the initial
// guess on entry. Dot products run in a fixed sequential order so the result
// does not depend on thread count.
inline PcgResult pcg_solve(const std::function<void(const double*, double*)>& apply_a,
                           const std::function<void(const double*, double*)>& apply_minv,
                           const std::vector<double>& b, std::vector<double>& x,
                           double rel_tol, int max_iters) {
    const std::size_t n = b.size();
    auto dot = [n](const std::vector<double>& u, const std::vector<double>& v) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += u[i] * v[i];
        return s;
    };

    std::vector<double> r(n), z(n), p(n), ap(n);
    apply_a(x.data(), r.data());
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
    const double bnorm = std::sqrt(dot(b, b));
    if (bnorm == 0.0) {
        x.assign(n, 0.0);
        return {0, 0.0, false};
    }

    apply_minv(r.data(), z.data());
    p = z;
    double rz = dot(r, z);
    PcgResult result;
    double rnorm = std::sqrt(dot(r, r));

    for (int it = 0; it < max_iters && rnorm / bnorm > rel_tol; ++it) {
        apply_a(p.data(), ap.data());
        const double pap = dot(p, ap);
        if (!(pap > 0.0)) {
            // Indefinite direction (possible away from the minimizer); keep
            // the current iterate and let the outer damping cope.
            result.breakdown = true;
            break;
        }
        const double alpha = rz / pap;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        apply_minv(r.data(), z.data());
        const double rz_new = dot(r, z);
        const double beta = rz_new / rz;
        rz = rz_new;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
        rnorm = std::sqrt(dot(r, r));
        result.iterations = it + 1;
    }
    result.rel_residual = rnorm / bnorm;
    return result;
}

}  // namespace painleve
