#include "painleve/kernels.hpp"

namespace painleve::kernels {

namespace {

// Row workers shared by the serial and OpenMP paths. Keeping the arithmetic
// in one place guarantees the two variants produce identical bits.

inline void laplacian_row(int i1, int n2, double ih1, double ih2,
                          const double* y, double* out) {
    const double* ym = y + static_cast<std::size_t>(i1 - 1) * n2;
    const double* yc = y + static_cast<std::size_t>(i1) * n2;
    const double* yp = y + static_cast<std::size_t>(i1 + 1) * n2;
    double* o = out + static_cast<std::size_t>(i1) * n2;
    o[0] = 0.0;
    for (int i2 = 1; i2 < n2 - 1; ++i2) {
        o[i2] = (ym[i2] - 2.0 * yc[i2] + yp[i2]) * ih1 +
                (yc[i2 - 1] - 2.0 * yc[i2] + yc[i2 + 1]) * ih2;
    }
    o[n2 - 1] = 0.0;
}

inline void pii_row(int i1, int n2, double ih1, double ih2, double x1,
                    const double* y, double* out) {
    const double* ym = y + static_cast<std::size_t>(i1 - 1) * n2;
    const double* yc = y + static_cast<std::size_t>(i1) * n2;
    const double* yp = y + static_cast<std::size_t>(i1 + 1) * n2;
    double* o = out + static_cast<std::size_t>(i1) * n2;
    o[0] = 0.0;
    for (int i2 = 1; i2 < n2 - 1; ++i2) {
        const double v = yc[i2];
        const double lap = (ym[i2] - 2.0 * v + yp[i2]) * ih1 +
                           (yc[i2 - 1] - 2.0 * v + yc[i2 + 1]) * ih2;
        o[i2] = lap - x1 * v - 2.0 * v * v * v;
    }
    o[n2 - 1] = 0.0;
}

inline void gl_row(int i1, int n2, double ih1, double ih2, double eps2,
                   const double* mu, const double* u, double* out) {
    const double* um = u + static_cast<std::size_t>(i1 - 1) * n2;
    const double* uc = u + static_cast<std::size_t>(i1) * n2;
    const double* up = u + static_cast<std::size_t>(i1 + 1) * n2;
    const double* mc = mu + static_cast<std::size_t>(i1) * n2;
    double* o = out + static_cast<std::size_t>(i1) * n2;
    o[0] = 0.0;
    for (int i2 = 1; i2 < n2 - 1; ++i2) {
        const double v = uc[i2];
        const double lap = (um[i2] - 2.0 * v + up[i2]) * ih1 +
                           (uc[i2 - 1] - 2.0 * v + uc[i2 + 1]) * ih2;
        o[i2] = eps2 * lap + mc[i2] * v - v * v * v;
    }
    o[n2 - 1] = 0.0;
}

inline void helmholtz_row(int j1, int m1, int m2, double ih1, double ih2,
                          double coef, const double* q, const double* v,
                          double* out) {
    const double* vc = v + static_cast<std::size_t>(j1) * m2;
    const double* vm = (j1 > 0) ? vc - m2 : nullptr;
    const double* vp = (j1 < m1 - 1) ? vc + m2 : nullptr;
    const double* qc = q + static_cast<std::size_t>(j1) * m2;
    double* o = out + static_cast<std::size_t>(j1) * m2;
    for (int j2 = 0; j2 < m2; ++j2) {
        const double c = vc[j2];
        const double w = vm ? vm[j2] : 0.0;
        const double e = vp ? vp[j2] : 0.0;
        const double s = (j2 > 0) ? vc[j2 - 1] : 0.0;
        const double n = (j2 < m2 - 1) ? vc[j2 + 1] : 0.0;
        const double lap = (w - 2.0 * c + e) * ih1 + (s - 2.0 * c + n) * ih2;
        o[j2] = -coef * lap + qc[j2] * c;
    }
}

}  // namespace

void laplacian_interior(const Grid2D& g, const double* y, double* out, Exec ex) {
    const int n1 = g.n1, n2 = g.n2;
    const double ih1 = 1.0 / (g.h1() * g.h1());
    const double ih2 = 1.0 / (g.h2() * g.h2());
    for (int i2 = 0; i2 < n2; ++i2) {
        out[i2] = 0.0;
        out[static_cast<std::size_t>(n1 - 1) * n2 + i2] = 0.0;
    }
    if (ex == Exec::omp) {
#pragma omp parallel for schedule(static)
        for (int i1 = 1; i1 < n1 - 1; ++i1) laplacian_row(i1, n2, ih1, ih2, y, out);
    } else {
        for (int i1 = 1; i1 < n1 - 1; ++i1) laplacian_row(i1, n2, ih1, ih2, y, out);
    }
}

void pii_residual_interior(const Grid2D& g, const double* y, double* out, Exec ex) {
    const int n1 = g.n1, n2 = g.n2;
    const double ih1 = 1.0 / (g.h1() * g.h1());
    const double ih2 = 1.0 / (g.h2() * g.h2());
    for (int i2 = 0; i2 < n2; ++i2) {
        out[i2] = 0.0;
        out[static_cast<std::size_t>(n1 - 1) * n2 + i2] = 0.0;
    }
    if (ex == Exec::omp) {
#pragma omp parallel for schedule(static)
        for (int i1 = 1; i1 < n1 - 1; ++i1) pii_row(i1, n2, ih1, ih2, g.x1(i1), y, out);
    } else {
        for (int i1 = 1; i1 < n1 - 1; ++i1) pii_row(i1, n2, ih1, ih2, g.x1(i1), y, out);
    }
}

void gl_residual_interior(const Grid2D& g, double eps2, const double* mu,
                          const double* u, double* out, Exec ex) {
    const int n1 = g.n1, n2 = g.n2;
    const double ih1 = 1.0 / (g.h1() * g.h1());
    const double ih2 = 1.0 / (g.h2() * g.h2());
    for (int i2 = 0; i2 < n2; ++i2) {
        out[i2] = 0.0;
        out[static_cast<std::size_t>(n1 - 1) * n2 + i2] = 0.0;
    }
    if (ex == Exec::omp) {
#pragma omp parallel for schedule(static)
        for (int i1 = 1; i1 < n1 - 1; ++i1) gl_row(i1, n2, ih1, ih2, eps2, mu, u, out);
    } else {
        for (int i1 = 1; i1 < n1 - 1; ++i1) gl_row(i1, n2, ih1, ih2, eps2, mu, u, out);
    }
}

void helmholtz_apply_interior(int m1, int m2, double inv_h1sq, double inv_h2sq,
                              double coef, const double* q, const double* v,
                              double* out, Exec ex) {
    if (ex == Exec::omp) {
#pragma omp parallel for schedule(static)
        for (int j1 = 0; j1 < m1; ++j1)
            helmholtz_row(j1, m1, m2, inv_h1sq, inv_h2sq, coef, q, v, out);
    } else {
        for (int j1 = 0; j1 < m1; ++j1)
            helmholtz_row(j1, m1, m2, inv_h1sq, inv_h2sq, coef, q, v, out);
    }
}

}  // namespace painleve::kernels
