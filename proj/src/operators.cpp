#include "painleve/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace painleve {

Field2D laplacian_2d(const Field2D& f, kernels::Exec ex) {
    f.grid.validate();
    Field2D out(f.grid);
    kernels::laplacian_interior(f.grid, f.values.data(), out.values.data(), ex);
    return out;
}

Field1D second_derivative_1d(const Field1D& f) {
    f.grid.validate();
    Field1D out(f.grid);
    const double ih = 1.0 / (f.grid.h() * f.grid.h());
    for (int i = 1; i < f.grid.n - 1; ++i)
        out.values[i] = (f.values[i - 1] - 2.0 * f.values[i] + f.values[i + 1]) * ih;
    return out;
}

namespace {
// Locate x in a uniform axis [lo, lo+h, ...] with n nodes; returns the cell
// index and the local fraction. Queries landing within 1e-9 of a node snap
// to it so nodal values are reproduced exactly.
void locate(double x, double lo, double hi, double h, int n, const char* what,
            int& i, double& frac) {
    if (!(x >= lo && x <= hi))
        throw std::domain_error(std::string(what) + ": point outside grid");
    double u = (x - lo) / h;
    i = static_cast<int>(std::floor(u));
    if (i < 0) i = 0;
    if (i > n - 2) i = n - 2;
    frac = u - i;
    if (frac < 1e-9) frac = 0.0;
    if (frac > 1.0 - 1e-9) {
        if (i < n - 2) { ++i; frac = 0.0; } else frac = 1.0;
    }
}
}  // namespace

double sample(const Field2D& f, double x1, double x2) {
    const Grid2D& g = f.grid;
    int i1, i2;
    double f1, f2;
    locate(x1, g.x1min, g.x1max, g.h1(), g.n1, "sample(x1)", i1, f1);
    locate(x2, g.x2min, g.x2max, g.h2(), g.n2, "sample(x2)", i2, f2);
    const double v00 = f.at(i1, i2), v10 = f.at(i1 + 1, i2);
    const double v01 = f.at(i1, i2 + 1), v11 = f.at(i1 + 1, i2 + 1);
    return (1.0 - f1) * ((1.0 - f2) * v00 + f2 * v01) +
           f1 * ((1.0 - f2) * v10 + f2 * v11);
}

double sample_odd_x2(const Field2D& f, double x1, double x2) {
    if (f.grid.x2min != 0.0)
        throw std::invalid_argument("sample_odd_x2: field must have x2min = 0");
    if (x2 >= 0.0) return sample(f, x1, x2);
    return -sample(f, x1, -x2);
}

double sup_norm(const Field1D& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double sup_norm(const Field2D& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double l2_norm_scaled(const Field1D& f) {
    const double h = f.grid.h();
    double s = 0.0;
    for (int i = 0; i < f.grid.n; ++i) {
        const double w = (i == 0 || i == f.grid.n - 1) ? 0.5 : 1.0;
        s += f.values[i] * f.values[i] * w * h;
    }
    return std::sqrt(s);
}

double l2_norm_scaled(const Field2D& f) {
    const Grid2D& g = f.grid;
    const double h1 = g.h1(), h2 = g.h2();
    double s = 0.0;
    for (int i1 = 0; i1 < g.n1; ++i1) {
        const double w1 = (i1 == 0 || i1 == g.n1 - 1) ? 0.5 : 1.0;
        for (int i2 = 0; i2 < g.n2; ++i2) {
            const double w2 = (i2 == 0 || i2 == g.n2 - 1) ? 0.5 : 1.0;
            const double v = f.at(i1, i2);
            s += v * v * w1 * w2 * h1 * h2;
        }
    }
    return std::sqrt(s);
}

double lagrange_interp_1d(const Field1D& f, double x, int points) {
    const Grid1D& g = f.grid;
    if (points < 2 || points > g.n)
        throw std::invalid_argument("lagrange_interp_1d: bad stencil size");
    if (!(x >= g.a && x <= g.b))
        throw std::domain_error("lagrange_interp_1d: point outside grid");
    const double u = (x - g.a) / g.h();
    int start = static_cast<int>(std::floor(u)) - (points - 1) / 2;
    start = std::clamp(start, 0, g.n - points);
    double acc = 0.0;
    for (int j = 0; j < points; ++j) {
        double lj = 1.0;
        for (int k = 0; k < points; ++k) {
            if (k == j) continue;
            lj *= (u - (start + k)) / static_cast<double>(j - k);
        }
        acc += lj * f.values[start + j];
    }
    return acc;
}

}  // namespace painleve
