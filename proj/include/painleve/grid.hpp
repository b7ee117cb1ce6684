// grid.hpp -- uniform tensor grids, discrete fields, solver configuration.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace painleve {

// Uniform 1D grid with nodes x_i = a + i*(b-a)/(n-1), i = 0..n-1.
struct Grid1D {
    double a = 0.0;
    double b = 1.0;
    int n = 3;

    Grid1D() = default;
    Grid1D(double a_, double b_, int n_) : a(a_), b(b_), n(n_) { validate(); }

    void validate() const {
        if (!std::isfinite(a) || !std::isfinite(b))
            throw std::invalid_argument("Grid1D: endpoints must be finite");
        if (!(a < b)) throw std::invalid_argument("Grid1D: need a < b");
        if (n < 3) throw std::invalid_argument("Grid1D: need n >= 3");
    }

    double h() const { return (b - a) / (n - 1); }
    double x(int i) const { return a + i * h(); }

    bool operator==(const Grid1D&) const = default;
};

// Uniform 2D grid; node (i1,i2) lives at (x1(i1), x2(i2)) and the frozen
// linear ordering is idx = i1*n2 + i2 (i2 fastest).
struct Grid2D {
    double x1min = 0.0, x1max = 1.0;
    double x2min = 0.0, x2max = 1.0;
    int n1 = 3, n2 = 3;

    Grid2D() = default;
    Grid2D(double x1min_, double x1max_, double x2min_, double x2max_, int n1_, int n2_)
        : x1min(x1min_), x1max(x1max_), x2min(x2min_), x2max(x2max_), n1(n1_), n2(n2_) {
        validate();
    }

    void validate() const {
        if (!std::isfinite(x1min) || !std::isfinite(x1max) ||
            !std::isfinite(x2min) || !std::isfinite(x2max))
            throw std::invalid_argument("Grid2D: bounds must be finite");
        if (!(x1min < x1max) || !(x2min < x2max))
            throw std::invalid_argument("Grid2D: need x1min < x1max and x2min < x2max");
        if (n1 < 3 || n2 < 3) throw std::invalid_argument("Grid2D: need n1, n2 >= 3");
    }

    double h1() const { return (x1max - x1min) / (n1 - 1); }
    double h2() const { return (x2max - x2min) / (n2 - 1); }
    double x1(int i1) const { return x1min + i1 * h1(); }
    double x2(int i2) const { return x2min + i2 * h2(); }
    std::size_t idx(int i1, int i2) const {
        return static_cast<std::size_t>(i1) * n2 + i2;
    }
    std::size_t size() const { return static_cast<std::size_t>(n1) * n2; }

    bool operator==(const Grid2D&) const = default;
};

namespace detail {
inline void require_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x))
            throw std::invalid_argument(std::string(what) + ": non-finite entry");
}
}  // namespace detail

// Scalar function sampled on a Grid1D.
struct Field1D {
    Grid1D grid;
    std::vector<double> values;

    Field1D() = default;
    explicit Field1D(const Grid1D& g) : grid(g), values(g.n, 0.0) {}
    Field1D(const Grid1D& g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != grid.n)
            throw std::invalid_argument("Field1D: length(values) != grid.n");
        detail::require_finite(values, "Field1D");
    }

    double& operator[](int i) { return values[i]; }
    double operator[](int i) const { return values[i]; }
};

// Scalar function sampled on a Grid2D, stored in the frozen ordering.
struct Field2D {
    Grid2D grid;
    std::vector<double> values;

    Field2D() = default;
    explicit Field2D(const Grid2D& g) : grid(g), values(g.size(), 0.0) {}
    Field2D(const Grid2D& g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.size())
            throw std::invalid_argument("Field2D: length(values) != n1*n2");
        detail::require_finite(values, "Field2D");
    }

    double& at(int i1, int i2) { return values[grid.idx(i1, i2)]; }
    double at(int i1, int i2) const { return values[grid.idx(i1, i2)]; }
};

// Shared Newton/descent knobs. clamp_bound is a safeguard magnitude cap on
// iterates inside descent steps; it must be inactive at convergence.
struct SolverConfig {
    double abs_tol = 1e-9;
    int max_newton_iters = 50;
    double damping_min = 1.0 / 64.0;
    double linsolve_tol = 1e-10;
    double clamp_bound = 4.0;

    void validate() const {
        if (!(abs_tol > 0)) throw std::invalid_argument("SolverConfig: abs_tol must be > 0");
        if (max_newton_iters < 1)
            throw std::invalid_argument("SolverConfig: max_newton_iters must be >= 1");
        if (!(damping_min > 0) || !(damping_min <= 1))
            throw std::invalid_argument("SolverConfig: damping_min must be in (0,1]");
        if (!(linsolve_tol > 0))
            throw std::invalid_argument("SolverConfig: linsolve_tol must be > 0");
        if (!(clamp_bound > 0))
            throw std::invalid_argument("SolverConfig: clamp_bound must be > 0");
    }
};

}  // namespace painleve
