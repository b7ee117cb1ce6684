#include "painleve/poisson_dst.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace painleve {

DirichletPoissonDST::DirichletPoissonDST(int m1, int m2, double h1, double h2)
    : m1_(m1), m2_(m2) {
    if (m1 < 1 || m2 < 1)
        throw std::invalid_argument("DirichletPoissonDST: empty interior block");
    lam1_.resize(m1);
    lam2_.resize(m2);
    for (int k = 0; k < m1; ++k) {
        const double s = std::sin(0.5 * M_PI * (k + 1) / (m1 + 1));
        lam1_[k] = 4.0 * s * s / (h1 * h1);
    }
    for (int k = 0; k < m2; ++k) {
        const double s = std::sin(0.5 * M_PI * (k + 1) / (m2 + 1));
        lam2_[k] = 4.0 * s * s / (h2 * h2);
    }
    buf_.resize(static_cast<std::size_t>(m1) * m2);
    // RODFT00 applied twice multiplies by 2(m+1) per dimension.
    norm_ = 1.0 / (4.0 * (m1 + 1.0) * (m2 + 1.0));
    plan_ = fftw_plan_r2r_2d(m1, m2, buf_.data(), buf_.data(), FFTW_RODFT00,
                             FFTW_RODFT00, FFTW_ESTIMATE);
    if (!plan_) throw std::runtime_error("DirichletPoissonDST: fftw plan failed");
}

DirichletPoissonDST::~DirichletPoissonDST() {
    if (plan_) fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

void DirichletPoissonDST::solve(double coef, double c, const double* rhs, double* out) {
    const std::size_t n = buf_.size();
    std::memcpy(buf_.data(), rhs, n * sizeof(double));
    fftw_execute_r2r(static_cast<fftw_plan>(plan_), buf_.data(), buf_.data());
    for (int k1 = 0; k1 < m1_; ++k1) {
        double* row = buf_.data() + static_cast<std::size_t>(k1) * m2_;
        for (int k2 = 0; k2 < m2_; ++k2)
            row[k2] /= coef * (lam1_[k1] + lam2_[k2]) + c;
    }
    fftw_execute_r2r(static_cast<fftw_plan>(plan_), buf_.data(), buf_.data());
    for (std::size_t i = 0; i < n; ++i) out[i] = buf_[i] * norm_;
}

}  // namespace painleve
