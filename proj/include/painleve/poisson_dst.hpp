// poisson_dst.hpp -- exact inverse of the discrete operator -coef*Lap + c on
// the interior of a Dirichlet rectangle, via the type-I discrete sine
// transform (the eigenbasis of the 1D Dirichlet Laplacian). Used both as the
// descent preconditioner and as the PCG preconditioner for Newton systems.
#pragma once

#include <vector>

namespace painleve {

class DirichletPoissonDST {
public:
    // m1 x m2 interior block with spacings h1, h2 (row-major, i2 fastest).
    DirichletPoissonDST(int m1, int m2, double h1, double h2);
    ~DirichletPoissonDST();

    DirichletPoissonDST(const DirichletPoissonDST&) = delete;
    DirichletPoissonDST& operator=(const DirichletPoissonDST&) = delete;

    // out = (-coef*Lap + c)^{-1} rhs; in-place (out == rhs) allowed.
    void solve(double coef, double c, const double* rhs, double* out);

    int m1() const { return m1_; }
    int m2() const { return m2_; }

private:
    int m1_, m2_;
    std::vector<double> lam1_, lam2_;  // 1D Dirichlet Laplacian eigenvalues
    std::vector<double> buf_;
    void* plan_ = nullptr;  // fftw_plan, forward == inverse for RODFT00
    double norm_;
};

}  // namespace painleve
