// special.hpp -- Airy Ai, the Allen-Cahn heteroclinic profile, and the radial
// Ginzburg-Landau weight with its derived constants.
#pragma once

#include <cmath>
#include <stdexcept>

namespace painleve {

// Airy function Ai(x) and its derivative. Evaluation strategy:
//   x >= 9     : exponential asymptotic expansion (optimally truncated),
//   -16 <= x<9 : Taylor recurrence of w'' = x w around precomputed stations
//                spaced 0.25 apart, seeded at x = 12 from the asymptotic
//                branch and marched leftward (the stable direction for Ai),
//   x < -16    : oscillatory asymptotic expansion.
// The station table keeps the value locally a single analytic polynomial, so
// finite differences of airy_ai see a function that satisfies the ODE to
// machine precision.
double airy_ai(double x);
double airy_ai_prime(double x);

namespace detail {
// Individual evaluation branches, exposed so tests can compare them on
// overlap windows around the switch points.
double airy_ai_recentered_series(double x);
double airy_ai_asymptotic(double x);
double airy_ai_asymptotic_neg(double x);
}  // namespace detail

// Heteroclinic profile tanh(x/sqrt(2)) connecting the phases -1 and +1.
double heteroclinic(double x);

// Parameters of the Ginzburg-Landau weight mu(x) = exp(-|x|^2) - chi.
// rho is the unique positive zero of mu_rad; mu1 = mu_rad'(rho) < 0.
struct GLParams {
    double epsilon = 0.1;
    double chi = 0.5;
    double rho = 0.0;
    double mu1 = 0.0;

    static GLParams make(double epsilon, double chi) {
        if (!(epsilon > 0)) throw std::invalid_argument("GLParams: epsilon must be > 0");
        if (!(chi > 0.0 && chi < 1.0))
            throw std::invalid_argument("GLParams: chi must lie in (0,1)");
        GLParams p;
        p.epsilon = epsilon;
        p.chi = chi;
        p.rho = std::sqrt(std::log(1.0 / chi));
        p.mu1 = -2.0 * p.rho * chi;  // -2 rho e^{-rho^2} with e^{-rho^2} = chi
        return p;
    }
};

inline double mu(const GLParams& p, double x1, double x2) {
    return std::exp(-(x1 * x1 + x2 * x2)) - p.chi;
}

inline double mu_rad(const GLParams& p, double r) {
    return std::exp(-r * r) - p.chi;
}

inline double mu_rad_prime(const GLParams&, double r) {
    return -2.0 * r * std::exp(-r * r);
}

}  // namespace painleve
