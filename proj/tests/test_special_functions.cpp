#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "painleve/special.hpp"

using namespace painleve;

namespace {

// Independent oracle: the Maclaurin series of the equation w'' = x w seeded
// by the closed forms Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3).
// Machine accurate for |x| <= 2 (no term growth there).
constexpr double kAi0 = 0.35502805388781723926;
constexpr double kAip0 = -0.25881940379280679840;

double maclaurin_ai(double x) {
    double f = 1.0, g = x, tf = 1.0, tg = x;
    for (int k = 0; k < 40; ++k) {
        tf *= x * x * x / ((3 * k + 2.0) * (3 * k + 3.0));
        tg *= x * x * x / ((3 * k + 3.0) * (3 * k + 4.0));
        f += tf;
        g += tg;
    }
    return kAi0 * f + kAip0 * g;
}

// Richardson-extrapolated 3-point second difference at base spacing h: the
// plain 3-point stencil has an O(h^2) truncation floor (h^2 f''''/12 is
// 4.3e-8 for Ai at x = 0) that sits above the 1e-8 tolerance, so the h^2
// term is eliminated with a second evaluation at h/2.
template <class F>
double second_diff_r(F&& f, double x, double h) {
    const double d_h = (f(x - h) - 2.0 * f(x) + f(x + h)) / (h * h);
    const double d_h2 = (f(x - 0.5 * h) - 2.0 * f(x) + f(x + 0.5 * h)) / (0.25 * h * h);
    return (4.0 * d_h2 - d_h) / 3.0;
}

}  // namespace

TEST_CASE("Ai(0) and Ai'(0) closed forms") {
    // 3^{-2/3}/Gamma(2/3) and -3^{-1/3}/Gamma(1/3), evaluated independently
    const double g13 = 2.6789385347077476337;
    const double g23 = 1.3541179394264004169;
    const double ai0 = std::pow(3.0, -2.0 / 3.0) / g23;
    const double aip0 = -std::pow(3.0, -1.0 / 3.0) / g13;
    CHECK(airy_ai(0.0) == doctest::Approx(ai0).epsilon(1e-12));
    CHECK(airy_ai_prime(0.0) == doctest::Approx(aip0).epsilon(1e-12));
}

TEST_CASE("Ai matches the independent Maclaurin oracle near the origin") {
    for (double x : {-2.0, -1.5, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 1.5, 2.0})
        CHECK(airy_ai(x) == doctest::Approx(maclaurin_ai(x)).epsilon(1e-13));
}

TEST_CASE("Ai leading asymptotic ratio at x = 10") {
    const double x = 10.0;
    const double ratio = airy_ai(x) * 2.0 * std::sqrt(M_PI) * std::pow(x, 0.25) *
                         std::exp((2.0 / 3.0) * std::pow(x, 1.5));
    CHECK(std::abs(ratio - 1.0) <= 1e-2);
    const double ratio_p = airy_ai_prime(x) * 2.0 * std::sqrt(M_PI) *
                           std::pow(x, -0.25) * std::exp((2.0 / 3.0) * std::pow(x, 1.5));
    CHECK(std::abs(ratio_p + 1.0) <= 1e-2);
}

TEST_CASE("Airy ODE residual via differenced values stays below 1e-8") {
    for (double x : {-10.0, -5.0, 0.0, 2.0, 5.0}) {
        const double lhs = second_diff_r([](double t) { return airy_ai(t); }, x, 1e-3);
        CHECK(std::abs(lhs - x * airy_ai(x)) <= 1e-8);
    }
}

TEST_CASE("branches agree on overlap windows") {
    // positive switch at x = 9
    for (double x = 8.6; x <= 9.4; x += 0.1) {
        const double a = detail::airy_ai_recentered_series(x);
        const double b = detail::airy_ai_asymptotic(x);
        CHECK(std::abs(a - b) <= 1e-9);
        CHECK(std::abs(a / b - 1.0) <= 1e-9);
    }
    // negative switch at x = -16 (diagnostic accuracy target 1e-8)
    for (double x = -16.1; x <= -15.5; x += 0.1) {
        const double a = detail::airy_ai_recentered_series(x);
        const double b = detail::airy_ai_asymptotic_neg(x);
        CHECK(std::abs(a - b) <= 1e-9);
    }
}

TEST_CASE("Ai underflows to zero for very large x") {
    CHECK(airy_ai(400.0) == 0.0);
    CHECK(airy_ai(1e8) == 0.0);
}

TEST_CASE("heteroclinic profile") {
    CHECK(heteroclinic(0.0) == 0.0);
    CHECK(heteroclinic(40.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(heteroclinic(-40.0) == doctest::Approx(-1.0).epsilon(1e-15));
    const double x_half = std::sqrt(2.0) * std::atanh(0.5);
    CHECK(heteroclinic(x_half) == doctest::Approx(0.5).epsilon(1e-15));

    // eta'' = eta^3 - eta, differenced like the Airy check
    for (double x : {-10.0, -5.0, -1.0, 0.0, 0.5, 1.0, 2.0, 5.0}) {
        const double lhs = second_diff_r([](double t) { return heteroclinic(t); }, x, 1e-3);
        const double e = heteroclinic(x);
        CHECK(std::abs(lhs - (e * e * e - e)) <= 1e-8);
    }
}

TEST_CASE("GLParams derived constants") {
    CHECK_THROWS_AS(GLParams::make(0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GLParams::make(0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GLParams::make(-0.1, 0.5), std::invalid_argument);

    const GLParams p = GLParams::make(0.1, 0.5);
    CHECK(p.rho == doctest::Approx(std::sqrt(std::log(2.0))).epsilon(1e-15));
    CHECK(p.mu1 == doctest::Approx(-2.0 * p.rho * 0.5).epsilon(1e-15));
    CHECK(p.mu1 < 0.0);

    // mu vanishes on the circle |x| = rho, equals 1 - chi at the origin
    CHECK(mu(p, p.rho, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(mu(p, 0.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mu_rad(p, p.rho) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(mu_rad_prime(p, p.rho) == doctest::Approx(p.mu1).epsilon(1e-14));
}

TEST_CASE("mu is radial: invariant under random rotations") {
    const GLParams p = GLParams::make(0.05, 0.3);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> radius(0.0, 3.0);
    for (int t = 0; t < 200; ++t) {
        const double r = radius(rng), a0 = angle(rng), a1 = angle(rng);
        const double m0 = mu(p, r * std::cos(a0), r * std::sin(a0));
        const double m1 = mu(p, r * std::cos(a1), r * std::sin(a1));
        CHECK(m0 == doctest::Approx(m1).epsilon(1e-13));
    }
}

TEST_CASE("mu_rad is even and strictly decreasing on (0, inf)") {
    const GLParams p = GLParams::make(0.1, 0.7);
    for (double r = 0.05; r < 4.0; r += 0.05) {
        CHECK(mu_rad(p, r) == mu_rad(p, -r));
        CHECK(mu_rad_prime(p, r) < 0.0);
        CHECK(mu_rad(p, r + 0.05) < mu_rad(p, r));
    }
}
