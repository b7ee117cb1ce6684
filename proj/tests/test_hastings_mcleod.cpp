#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "painleve/hastings_mcleod.hpp"
#include "painleve/operators.hpp"
#include "painleve/special.hpp"

using namespace painleve;

namespace {

HMProblem problem_with_n(int n) {
    SolverConfig cfg;
    cfg.abs_tol = 1e-6;
    cfg.max_newton_iters = 60;
    cfg.clamp_bound = std::sqrt(6.0) + 1.0;
    return HMProblem::make(Grid1D(-12.0, 8.0, n), cfg);
}

}  // namespace

TEST_CASE("residual of the zero field with zero boundary data vanishes") {
    HMProblem prob;  // built by hand: the zero-solution case has bc = 0
    prob.grid = Grid1D(-4.0, 4.0, 33);
    prob.left_bc = 0.0;
    prob.right_bc = 0.0;
    Field1D zero(prob.grid);
    Field1D r = residual_hm(zero, prob);
    for (double v : r.values) CHECK(v == 0.0);
}

TEST_CASE("residual grid mismatch is rejected") {
    HMProblem prob = problem_with_n(101);
    Field1D wrong(Grid1D(-12.0, 8.0, 51));
    CHECK_THROWS_AS(residual_hm(wrong, prob), std::invalid_argument);
}

TEST_CASE("on the minima branch the residual is the branch curvature") {
    // y = sqrt(-x/2) kills -x y - 2y^3 exactly, so the interior residual is
    // y'' = -(1/(4 sqrt(2))) (-x)^{-3/2} up to the O(h^2) stencil error.
    Grid1D g(-12.0, -2.0, 501);
    HMProblem prob;
    prob.grid = g;
    prob.left_bc = std::sqrt(6.0);
    prob.right_bc = 1.0;
    Field1D y(g);
    for (int i = 0; i < g.n; ++i) y.values[i] = std::sqrt(-g.x(i) / 2.0);
    Field1D r = residual_hm(y, prob);
    for (int i = 1; i < g.n - 1; ++i) {
        const double x = g.x(i);
        const double curvature = -1.0 / (4.0 * std::sqrt(2.0)) * std::pow(-x, -1.5);
        CHECK(r.values[i] == doctest::Approx(curvature).epsilon(1e-4));
    }
}

TEST_CASE("converged solution tracks both asymptotic branches") {
    HMProblem prob = problem_with_n(2001);
    HMSolveStats stats;
    Field1D h = solve_hastings_mcleod(prob, nullptr, &stats);
    CHECK(stats.final_residual <= prob.config.abs_tol);

    CHECK(h.values.back() / airy_ai(prob.grid.b) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(h.values.front() / std::sqrt(6.0) == doctest::Approx(1.0).epsilon(0.01));
    for (int i = 0; i < prob.grid.n; ++i) {
        const double x = prob.grid.x(i);
        if (x >= 4.0 && x <= 5.5)
            CHECK(h.values[i] / airy_ai(x) == doctest::Approx(1.0).epsilon(0.01));
        if (x >= -10.0 && x <= -8.0)
            CHECK(h.values[i] / std::sqrt(-x / 2.0) == doctest::Approx(1.0).epsilon(0.01));
    }

    // 0 < h < sqrt((-x)^+/2) + 1 and h' < 0 at every node
    for (int i = 0; i < prob.grid.n; ++i) {
        const double x = prob.grid.x(i);
        const double cap = (x < 0.0 ? std::sqrt(-x / 2.0) : 0.0) + 1.0;
        CHECK(h.values[i] > 0.0);
        CHECK(h.values[i] < cap);
        if (i + 1 < prob.grid.n) CHECK(h.values[i + 1] < h.values[i]);
    }

    // -x h - 2h^3 changes sign exactly once on [a, 0): h crosses the branch once
    int sign_changes = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 0; i < prob.grid.n && prob.grid.x(i) < 0.0; ++i) {
        const double s = -prob.grid.x(i) * h.values[i] - 2.0 * std::pow(h.values[i], 3);
        if (have_prev && s * prev < 0.0) ++sign_changes;
        prev = s;
        have_prev = true;
    }
    CHECK(sign_changes == 1);
}

TEST_CASE("self-convergence under grid doubling") {
    Field1D y1 = solve_hastings_mcleod(problem_with_n(501));
    Field1D y2 = solve_hastings_mcleod(problem_with_n(1001));
    Field1D y3 = solve_hastings_mcleod(problem_with_n(2001));
    double d1 = 0.0, d2 = 0.0;
    for (int i = 0; i < 501; ++i)
        d1 = std::max(d1, std::abs(y1.values[i] - y2.values[2 * i]));
    for (int i = 0; i < 1001; ++i)
        d2 = std::max(d2, std::abs(y2.values[i] - y3.values[2 * i]));
    CHECK(d1 / d2 >= 3.5);
}

TEST_CASE("residual re-evaluated on the doubled grid stays small") {
    HMProblem prob = problem_with_n(2001);
    Field1D h = solve_hastings_mcleod(prob);
    HMProblem fine = problem_with_n(4001);
    Field1D hf(fine.grid);
    for (int i = 0; i < fine.grid.n; ++i)
        hf.values[i] = lagrange_interp_1d(h, fine.grid.x(i), 6);
    const double r = sup_norm(residual_hm(hf, fine));
    CHECK(r <= 10.0 * prob.config.abs_tol);
}

TEST_CASE("BVP and shooting oracle agree") {
    // n = 4001 keeps the BVP discretization error below the 1e-6 bar at x = 0
    Field1D h = solve_hastings_mcleod(problem_with_n(4001));
    ShootResult shot = shoot_hm_oracle(1.0, 8.0, -6.0);
    REQUIRE(!shot.blew_up);

    const double h0 = lagrange_interp_1d(h, 0.0, 6);
    const double s0 = lagrange_interp_1d(shot.field, 0.0, 4);
    CHECK(std::abs(h0 - s0) <= 1e-6);

    double sup_diff = 0.0;
    for (int i = 0; i < h.grid.n; ++i) {
        const double x = h.grid.x(i);
        if (x < -6.0 || x > 0.0) continue;
        sup_diff = std::max(sup_diff,
                            std::abs(h.values[i] - lagrange_interp_1d(shot.field, x, 4)));
    }
    CHECK(sup_diff <= 1e-4);
}

TEST_CASE("shooting brackets the connecting solution") {
    // k above 1: blow-up to +inf before reaching -6
    ShootResult high = shoot_hm_oracle(1.1, 8.0, -6.0);
    CHECK(high.blew_up);
    CHECK(high.blowup_x > -6.0);

    // k below 1: departs into the oscillatory family (goes negative)
    ShootResult low = shoot_hm_oracle(0.9, 8.0, -6.0);
    REQUIRE(!low.blew_up);
    double min_v = 1e300;
    for (double v : low.field.values) min_v = std::min(min_v, v);
    CHECK(min_v < 0.0);

    // k = 0: zero initial data, zero solution
    ShootResult zero = shoot_hm_oracle(0.0, 8.0, -6.0);
    REQUIRE(!zero.blew_up);
    for (double v : zero.field.values) CHECK(v == 0.0);

    CHECK_THROWS_AS(shoot_hm_oracle(1.0, 4.0, -6.0), std::invalid_argument);
}

TEST_CASE("iteration cap raises NewtonDiverged") {
    SolverConfig cfg;
    cfg.abs_tol = 1e-10;
    cfg.max_newton_iters = 1;
    cfg.clamp_bound = std::sqrt(6.0) + 1.0;
    HMProblem prob = HMProblem::make(Grid1D(-12.0, 8.0, 2001), cfg);
    CHECK_THROWS_AS(solve_hastings_mcleod(prob), NewtonDiverged);
}

TEST_CASE("a boundary condition off the connecting branch is caught") {
    // Pinning the left value far below sqrt(|a|/2) forces a solution in the
    // oscillatory family: whatever the iteration returns cannot be the
    // positive decreasing connecting solution.
    HMProblem prob = problem_with_n(2001);
    prob.left_bc = 0.5;
    bool threw = false;
    try {
        solve_hastings_mcleod(prob);
    } catch (const NonPhysical&) {
        threw = true;
    } catch (const NewtonDiverged&) {
        threw = true;
    }
    CHECK(threw);
}
