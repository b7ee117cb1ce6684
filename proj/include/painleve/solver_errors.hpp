// solver_errors.hpp -- failure modes shared by the nonlinear solvers.
#pragma once

#include <stdexcept>
#include <string>

namespace painleve {

// Damped Newton could not reduce the residual (or hit the iteration cap).
struct NewtonDiverged : std::runtime_error {
    explicit NewtonDiverged(const std::string& msg) : std::runtime_error(msg) {}
};

// The iteration converged, but the result violates a qualitative property
// (sign, monotonicity, symmetry): it found a different critical point.
struct NonPhysical : std::runtime_error {
    explicit NonPhysical(const std::string& msg) : std::runtime_error(msg) {}
};

// One Newton step as recorded in the convergence log.
struct NewtonStep {
    int iter = 0;
    double residual_sup = 0.0;
    double damping = 1.0;
};

}  // namespace painleve
