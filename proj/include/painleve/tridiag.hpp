// tridiag.hpp -- Thomas algorithm for tridiagonal systems.
#pragma once

#include <stdexcept>
#include <vector>

namespace painleve {

// Solves the tridiagonal system with subdiagonal `lo` (lo[0] unused), main
// diagonal `di`, superdiagonal `up` (up[n-1] unused) in place; `rhs` becomes
// the solution. O(n), no pivoting: the Newton systems assembled here are
// strictly diagonally dominant.
inline void thomas_solve(const std::vector<double>& lo, std::vector<double> di,
                         const std::vector<double>& up, std::vector<double>& rhs) {
    const std::size_t n = di.size();
    if (lo.size() != n || up.size() != n || rhs.size() != n)
        throw std::invalid_argument("thomas_solve: size mismatch");
    for (std::size_t i = 1; i < n; ++i) {
        const double w = lo[i] / di[i - 1];
        di[i] -= w * up[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    rhs[n - 1] /= di[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        rhs[i] = (rhs[i] - up[i] * rhs[i + 1]) / di[i];
}

}  // namespace painleve
