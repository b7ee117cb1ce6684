// bench_kernels.cpp -- timing of the OpenMP kernels against the serial
// reference, plus the fast Dirichlet solve. Usage: bench_kernels [n1 n2 reps].

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "painleve/grid.hpp"
#include "painleve/kernels.hpp"
#include "painleve/poisson_dst.hpp"

using namespace painleve;
using kernels::Exec;

namespace {

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <class F>
double time_loop(int reps, F&& f) {
    f();  // warm up
    const double t0 = now_s();
    for (int r = 0; r < reps; ++r) f();
    return (now_s() - t0) / reps;
}

void report(const char* name, double serial, double omp, std::size_t nodes) {
    std::printf("%-22s %10.3f ms %10.3f ms %8.2fx %8.2f ns/node\n", name,
                serial * 1e3, omp * 1e3, serial / omp, omp * 1e9 / nodes);
}

}  // namespace

int main(int argc, char** argv) {
    const int n1 = argc > 1 ? std::atoi(argv[1]) : 1025;
    const int n2 = argc > 2 ? std::atoi(argv[2]) : 1025;
    const int reps = argc > 3 ? std::atoi(argv[3]) : 20;

    Grid2D g(-12.0, 6.0, 0.0, 16.0, n1, n2);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> y(g.size()), mu(g.size()), out(g.size());
    for (auto& v : y) v = dist(rng);
    for (auto& v : mu) v = dist(rng);

    const int m1 = g.n1 - 2, m2 = g.n2 - 2;
    std::vector<double> q(static_cast<std::size_t>(m1) * m2),
        vin(q.size()), vout(q.size());
    for (auto& v : q) v = std::abs(dist(rng));
    for (auto& v : vin) v = dist(rng);
    const double ih1 = 1.0 / (g.h1() * g.h1()), ih2 = 1.0 / (g.h2() * g.h2());

#ifdef _OPENMP
    std::printf("grid %d x %d, %d reps, %d OpenMP threads\n\n", n1, n2, reps,
                omp_get_max_threads());
#else
    std::printf("grid %d x %d, %d reps, OpenMP disabled\n\n", n1, n2, reps);
#endif
    std::printf("%-22s %13s %13s %9s %13s\n", "kernel", "serial", "omp", "speedup",
                "omp rate");

    report("laplacian",
           time_loop(reps, [&] { kernels::laplacian_interior(g, y.data(), out.data(), Exec::serial); }),
           time_loop(reps, [&] { kernels::laplacian_interior(g, y.data(), out.data(), Exec::omp); }),
           g.size());
    report("pii_residual",
           time_loop(reps, [&] { kernels::pii_residual_interior(g, y.data(), out.data(), Exec::serial); }),
           time_loop(reps, [&] { kernels::pii_residual_interior(g, y.data(), out.data(), Exec::omp); }),
           g.size());
    report("gl_residual",
           time_loop(reps, [&] { kernels::gl_residual_interior(g, 0.01, mu.data(), y.data(), out.data(), Exec::serial); }),
           time_loop(reps, [&] { kernels::gl_residual_interior(g, 0.01, mu.data(), y.data(), out.data(), Exec::omp); }),
           g.size());
    report("helmholtz_apply",
           time_loop(reps, [&] { kernels::helmholtz_apply_interior(m1, m2, ih1, ih2, 1.0, q.data(), vin.data(), vout.data(), Exec::serial); }),
           time_loop(reps, [&] { kernels::helmholtz_apply_interior(m1, m2, ih1, ih2, 1.0, q.data(), vin.data(), vout.data(), Exec::omp); }),
           q.size());

    DirichletPoissonDST fast(m1, m2, g.h1(), g.h2());
    const double t_dst = time_loop(reps, [&] { fast.solve(1.0, 12.0, vin.data(), vout.data()); });
    std::printf("%-22s %10.3f ms %23s %8.2f ns/node\n", "dst_poisson_solve",
                t_dst * 1e3, "", t_dst * 1e9 / q.size());
    return 0;
}
