// Benchmark comparing the serial reference kernels against the OpenMP sweeps.
// Prints one row per kernel with timings, speedup, and the max deviation
// between backends (0 for the pointwise sweeps).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vvlab/kernels.hpp"

using namespace vvlab;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <class Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        fn();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

double max_dev(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

void row(const char* name, double serial_ms, double par_ms, double dev) {
    std::printf("%-22s %10.3f %10.3f %8.2fx %12.3e\n", name, serial_ms, par_ms,
                serial_ms / par_ms, dev);
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 1024; // 2D grid, n^2 nodes
    const int reps = argc > 2 ? std::atoi(argv[2]) : 5;

    GridSpec spec{2, 1.0, n, Boundary::Periodic};
    const GridPtr grid = build_grid(spec);
    const ScalarField u = ScalarField::sample(grid, [](double x, double y) {
        return 2.0 + std::sin(6.28318530717958648 * x) * std::cos(6.28318530717958648 * y);
    });

    const auto ctx = kernels::make_ctx(*grid, 0.0, nullptr);
    const std::size_t size = grid->size();
    std::vector<double> a(size), b(size), a2(size), b2(size);

#ifdef _OPENMP
    std::printf("grid %dx%d (%zu nodes), %d reps, %d OpenMP threads\n", n, n, size,
                reps, omp_get_max_threads());
#else
    std::printf("grid %dx%d (%zu nodes), %d reps, OpenMP unavailable\n", n, n, size, reps);
#endif
    std::printf("%-22s %10s %10s %9s %12s\n", "kernel", "serial ms", "openmp ms",
                "speedup", "max |diff|");

    {
        const double ts = time_best_of(
            reps, [&] { kernels::serial::gradient(ctx, u.v.data(), a.data(), b.data()); });
        const double tp = time_best_of(
            reps, [&] { kernels::par::gradient(ctx, u.v.data(), a2.data(), b2.data()); });
        row("gradient", ts, tp, std::max(max_dev(a, a2), max_dev(b, b2)));
    }
    {
        const double ts =
            time_best_of(reps, [&] { kernels::serial::laplacian(ctx, u.v.data(), a.data()); });
        const double tp =
            time_best_of(reps, [&] { kernels::par::laplacian(ctx, u.v.data(), a2.data()); });
        row("laplacian", ts, tp, max_dev(a, a2));
    }
    {
        const double ts = time_best_of(
            reps, [&] { kernels::serial::hessian_frobenius_sq(ctx, u.v.data(), a.data()); });
        const double tp = time_best_of(
            reps, [&] { kernels::par::hessian_frobenius_sq(ctx, u.v.data(), a2.data()); });
        row("hessian_frobenius_sq", ts, tp, max_dev(a, a2));
    }
    {
        PreparedForcing f;
        f.kind = ForcingKind::Rational;
        f.k = 0.5;
        const double dt = 1e-7;
        const double ts = time_best_of(reps, [&] {
            kernels::serial::euler_step(ctx, u.v.data(), a.data(), dt, 1e-3, 1.0, f);
        });
        const double tp = time_best_of(reps, [&] {
            kernels::par::euler_step(ctx, u.v.data(), a2.data(), dt, 1e-3, 1.0, f);
        });
        row("euler_step", ts, tp, max_dev(a, a2));
    }
    {
        double qs = 0.0, qp = 0.0;
        const double ts =
            time_best_of(reps, [&] { qs = kernels::serial::quadrature(ctx, u.v.data()); });
        const double tp =
            time_best_of(reps, [&] { qp = kernels::par::quadrature(ctx, u.v.data()); });
        row("quadrature", ts, tp, std::fabs(qs - qp));
    }
    return 0;
}
