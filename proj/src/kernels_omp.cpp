// OpenMP sweeps. Pointwise kernels parallelize over nodes with the same
// per-node arithmetic as the serial reference, so outputs are bitwise equal.
// Sum reductions go through fixed-size blocks combined in index order; min/max
// reductions are exact under any order.
#include <vector>

#include "kernels_node.hpp"

namespace vvlab::kernels::par {

using namespace detail;

namespace {

// Below this node count the fork/join overhead dominates the sweep; fall back
// to the (bitwise identical) serial loops.
constexpr std::size_t kParMinSize = 8192;

std::size_t ctx_size(const Ctx& c) {
    return c.dim == 1 ? static_cast<std::size_t>(c.n)
                      : static_cast<std::size_t>(c.n) * c.n;
}

} // namespace

void gradient(const Ctx& c, const double* u, double* gx, double* gy) {
    if (ctx_size(c) < kParMinSize) return serial::gradient(c, u, gx, gy);
    const int n = c.n;
    if (c.dim == 1) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) gx[i] = node_derivs_1d(c, u, i).ux;
        return;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Node2 d = node_derivs_2d(c, u, i, j);
            const std::size_t idx = static_cast<std::size_t>(i) * n + j;
            gx[idx] = d.ux;
            gy[idx] = d.uy;
        }
}

void laplacian(const Ctx& c, const double* u, double* out) {
    if (ctx_size(c) < kParMinSize) return serial::laplacian(c, u, out);
    const int n = c.n;
    if (c.dim == 1) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) out[i] = node_derivs_1d(c, u, i).uxx;
        return;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Node2 d = node_derivs_2d(c, u, i, j);
            out[static_cast<std::size_t>(i) * n + j] = d.uxx + d.uyy;
        }
}

void hessian_frobenius_sq(const Ctx& c, const double* u, double* out) {
    if (ctx_size(c) < kParMinSize) return serial::hessian_frobenius_sq(c, u, out);
    const int n = c.n;
    if (c.dim == 1) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            const double uxx = node_derivs_1d(c, u, i).uxx;
            out[i] = uxx * uxx;
        }
        return;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Node2 d = node_derivs_2d(c, u, i, j);
            out[static_cast<std::size_t>(i) * n + j] =
                d.uxx * d.uxx + d.uyy * d.uyy + 2.0 * d.uxy * d.uxy;
        }
}

double quadrature(const Ctx& c, const double* u) {
    const int n = c.n;
    const std::size_t size = ctx_size(c);
    const std::size_t nblocks = (size + kReduceBlock - 1) / kReduceBlock;
    std::vector<double> partial(nblocks, 0.0);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
        const std::size_t hi = std::min(size, lo + kReduceBlock);
        double sum = 0.0;
        if (c.dim == 1) {
            for (std::size_t i = lo; i < hi; ++i)
                sum += qweight(c, static_cast<int>(i)) * u[i];
        } else {
            for (std::size_t idx = lo; idx < hi; ++idx) {
                const int i = static_cast<int>(idx) / n;
                const int j = static_cast<int>(idx) % n;
                sum += qweight(c, i) * qweight(c, j) * u[idx];
            }
        }
        partial[b] = sum;
    }

    double total = 0.0;
    for (std::size_t b = 0; b < nblocks; ++b) total += partial[b];
    return c.dim == 1 ? total * c.h : total * (c.h * c.h);
}

StepStats euler_step(const Ctx& c, const double* u, double* out, double dt,
                     double eps, double gamma, const PreparedForcing& f) {
    if (ctx_size(c) < kParMinSize)
        return serial::euler_step(c, u, out, dt, eps, gamma, f);
    const int n = c.n;
    StepStats s;
    double mn = s.min_u, mx = s.max_u, mg = 0.0;
    int bad = 0;
    if (c.dim == 1) {
#pragma omp parallel for schedule(static) reduction(min : mn) \
    reduction(max : mx, mg) reduction(| : bad)
        for (int i = 0; i < n; ++i) {
            double gsq;
            const double v = node_step_1d(c, u, i, dt, eps, gamma, f, gsq);
            out[i] = v;
            if (v < mn) mn = v;
            if (v > mx) mx = v;
            if (gsq > mg) mg = gsq;
            if (!std::isfinite(v)) bad = 1;
        }
    } else {
#pragma omp parallel for schedule(static) reduction(min : mn) \
    reduction(max : mx, mg) reduction(| : bad)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double gsq;
                const double v = node_step_2d(c, u, i, j, dt, eps, gamma, f, gsq);
                out[static_cast<std::size_t>(i) * n + j] = v;
                if (v < mn) mn = v;
                if (v > mx) mx = v;
                if (gsq > mg) mg = gsq;
                if (!std::isfinite(v)) bad = 1;
            }
    }
    s.min_u = mn;
    s.max_u = mx;
    s.max_grad_sq = mg;
    s.nonfinite = bad != 0;
    return s;
}

} // namespace vvlab::kernels::par
