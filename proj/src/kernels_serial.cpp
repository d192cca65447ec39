// Reference sweeps: plain loops in index order, no threading. Kept for tests
// and the benchmark; the library itself calls kernels::par.
#include "kernels_node.hpp"

namespace vvlab::kernels {

Ctx make_ctx(const Grid& g, double t, const ExactBoundary* bc) {
    if (g.boundary() == Boundary::Exact && (bc == nullptr || !bc->value))
        throw ConfigError("exact boundary mode requires an ExactBoundary callable");
    Ctx c;
    c.dim = g.dim();
    c.n = g.points();
    c.h = g.spacing();
    c.mode = g.boundary();
    c.t = t;
    c.bc = bc;
    return c;
}

namespace serial {

using namespace detail;

void gradient(const Ctx& c, const double* u, double* gx, double* gy) {
    const int n = c.n;
    if (c.dim == 1) {
        for (int i = 0; i < n; ++i) gx[i] = node_derivs_1d(c, u, i).ux;
        return;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Node2 d = node_derivs_2d(c, u, i, j);
            const std::size_t idx = static_cast<std::size_t>(i) * n + j;
            gx[idx] = d.ux;
            gy[idx] = d.uy;
        }
}

void laplacian(const Ctx& c, const double* u, double* out) {
    const int n = c.n;
    if (c.dim == 1) {
        for (int i = 0; i < n; ++i) out[i] = node_derivs_1d(c, u, i).uxx;
        return;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Node2 d = node_derivs_2d(c, u, i, j);
            out[static_cast<std::size_t>(i) * n + j] = d.uxx + d.uyy;
        }
}

void hessian_frobenius_sq(const Ctx& c, const double* u, double* out) {
    const int n = c.n;
    if (c.dim == 1) {
        for (int i = 0; i < n; ++i) {
            const double uxx = node_derivs_1d(c, u, i).uxx;
            out[i] = uxx * uxx;
        }
        return;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Node2 d = node_derivs_2d(c, u, i, j);
            out[static_cast<std::size_t>(i) * n + j] =
                d.uxx * d.uxx + d.uyy * d.uyy + 2.0 * d.uxy * d.uxy;
        }
}

double quadrature(const Ctx& c, const double* u) {
    const int n = c.n;
    double sum = 0.0;
    if (c.dim == 1) {
        for (int i = 0; i < n; ++i) sum += qweight(c, i) * u[i];
        return sum * c.h;
    }
    for (int i = 0; i < n; ++i) {
        const double wi = qweight(c, i);
        for (int j = 0; j < n; ++j)
            sum += wi * qweight(c, j) * u[static_cast<std::size_t>(i) * n + j];
    }
    return sum * (c.h * c.h);
}

StepStats euler_step(const Ctx& c, const double* u, double* out, double dt,
                     double eps, double gamma, const PreparedForcing& f) {
    const int n = c.n;
    StepStats s;
    if (c.dim == 1) {
        for (int i = 0; i < n; ++i) {
            double gsq;
            const double v = node_step_1d(c, u, i, dt, eps, gamma, f, gsq);
            out[i] = v;
            if (v < s.min_u) s.min_u = v;
            if (v > s.max_u) s.max_u = v;
            if (gsq > s.max_grad_sq) s.max_grad_sq = gsq;
            if (!std::isfinite(v)) s.nonfinite = true;
        }
        return s;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double gsq;
            const double v = node_step_2d(c, u, i, j, dt, eps, gamma, f, gsq);
            out[static_cast<std::size_t>(i) * n + j] = v;
            if (v < s.min_u) s.min_u = v;
            if (v > s.max_u) s.max_u = v;
            if (gsq > s.max_grad_sq) s.max_grad_sq = gsq;
            if (!std::isfinite(v)) s.nonfinite = true;
        }
    return s;
}

} // namespace serial
} // namespace vvlab::kernels
