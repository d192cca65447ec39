// Per-node stencil arithmetic shared by the serial and OpenMP sweeps.
// Keeping one definition here is what makes the two backends bitwise equal.
#pragma once

#include "vvlab/kernels.hpp"

namespace vvlab::kernels::detail {

struct Node1 {
    double ux, uxx;
};

inline Node1 node_derivs_1d(const Ctx& c, const double* u, int i) {
    const double e = at1(c, u, i + 1);
    const double w = at1(c, u, i - 1);
    const double ui = u[i];
    Node1 r;
    r.ux = (e - w) / (2.0 * c.h);
    r.uxx = (e - 2.0 * ui + w) / (c.h * c.h);
    return r;
}

struct Node2 {
    double ux, uy, uxx, uyy, uxy;
};

inline Node2 node_derivs_2d(const Ctx& c, const double* u, int i, int j) {
    const int n = c.n;
    const double ui = u[static_cast<std::size_t>(i) * n + j];
    const double e = at2(c, u, i + 1, j);
    const double w = at2(c, u, i - 1, j);
    const double nn = at2(c, u, i, j + 1);
    const double ss = at2(c, u, i, j - 1);
    Node2 r;
    r.ux = (e - w) / (2.0 * c.h);
    r.uy = (nn - ss) / (2.0 * c.h);
    r.uxx = (e - 2.0 * ui + w) / (c.h * c.h);
    r.uyy = (nn - 2.0 * ui + ss) / (c.h * c.h);
    r.uxy = (at2(c, u, i + 1, j + 1) - at2(c, u, i + 1, j - 1) -
             at2(c, u, i - 1, j + 1) + at2(c, u, i - 1, j - 1)) /
            (4.0 * c.h * c.h);
    return r;
}

inline double node_step_1d(const Ctx& c, const double* u, int i, double dt,
                           double eps, double gamma, const PreparedForcing& f,
                           double& grad_sq) {
    const Node1 d = node_derivs_1d(c, u, i);
    grad_sq = d.ux * d.ux;
    return u[i] + dt * ((u[i] + eps) * d.uxx - gamma * grad_sq + f(u[i]));
}

inline double node_step_2d(const Ctx& c, const double* u, int i, int j, double dt,
                           double eps, double gamma, const PreparedForcing& f,
                           double& grad_sq) {
    const Node2 d = node_derivs_2d(c, u, i, j);
    const double ui = u[static_cast<std::size_t>(i) * c.n + j];
    grad_sq = d.ux * d.ux + d.uy * d.uy;
    const double lap = d.uxx + d.uyy;
    return ui + dt * ((ui + eps) * lap - gamma * grad_sq + f(ui));
}

// Fixed block size for deterministic reductions; results are independent of
// the number of threads because blocks are combined in index order.
inline constexpr std::size_t kReduceBlock = 4096;

} // namespace vvlab::kernels::detail
