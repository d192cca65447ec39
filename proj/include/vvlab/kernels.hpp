// Stencil sweep kernels. Two implementations share the per-node arithmetic
// below: kernels::serial is the reference, kernels::par is the OpenMP version
// the library dispatches to. Pointwise sweeps are bitwise identical between
// the two; reductions use a fixed block decomposition so that results do not
// depend on the number of threads.
#pragma once

#include <cmath>
#include <limits>

#include "vvlab/forcing.hpp"
#include "vvlab/grid.hpp"

namespace vvlab::kernels {

struct Ctx {
    int dim = 1;
    int n = 0;        // points per axis
    double h = 0.0;
    Boundary mode = Boundary::Periodic;
    double t = 0.0;                    // time ghost values are evaluated at
    const ExactBoundary* bc = nullptr; // required iff mode == Exact
};

Ctx make_ctx(const Grid& g, double t, const ExactBoundary* bc);

struct StepStats {
    double min_u = std::numeric_limits<double>::infinity();  // of updated field
    double max_u = -std::numeric_limits<double>::infinity(); // of updated field
    double max_grad_sq = 0.0;                                // of input field
    bool nonfinite = false;
};

namespace detail {

inline double at1(const Ctx& c, const double* u, int i) {
    if (i >= 0 && i < c.n) return u[i];
    switch (c.mode) {
        case Boundary::Periodic: return u[(i % c.n + c.n) % c.n];
        case Boundary::Neumann: return u[i < 0 ? -i : 2 * (c.n - 1) - i];
        case Boundary::Exact: return c.bc->value(i * c.h, 0.0, c.t);
    }
    return 0.0;
}

inline double at2(const Ctx& c, const double* u, int i, int j) {
    const int n = c.n;
    if (i >= 0 && i < n && j >= 0 && j < n)
        return u[static_cast<std::size_t>(i) * n + j];
    switch (c.mode) {
        case Boundary::Periodic: {
            const int ii = (i % n + n) % n, jj = (j % n + n) % n;
            return u[static_cast<std::size_t>(ii) * n + jj];
        }
        case Boundary::Neumann: {
            const int ii = i < 0 ? -i : (i >= n ? 2 * (n - 1) - i : i);
            const int jj = j < 0 ? -j : (j >= n ? 2 * (n - 1) - j : j);
            return u[static_cast<std::size_t>(ii) * n + jj];
        }
        case Boundary::Exact: return c.bc->value(i * c.h, j * c.h, c.t);
    }
    return 0.0;
}

// Trapezoid weight, without the h^dim factor.
inline double qweight(const Ctx& c, int i) {
    if (c.mode == Boundary::Periodic) return 1.0;
    return (i == 0 || i == c.n - 1) ? 0.5 : 1.0;
}

} // namespace detail

namespace serial {

void gradient(const Ctx& c, const double* u, double* gx, double* gy);
void laplacian(const Ctx& c, const double* u, double* out);
void hessian_frobenius_sq(const Ctx& c, const double* u, double* out);
double quadrature(const Ctx& c, const double* u);

// Fused forward-Euler update:
//   out_i = u_i + dt * ((u_i + eps) * lap_i - gamma * |grad_i|^2 + f(u_i))
// identical arithmetic to composing the operators above.
StepStats euler_step(const Ctx& c, const double* u, double* out, double dt,
                     double eps, double gamma, const PreparedForcing& f);

} // namespace serial

namespace par {

void gradient(const Ctx& c, const double* u, double* gx, double* gy);
void laplacian(const Ctx& c, const double* u, double* out);
void hessian_frobenius_sq(const Ctx& c, const double* u, double* out);
double quadrature(const Ctx& c, const double* u);
StepStats euler_step(const Ctx& c, const double* u, double* out, double dt,
                     double eps, double gamma, const PreparedForcing& f);

} // namespace par

} // namespace vvlab::kernels
