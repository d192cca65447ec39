// Initial-data catalog, its validation, and the hypothesis constant
// M = max |grad(u0^(1+alpha/2))| computed with the grid stencils.
#pragma once

#include <array>
#include <string>

#include "vvlab/forcing.hpp"
#include "vvlab/grid.hpp"

namespace vvlab {

enum class InitialKind { Uniform, Cosine, Gaussian, Linear, Quadratic };

std::string to_string(InitialKind k);
InitialKind initial_kind_from_string(const std::string& s);

struct InitialData {
    InitialKind kind = InitialKind::Uniform;
    // uniform(c); cosine(c, a) = c + a * prod_axes cos(2 pi x_a / L)
    double c = 1.0;
    double a = 0.5;
    // gaussian(c, A, sigma, x0) = c + A * exp(-|x - x0|^2 / (2 sigma^2))
    double A = 1.0;
    double sigma = 0.1;
    std::array<double, 2> x0 = {0.5, 0.5};
    // linear(a0, b) = a0 + b * x   (exact-boundary grids only)
    double a0 = 1.0;
    double b = 1.0;
    // quadratic(A0, B0) = A0 + B0 * |x|^2   (exact-boundary grids only)
    double A0 = 1.0;
    double B0 = 0.1;
};

// Closed-form value at arbitrary coordinates (also ghost locations).
double initial_value(const InitialData& d, int dim, double L, double x, double y);

ScalarField sample_initial(const InitialData& d, const GridPtr& g);

struct InitialBuild {
    ScalarField u0;
    double M = 0.0; // max over nodes of |grad(u0^(1+alpha/2))|
};

// Samples u0, validates nonnegativity (strict positivity when the power
// exponent 1+alpha/2 <= 0), and computes M with the same discrete gradient
// later used for certification.
InitialBuild build_initial_data(const InitialData& d, const GridPtr& g, double alpha);

// Closed-form solution of the evolution problem for the manufactured cases:
//   linear    u = a0 + b x - gamma b^2 t            (f must be zero)
//   quadratic u = A(t) + B(t) |x|^2, B' = (2N-4g)B^2, A' = 2N A B  (f zero)
//   uniform   u = c + integral of f(s, .) ds        (f independent of u)
// Throws ConfigError for combinations without a closed form; horizon is used
// to reject quadratic blow-up inside the run.
ExactBoundary manufactured_solution(const InitialData& d, int dim, double gamma,
                                    const Forcing& f, double horizon);

} // namespace vvlab
