#include "vvlab/initial_data.hpp"

#include <cmath>

namespace vvlab {

std::string to_string(InitialKind k) {
    switch (k) {
        case InitialKind::Uniform: return "uniform";
        case InitialKind::Cosine: return "cosine";
        case InitialKind::Gaussian: return "gaussian";
        case InitialKind::Linear: return "linear";
        case InitialKind::Quadratic: return "quadratic";
    }
    return "?";
}

InitialKind initial_kind_from_string(const std::string& s) {
    if (s == "uniform") return InitialKind::Uniform;
    if (s == "cosine") return InitialKind::Cosine;
    if (s == "gaussian") return InitialKind::Gaussian;
    if (s == "linear") return InitialKind::Linear;
    if (s == "quadratic") return InitialKind::Quadratic;
    throw ConfigError("unknown initial.kind '" + s +
                      "' (uniform|cosine|gaussian|linear|quadratic)");
}

double initial_value(const InitialData& d, int dim, double L, double x, double y) {
    const double two_pi = 2.0 * M_PI;
    switch (d.kind) {
        case InitialKind::Uniform: return d.c;
        case InitialKind::Cosine: {
            double m = std::cos(two_pi * x / L);
            if (dim == 2) m *= std::cos(two_pi * y / L);
            return d.c + d.a * m;
        }
        case InitialKind::Gaussian: {
            double r2 = (x - d.x0[0]) * (x - d.x0[0]);
            if (dim == 2) r2 += (y - d.x0[1]) * (y - d.x0[1]);
            return d.c + d.A * std::exp(-r2 / (2.0 * d.sigma * d.sigma));
        }
        case InitialKind::Linear: return d.a0 + d.b * x;
        case InitialKind::Quadratic: {
            double r2 = x * x;
            if (dim == 2) r2 += y * y;
            return d.A0 + d.B0 * r2;
        }
    }
    return 0.0;
}

ScalarField sample_initial(const InitialData& d, const GridPtr& g) {
    const int dim = g->dim();
    const double L = g->extent();
    if ((d.kind == InitialKind::Linear || d.kind == InitialKind::Quadratic) &&
        g->boundary() != Boundary::Exact)
        throw ConfigError("initial.kind " + to_string(d.kind) +
                          " requires boundary = exact");
    if (d.kind == InitialKind::Gaussian && !(d.sigma > 0.0))
        throw ConfigError("initial.sigma must be positive");
    return ScalarField::sample(
        g, [&](double x, double y) { return initial_value(d, dim, L, x, y); });
}

InitialBuild build_initial_data(const InitialData& d, const GridPtr& g, double alpha) {
    InitialBuild out;
    out.u0 = sample_initial(d, g);
    if (!out.u0.all_finite()) throw ConfigError("initial data contains non-finite samples");

    const double p = 1.0 + 0.5 * alpha;
    const double mn = out.u0.min_value();
    if (mn < 0.0) throw ConfigError("initial data is negative somewhere (min u0 = " +
                                    std::to_string(mn) + "); u0 >= 0 is required");
    if (p <= 0.0 && mn <= 0.0)
        throw ConfigError("min u0 = 0 but the power exponent 1+alpha/2 = " +
                          std::to_string(p) + " <= 0 requires strictly positive u0");

    const ScalarField phi = power_field(out.u0, p);

    if (g->boundary() == Boundary::Exact) {
        // Ghost values of u0^p from the closed-form initial data at t = 0.
        const InitialData data = d;
        const int dim = g->dim();
        const double L = g->extent();
        ExactBoundary phi_bc{[data, dim, L, p](double x, double y, double) {
            const double v = initial_value(data, dim, L, x, y);
            if (v < 0.0 || (v == 0.0 && p <= 0.0))
                throw NumericError("initial data power undefined at ghost point");
            return v == 0.0 ? 0.0 : std::pow(v, p);
        }};
        out.M = gradient(phi, 0.0, &phi_bc).max_magnitude();
    } else {
        out.M = gradient(phi).max_magnitude();
    }
    return out;
}

ExactBoundary manufactured_solution(const InitialData& d, int dim, double gamma,
                                    const Forcing& f, double horizon) {
    switch (d.kind) {
        case InitialKind::Linear: {
            if (!f.is_zero())
                throw ConfigError("manufactured linear solution requires forcing.kind = zero");
            const double a0 = d.a0, b = d.b, g = gamma;
            return ExactBoundary{[a0, b, g](double x, double, double t) {
                return a0 + b * x - g * b * b * t;
            }};
        }
        case InitialKind::Quadratic: {
            if (!f.is_zero())
                throw ConfigError("manufactured quadratic solution requires forcing.kind = zero");
            const double cc = 2.0 * dim - 4.0 * gamma;
            const double A0 = d.A0, B0 = d.B0;
            if (cc * B0 * horizon >= 1.0)
                throw ConfigError("quadratic manufactured solution blows up before T");
            const double N = dim;
            return ExactBoundary{[A0, B0, cc, N](double x, double y, double t) {
                double r2 = x * x;
                if (N == 2.0) r2 += y * y;
                if (cc == 0.0) return A0 * std::exp(2.0 * N * B0 * t) + B0 * r2;
                const double s = 1.0 - cc * B0 * t;
                const double B = B0 / s;
                const double A = A0 * std::pow(s, -2.0 * N / cc);
                return A + B * r2;
            }};
        }
        case InitialKind::Uniform: {
            const double c0 = d.c;
            if (f.is_zero())
                return ExactBoundary{[c0](double, double, double) { return c0; }};
            if (f.kind == ForcingKind::Constant) {
                const double k = f.k;
                return ExactBoundary{[c0, k](double, double, double t) { return c0 + k * t; }};
            }
            if (f.kind == ForcingKind::TimeProfile) {
                const Forcing ff = f;
                return ExactBoundary{[c0, ff](double, double, double t) {
                    // integral of the polynomial c(s) over [0,t]
                    double acc = 0.0;
                    for (std::size_t j = 0; j < ff.profile.size(); ++j)
                        acc += ff.profile[j] * std::pow(t, double(j) + 1.0) / (double(j) + 1.0);
                    return c0 + acc;
                }};
            }
            throw ConfigError("uniform manufactured solution needs u-independent forcing");
        }
        default:
            throw ConfigError("no manufactured solution for initial.kind " + to_string(d.kind));
    }
}

} // namespace vvlab
