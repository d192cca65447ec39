#include "vvlab/grid.hpp"

#include <algorithm>
#include <cmath>

#include "vvlab/kernels.hpp"

namespace vvlab {

std::string to_string(Boundary b) {
    switch (b) {
        case Boundary::Periodic: return "periodic";
        case Boundary::Neumann: return "neumann";
        case Boundary::Exact: return "exact";
    }
    return "?";
}

Boundary boundary_from_string(const std::string& s) {
    if (s == "periodic") return Boundary::Periodic;
    if (s == "neumann") return Boundary::Neumann;
    if (s == "exact") return Boundary::Exact;
    throw ConfigError("unknown boundary mode '" + s + "' (periodic|neumann|exact)");
}

Grid::Grid(const GridSpec& spec) : spec_(spec) {
    if (spec.dim != 1 && spec.dim != 2)
        throw ConfigError("dim must be 1 or 2, got " + std::to_string(spec.dim));
    if (!(spec.extent > 0.0) || !std::isfinite(spec.extent))
        throw ConfigError("extent L must be positive and finite");
    if (spec.points < 8)
        throw ConfigError("n too small: " + std::to_string(spec.points) + " (min 8)");
    h_ = spec.boundary == Boundary::Periodic ? spec.extent / spec.points
                                             : spec.extent / (spec.points - 1);
    size_ = static_cast<std::size_t>(spec.points);
    if (spec.dim == 2) size_ *= static_cast<std::size_t>(spec.points);
}

GridPtr build_grid(const GridSpec& spec) { return std::make_shared<Grid>(spec); }

double ScalarField::min_value() const {
    double m = v[0];
    for (double x : v)
        if (x < m) m = x;
    return m;
}

double ScalarField::max_value() const {
    double m = v[0];
    for (double x : v)
        if (x > m) m = x;
    return m;
}

bool ScalarField::all_finite() const {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

ScalarField VectorField::magnitude() const {
    ScalarField out(grid);
    const std::size_t size = grid->size();
    if (grid->dim() == 1) {
        for (std::size_t i = 0; i < size; ++i) out.v[i] = std::fabs(comp[0][i]);
    } else {
        for (std::size_t i = 0; i < size; ++i)
            out.v[i] = std::sqrt(comp[0][i] * comp[0][i] + comp[1][i] * comp[1][i]);
    }
    return out;
}

double VectorField::max_magnitude() const {
    const std::size_t size = grid->size();
    double m = 0.0;
    if (grid->dim() == 1) {
        for (std::size_t i = 0; i < size; ++i) m = std::max(m, std::fabs(comp[0][i]));
        return m;
    }
    double msq = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        const double s = comp[0][i] * comp[0][i] + comp[1][i] * comp[1][i];
        if (s > msq) msq = s;
    }
    return std::sqrt(msq);
}

ScalarField power_field(const ScalarField& u, double p) {
    ScalarField out(u.grid);
    for (std::size_t i = 0; i < u.v.size(); ++i) {
        const double x = u.v[i];
        if (x < 0.0 || (x == 0.0 && p <= 0.0))
            throw NumericError("power_field: u^" + std::to_string(p) +
                               " undefined at node " + std::to_string(i) +
                               " where u = " + std::to_string(x));
        out.v[i] = x == 0.0 ? 0.0 : std::pow(x, p);
    }
    return out;
}

VectorField gradient(const ScalarField& u, double t, const ExactBoundary* bc) {
    VectorField out(u.grid);
    const auto c = kernels::make_ctx(*u.grid, t, bc);
    kernels::par::gradient(c, u.v.data(), out.comp[0].data(),
                           u.grid->dim() == 2 ? out.comp[1].data() : nullptr);
    return out;
}

ScalarField laplacian(const ScalarField& u, double t, const ExactBoundary* bc) {
    ScalarField out(u.grid);
    const auto c = kernels::make_ctx(*u.grid, t, bc);
    kernels::par::laplacian(c, u.v.data(), out.v.data());
    return out;
}

ScalarField hessian_frobenius_sq(const ScalarField& u, double t, const ExactBoundary* bc) {
    ScalarField out(u.grid);
    const auto c = kernels::make_ctx(*u.grid, t, bc);
    kernels::par::hessian_frobenius_sq(c, u.v.data(), out.v.data());
    return out;
}

double quadrature(const ScalarField& u) {
    // No ghost access: build the context directly so exact-mode fields do not
    // need a boundary callable just to be integrated.
    kernels::Ctx c;
    c.dim = u.grid->dim();
    c.n = u.grid->points();
    c.h = u.grid->spacing();
    c.mode = u.grid->boundary();
    return kernels::par::quadrature(c, u.v.data());
}

} // namespace vvlab
