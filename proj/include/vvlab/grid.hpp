// Uniform lattice geometry, scalar/vector fields, discrete differential
// operators with selectable boundary treatment.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "vvlab/errors.hpp"

namespace vvlab {

enum class Boundary { Periodic, Neumann, Exact };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

struct GridSpec {
    int dim = 1;          // N in {1,2}
    double extent = 1.0;  // box side length L per axis
    int points = 8;       // samples per axis, n >= 8
    Boundary boundary = Boundary::Periodic;
};

// True-solution values at arbitrary (possibly ghost) coordinates, used only
// with Boundary::Exact. Must be defined for the one ghost layer the
// second-order stencils request. y is ignored on 1D grids.
struct ExactBoundary {
    std::function<double(double x, double y, double t)> value;
};

class Grid {
public:
    explicit Grid(const GridSpec& spec);

    int dim() const { return spec_.dim; }
    int points() const { return spec_.points; }
    double extent() const { return spec_.extent; }
    Boundary boundary() const { return spec_.boundary; }
    const GridSpec& spec() const { return spec_; }

    // h = L/n (periodic) or L/(n-1) (neumann, exact); node i sits at i*h.
    double spacing() const { return h_; }
    std::size_t size() const { return size_; }

    double coord(int i) const { return i * h_; }

    // Row-major flat index; axis 0 = x (index i), axis 1 = y (index j).
    std::size_t index(int i, int j = 0) const {
        return static_cast<std::size_t>(i) * (spec_.dim == 2 ? spec_.points : 1) + j;
    }
    std::array<int, 2> unindex(std::size_t flat) const {
        if (spec_.dim == 1) return {static_cast<int>(flat), 0};
        int n = spec_.points;
        return {static_cast<int>(flat) / n, static_cast<int>(flat) % n};
    }
    std::array<double, 2> node_coords(std::size_t flat) const {
        auto ij = unindex(flat);
        return {coord(ij[0]), spec_.dim == 2 ? coord(ij[1]) : 0.0};
    }

private:
    GridSpec spec_;
    double h_;
    std::size_t size_;
};

using GridPtr = std::shared_ptr<const Grid>;

// Validates the spec (rejects n < 8, L <= 0, dim not in {1,2}).
GridPtr build_grid(const GridSpec& spec);

struct ScalarField {
    GridPtr grid;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(GridPtr g) : grid(std::move(g)), v(grid->size(), 0.0) {}

    static ScalarField constant(GridPtr g, double c) {
        ScalarField f(std::move(g));
        std::fill(f.v.begin(), f.v.end(), c);
        return f;
    }

    // f(x, y); y = 0 on 1D grids.
    template <class Fn>
    static ScalarField sample(GridPtr g, Fn&& f) {
        ScalarField out(g);
        const int n = g->points();
        if (g->dim() == 1) {
            for (int i = 0; i < n; ++i) out.v[i] = f(g->coord(i), 0.0);
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    out.v[g->index(i, j)] = f(g->coord(i), g->coord(j));
        }
        return out;
    }

    double min_value() const;
    double max_value() const;
    bool all_finite() const;
};

struct VectorField {
    GridPtr grid;
    std::array<std::vector<double>, 2> comp; // comp[axis]; only dim entries used

    VectorField() = default;
    explicit VectorField(GridPtr g) : grid(std::move(g)) {
        for (int a = 0; a < grid->dim(); ++a) comp[a].assign(grid->size(), 0.0);
    }

    // Euclidean norm of the vector at each node.
    ScalarField magnitude() const;
    double max_magnitude() const;
};

// Discrete operators. All are second-order central stencils; boundary
// treatment comes from the field's grid. bc is required iff the grid uses
// Boundary::Exact; t is the time the ghost values are evaluated at.
VectorField gradient(const ScalarField& u, double t = 0.0, const ExactBoundary* bc = nullptr);
ScalarField laplacian(const ScalarField& u, double t = 0.0, const ExactBoundary* bc = nullptr);
ScalarField hessian_frobenius_sq(const ScalarField& u, double t = 0.0,
                                 const ExactBoundary* bc = nullptr);

// h^N * sum (periodic; exact trapezoid on a periodic grid), trapezoid with
// half-weight boundary nodes otherwise. Deterministic fixed-block reduction.
double quadrature(const ScalarField& u);

// u^p nodewise. Requires u >= 0; additionally min u > 0 when p <= 0.
// u = 0 with p in (0,1) maps to 0. Violations throw NumericError naming the
// offending node.
ScalarField power_field(const ScalarField& u, double p);

} // namespace vvlab
