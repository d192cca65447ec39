// Regularity certification: auxiliary fields w and z, the gradient-power
// bound, Lipschitz/Hoelder moduli, weak-form residuals, and the pointwise
// algebraic inequalities.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vvlab/bump.hpp"
#include "vvlab/config.hpp"
#include "vvlab/grid.hpp"
#include "vvlab/solver.hpp"

namespace vvlab {

// w = 1/2 sum_i (du/dx_i)^2, central differences.
ScalarField w_field(const ScalarField& u, double t = 0.0, const ExactBoundary* bc = nullptr);

// z = u^alpha * w. Nonpositive u with alpha < 0 is an error naming the node.
ScalarField z_field(const ScalarField& u, double alpha, double t = 0.0,
                    const ExactBoundary* bc = nullptr);

// |grad(u^(1+alpha/2))| nodewise, the power applied before differencing.
ScalarField grad_power_field(const ScalarField& u, double alpha, double t = 0.0,
                             const ExactBoundary* bc = nullptr);

struct NodeWitness {
    std::size_t node = 0;
    double t = 0.0;
    double value = 0.0;
};

struct GradientBoundCheck {
    double sup_grad_power = 0.0; // over snapshots and nodes
    bool pass = false;
    double tolerance = 0.05;
    NodeWitness worst;
};

// Hypothesis-blind: evaluates and reports on any input; admissibility of
// alpha is gated elsewhere.
GradientBoundCheck check_gradient_bound(const Trajectory& traj, double alpha, double M,
                                        double tol_grad = 0.05,
                                        const ExactBoundary* bc = nullptr);

// Max over adjacent-node pairs (all axes) of |u_a - u_b| / h; one-sided
// differences so it is a true pairwise modulus.
double lipschitz_x(const ScalarField& u);

struct HolderFit {
    double K = 0.0;          // max |u(t)-u(t0)| / |t-t0|^(1/2) over pairs, gap <= delta
    double exponent = 0.0;   // least-squares slope of log maxdiff vs log gap
    bool flat = false;       // trajectory constant in time: K = 0, no exponent
    int pair_count = 0;
    double delta = 0.0;
};

HolderFit holder_t(const Trajectory& traj, double delta);

enum class SignConvention { Paper, Derived };

struct WeakResidual {
    double residual = 0.0;
    double scale = 0.0; // integral of absolute integrand parts, for relative tests
};

// R = int u0 psi(.,0) + int int (u psi_t - u grad u . grad psi
//     - (1+gamma)|grad u|^2 psi + s f psi), s = -1 (Paper) or +1 (Derived).
// Spatial integrals by grid quadrature, time integral by trapezoid over the
// snapshots; psi derivatives analytic. Requires the support strictly inside
// the space-time cylinder (touching t = 0 allowed) and >= 8 snapshots
// spanning it.
WeakResidual weak_residual(const Trajectory& traj, const TestFunction& psi, double gamma,
                           const Forcing& f, SignConvention sign,
                           const ExactBoundary* bc = nullptr);

// Same on a linear combination sum_k coeff_k psi_k (the integrand is linear
// in psi).
WeakResidual weak_residual(const Trajectory& traj,
                           std::span<const std::pair<double, TestFunction>> combo,
                           double gamma, const Forcing& f, SignConvention sign,
                           const ExactBoundary* bc = nullptr);

struct PointwiseCheck {
    double eq18_violation = 0.0; // max positive part of (1/N)(lap u)^2 - sum u_ij^2
    double eq21_violation = 0.0; // max positive part of the admissibility quadratic
    double eq18_scale = 0.0;
    double eq21_scale = 0.0;
    NodeWitness eq18_worst, eq21_worst;
};

PointwiseCheck pointwise_inequalities(const ScalarField& u, double alpha, double gamma,
                                      double t = 0.0, const ExactBoundary* bc = nullptr);

struct ZMaxCheck {
    double sup_initial = 0.0;
    double sup_overall = 0.0;
    bool pass = false;
    double tolerance = 0.05;
    NodeWitness worst;
};

ZMaxCheck z_max_principle(const Trajectory& traj, double alpha, double tol_grad = 0.05,
                          const ExactBoundary* bc = nullptr);

struct WeakResidualEntry {
    std::string id;
    double residual_derived = 0.0;
    double residual_paper = 0.0;
    double scale = 0.0;
};

struct CheckRow {
    std::string name;
    bool pass = false;
    double tolerance = 0.0;
};

struct WitnessRow {
    std::string check;
    double t = 0.0;
    std::size_t node = 0;
    double x = 0.0, y = 0.0;
    double value = 0.0;
};

struct RegularityReport {
    double epsilon = 0.0;
    double M = 0.0;
    double sup_grad_power = 0.0;
    double lipschitz_x_max = 0.0;
    double lipschitz_bound = 0.0;
    double holder_K = 0.0;
    double holder_exponent = 0.0;
    bool holder_flat = false;
    double holder_delta = 0.0;
    double eq18_max_violation = 0.0;
    double eq21_max_violation = 0.0;
    double eq18_scale = 0.0;
    double eq21_scale = 0.0;
    double z_sup_initial = 0.0;
    double z_sup_overall = 0.0;
    double boundary_activity = 0.0; // max boundary-adjacent |grad u| / global max
    std::vector<WeakResidualEntry> weak_residuals;
    std::vector<CheckRow> checks;
    std::vector<WitnessRow> witnesses;

    bool all_pass() const;
};

struct CertifyOptions {
    double tol_grad = 0.05;
    double holder_delta_fraction = 0.5;  // delta = fraction * T
    double holder_min_exponent = 0.45;
    double weak_rel_tol = 0.02;          // |R| / scale for the derived sign
};

// Full report on one trajectory. M must come from build_initial_data on the
// same config so the comparison is like-for-like.
RegularityReport certify(const ProblemConfig& cfg, const Trajectory& traj, double M,
                         const CertifyOptions& opts = {},
                         const ExactBoundary* bc = nullptr);

// The three interior test bumps used by certify and the refinement studies.
std::vector<std::pair<std::string, TestFunction>> standard_bumps(const ProblemConfig& cfg);

} // namespace vvlab
