// Forward-Euler time integration of the eps-regularized equation
//   u_t = (u + eps) lap u - gamma |grad u|^2 + f(t,u)
// and the vanishing-viscosity driver sending eps -> 0.
#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "vvlab/config.hpp"
#include "vvlab/grid.hpp"

namespace vvlab {

struct Trajectory {
    double epsilon = 0.0;
    std::vector<double> times;        // strictly increasing, first 0, last T
    std::vector<ScalarField> fields;  // one per time
    long long step_count = 0;
    double dt_min = std::numeric_limits<double>::infinity();
    double dt_max = 0.0;
    double tol_neg = 0.0; // 10 h^2 max(1, max u0)

    std::size_t size() const { return times.size(); }
};

struct ConvergenceRow {
    double eps = 0.0;
    double diff_inf = std::numeric_limits<double>::quiet_NaN(); // vs previous eps, at T
    double diff_l1 = std::numeric_limits<double>::quiet_NaN();
    double order = std::numeric_limits<double>::quiet_NaN();    // log-ratio of diff_inf
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows; // eps strictly decreasing
    std::string warning;              // set when diff_inf fails to decrease
};

inline constexpr double kStableDtTinyGuard = 1e-30;

// dt = safety h^2 / (2N(max_u + eps) + h gamma G + h^2 tiny_guard), capped by
// the gap to the next snapshot. G is the max gradient magnitude from the last
// computed gradient (0 on the first step). Throws NumericError on the fully
// degenerate zero state (max_u + eps = 0, gamma G = 0, zero forcing): the
// solution is identically 0 and callers short-circuit instead of stepping.
double stable_dt(double max_u, double eps, double h, double safety, int dim,
                 double gamma, double max_grad, double snapshot_gap,
                 bool forcing_is_zero);

// One forward-Euler update; NaN/Inf in the output aborts with a diagnostic
// naming the node and the contributing terms.
ScalarField step(const ScalarField& u, double t, double dt, double eps, double gamma,
                 const Forcing& f, const ExactBoundary* bc = nullptr);

// Marches from u0 (or the lifted u0 + eps) to T with adaptive dt, recording
// snapshots exactly at the configured times by shortening the final step into
// each. Aborts if min u drops below -tol_neg.
Trajectory solve_viscous(const ProblemConfig& cfg, double eps, bool lift_initial);

// Runs the eps ladder eps0 * factor^k, k = 0..count-1 (count >= 2), measures
// successive differences at T, returns the smallest-eps trajectory. on_each,
// when set, sees every ladder member in order (for artifact dumps).
using TrajectorySink = std::function<void(int k, const Trajectory&)>;
std::pair<Trajectory, ConvergenceTable> vanishing_viscosity(
    const ProblemConfig& cfg, bool lift_initial, const TrajectorySink& on_each = {});

double max_abs_diff(const ScalarField& a, const ScalarField& b);
double l1_diff(const ScalarField& a, const ScalarField& b);

} // namespace vvlab
