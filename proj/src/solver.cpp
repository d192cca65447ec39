#include "vvlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kernels_node.hpp"
#include "vvlab/initial_data.hpp"
#include "vvlab/kernels.hpp"

namespace vvlab {

double stable_dt(double max_u, double eps, double h, double safety, int dim,
                 double gamma, double max_grad, double snapshot_gap,
                 bool forcing_is_zero) {
    if (max_u + eps == 0.0 && gamma * max_grad == 0.0 && forcing_is_zero)
        throw NumericError(
            "stable_dt: field, eps, and forcing are all zero; the solution is "
            "identically 0");
    const double denom = 2.0 * dim * (max_u + eps) + h * gamma * max_grad +
                         h * h * kStableDtTinyGuard;
    return std::min(safety * h * h / denom, snapshot_gap);
}

namespace {

// Detailed diagnostic for the first non-finite node after a bad step.
[[noreturn]] void report_nonfinite(const kernels::Ctx& c, const ScalarField& u,
                                   const std::vector<double>& out, double t, double dt,
                                   double eps, double gamma, const PreparedForcing& f) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!std::isfinite(out[i])) {
            bad = i;
            break;
        }
    double lap = 0.0, gsq = 0.0;
    if (c.dim == 1) {
        const auto d = kernels::detail::node_derivs_1d(c, u.v.data(), static_cast<int>(bad));
        lap = d.uxx;
        gsq = d.ux * d.ux;
    } else {
        const auto ij = u.grid->unindex(bad);
        const auto d = kernels::detail::node_derivs_2d(c, u.v.data(), ij[0], ij[1]);
        lap = d.uxx + d.uyy;
        gsq = d.ux * d.ux + d.uy * d.uy;
    }
    std::ostringstream os;
    os << "non-finite update at node " << bad << " (t = " << t << ", dt = " << dt
       << "): u = " << u.v[bad] << ", lap = " << lap << ", |grad|^2 = " << gsq
       << ", f = " << f(u.v[bad]) << ", eps = " << eps << ", gamma = " << gamma;
    throw NumericError(os.str());
}

} // namespace

ScalarField step(const ScalarField& u, double t, double dt, double eps, double gamma,
                 const Forcing& f, const ExactBoundary* bc) {
    ScalarField out(u.grid);
    const auto c = kernels::make_ctx(*u.grid, t, bc);
    const PreparedForcing pf = prepare_forcing(f, t);
    const auto stats =
        kernels::par::euler_step(c, u.v.data(), out.v.data(), dt, eps, gamma, pf);
    if (stats.nonfinite) report_nonfinite(c, u, out.v, t, dt, eps, gamma, pf);
    return out;
}

Trajectory solve_viscous(const ProblemConfig& cfg, double eps, bool lift_initial) {
    const GridPtr grid = build_grid(cfg.grid);
    ExactBoundary bc;
    const ExactBoundary* bcp = nullptr;
    if (cfg.grid.boundary == Boundary::Exact) {
        bc = manufactured_solution(cfg.initial, cfg.grid.dim, cfg.gamma, cfg.forcing,
                                   cfg.horizon);
        bcp = &bc;
    }

    ScalarField u = sample_initial(cfg.initial, grid);
    if (!u.all_finite()) throw ConfigError("initial data contains non-finite samples");
    if (u.min_value() < 0.0)
        throw ConfigError("initial data is negative somewhere; u0 >= 0 is required");
    if (lift_initial)
        for (double& x : u.v) x += eps;

    Trajectory traj;
    traj.epsilon = eps;
    const double h = grid->spacing();
    traj.tol_neg = 10.0 * h * h * std::max(1.0, u.max_value());

    const std::vector<double>& snaps = cfg.snapshots;
    traj.times.reserve(snaps.size());
    traj.fields.reserve(snaps.size());
    traj.times.push_back(0.0);
    traj.fields.push_back(u);

    ScalarField next(grid);
    double t = 0.0;
    double max_u = u.max_value();
    double min_u = u.min_value();
    double grad_max = 0.0; // |grad u| from the previous step's sweep
    std::size_t snap_idx = 1;

    while (snap_idx < snaps.size()) {
        // Fully degenerate zero state: nothing will ever move.
        if (max_u == 0.0 && min_u == 0.0 && eps == 0.0 && cfg.forcing.is_zero() &&
            cfg.gamma * grad_max == 0.0) {
            for (; snap_idx < snaps.size(); ++snap_idx) {
                traj.times.push_back(snaps[snap_idx]);
                traj.fields.push_back(u);
            }
            break;
        }

        const double gap = snaps[snap_idx] - t;
        const double dt_formula = stable_dt(max_u, eps, h, cfg.cfl_safety, grid->dim(),
                                            cfg.gamma, grad_max,
                                            std::numeric_limits<double>::infinity(),
                                            cfg.forcing.is_zero());
        const bool hits_snapshot = dt_formula >= gap;
        const double dt = hits_snapshot ? gap : dt_formula;

        const auto c = kernels::make_ctx(*grid, t, bcp);
        const PreparedForcing pf = prepare_forcing(cfg.forcing, t);
        const auto stats =
            kernels::par::euler_step(c, u.v.data(), next.v.data(), dt, eps, cfg.gamma, pf);
        if (stats.nonfinite)
            report_nonfinite(c, u, next.v, t, dt, eps, cfg.gamma, pf);

        std::swap(u.v, next.v);
        t = hits_snapshot ? snaps[snap_idx] : t + dt;
        ++traj.step_count;
        traj.dt_min = std::min(traj.dt_min, dt);
        traj.dt_max = std::max(traj.dt_max, dt);
        max_u = stats.max_u;
        min_u = stats.min_u;
        grad_max = std::sqrt(stats.max_grad_sq);

        if (min_u < -traj.tol_neg) {
            std::ostringstream os;
            os << "scheme failure: min u = " << min_u << " < -tol_neg = " << -traj.tol_neg
               << " at t = " << t << " (eps = " << eps << ")";
            throw NumericError(os.str());
        }

        if (hits_snapshot) {
            traj.times.push_back(snaps[snap_idx]);
            traj.fields.push_back(u);
            ++snap_idx;
        }
    }
    return traj;
}

std::pair<Trajectory, ConvergenceTable> vanishing_viscosity(
    const ProblemConfig& cfg, bool lift_initial, const TrajectorySink& on_each) {
    if (cfg.eps.count < 2)
        throw ConfigError("eps schedule too short for convergence table (eps_count >= 2)");

    ConvergenceTable table;
    table.rows.reserve(cfg.eps.count);
    Trajectory prev, cur;
    for (int k = 0; k < cfg.eps.count; ++k) {
        const double eps_k = cfg.eps.eps0 * std::pow(cfg.eps.factor, k);
        cur = solve_viscous(cfg, eps_k, lift_initial);
        if (on_each) on_each(k, cur);
        ConvergenceRow row;
        row.eps = eps_k;
        if (k > 0) {
            row.diff_inf = max_abs_diff(cur.fields.back(), prev.fields.back());
            row.diff_l1 = l1_diff(cur.fields.back(), prev.fields.back());
            if (k > 1) {
                const double d_prev = table.rows.back().diff_inf;
                if (d_prev > 0.0 && row.diff_inf > 0.0)
                    row.order = std::log(d_prev / row.diff_inf) /
                                std::log(1.0 / cfg.eps.factor);
                if (row.diff_inf >= d_prev)
                    table.warning =
                        "eps differences are not strictly decreasing; the eps -> 0 "
                        "limit is not yet resolved on this grid";
            }
        }
        table.rows.push_back(row);
        prev = std::move(cur);
    }
    return {std::move(prev), std::move(table)};
}

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i)
        m = std::max(m, std::fabs(a.v[i] - b.v[i]));
    return m;
}

double l1_diff(const ScalarField& a, const ScalarField& b) {
    ScalarField d(a.grid);
    for (std::size_t i = 0; i < a.v.size(); ++i) d.v[i] = std::fabs(a.v[i] - b.v[i]);
    return quadrature(d);
}

} // namespace vvlab
