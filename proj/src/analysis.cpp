#include "vvlab/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "kernels_node.hpp"
#include "vvlab/kernels.hpp"

namespace vvlab {

ScalarField w_field(const ScalarField& u, double t, const ExactBoundary* bc) {
    const VectorField g = gradient(u, t, bc);
    ScalarField w(u.grid);
    const std::size_t size = u.v.size();
    if (u.grid->dim() == 1) {
        for (std::size_t i = 0; i < size; ++i) w.v[i] = 0.5 * g.comp[0][i] * g.comp[0][i];
    } else {
        for (std::size_t i = 0; i < size; ++i)
            w.v[i] = 0.5 * (g.comp[0][i] * g.comp[0][i] + g.comp[1][i] * g.comp[1][i]);
    }
    return w;
}

ScalarField z_field(const ScalarField& u, double alpha, double t, const ExactBoundary* bc) {
    ScalarField z = w_field(u, t, bc);
    if (alpha == 0.0) return z; // g(u) = 1 exactly
    for (std::size_t i = 0; i < u.v.size(); ++i) {
        const double ui = u.v[i];
        if (ui < 0.0 || (ui == 0.0 && alpha < 0.0))
            throw NumericError("z_field: u^alpha undefined at node " + std::to_string(i) +
                               " where u = " + std::to_string(ui) +
                               " (alpha = " + std::to_string(alpha) + ")");
        z.v[i] *= std::pow(ui, alpha);
    }
    return z;
}

namespace {

// Ghost values for u^p from the ghost values for u.
ExactBoundary powered_bc(const ExactBoundary& bc, double p) {
    const auto base = bc.value;
    return ExactBoundary{[base, p](double x, double y, double t) {
        const double v = base(x, y, t);
        if (v < 0.0 || (v == 0.0 && p <= 0.0))
            throw NumericError("grad_power_field: ghost value has no admissible power");
        return v == 0.0 ? 0.0 : std::pow(v, p);
    }};
}

} // namespace

ScalarField grad_power_field(const ScalarField& u, double alpha, double t,
                             const ExactBoundary* bc) {
    const double p = 1.0 + 0.5 * alpha;
    const ScalarField phi = power_field(u, p);
    if (bc != nullptr && u.grid->boundary() == Boundary::Exact) {
        const ExactBoundary pbc = powered_bc(*bc, p);
        return gradient(phi, t, &pbc).magnitude();
    }
    return gradient(phi, t, bc).magnitude();
}

GradientBoundCheck check_gradient_bound(const Trajectory& traj, double alpha, double M,
                                        double tol_grad, const ExactBoundary* bc) {
    GradientBoundCheck out;
    out.tolerance = tol_grad;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const ScalarField g = grad_power_field(traj.fields[k], alpha, traj.times[k], bc);
        for (std::size_t i = 0; i < g.v.size(); ++i)
            if (g.v[i] > out.sup_grad_power) {
                out.sup_grad_power = g.v[i];
                out.worst = {i, traj.times[k], g.v[i]};
            }
    }
    out.pass = out.sup_grad_power <= M * (1.0 + tol_grad);
    return out;
}

double lipschitz_x(const ScalarField& u) {
    const Grid& g = *u.grid;
    const int n = g.points();
    const double h = g.spacing();
    const bool wrap = g.boundary() == Boundary::Periodic;
    double m = 0.0;
    if (g.dim() == 1) {
        for (int i = 0; i + 1 < n; ++i) m = std::max(m, std::fabs(u.v[i + 1] - u.v[i]));
        if (wrap) m = std::max(m, std::fabs(u.v[0] - u.v[n - 1]));
        return m / h;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double c = u.v[g.index(i, j)];
            if (i + 1 < n) m = std::max(m, std::fabs(u.v[g.index(i + 1, j)] - c));
            else if (wrap) m = std::max(m, std::fabs(u.v[g.index(0, j)] - c));
            if (j + 1 < n) m = std::max(m, std::fabs(u.v[g.index(i, j + 1)] - c));
            else if (wrap) m = std::max(m, std::fabs(u.v[g.index(i, 0)] - c));
        }
    return m / h;
}

HolderFit holder_t(const Trajectory& traj, double delta) {
    if (traj.size() < 4) throw ConfigError("holder_t: needs at least 4 snapshots");
    if (!(delta > 0.0) || delta >= traj.times.back())
        throw ConfigError("holder_t: delta must lie in (0, T)");

    HolderFit fit;
    fit.delta = delta;
    // Least-squares accumulators for log(maxdiff) vs log(gap).
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int fit_pairs = 0;
    for (std::size_t i = 0; i < traj.size(); ++i)
        for (std::size_t j = i + 1; j < traj.size(); ++j) {
            const double gap = traj.times[j] - traj.times[i];
            if (gap <= 0.0 || gap > delta) continue;
            ++fit.pair_count;
            const double d = max_abs_diff(traj.fields[j], traj.fields[i]);
            fit.K = std::max(fit.K, d / std::sqrt(gap));
            if (d > 0.0) {
                const double lx = std::log(gap), ly = std::log(d);
                sx += lx;
                sy += ly;
                sxx += lx * lx;
                sxy += lx * ly;
                ++fit_pairs;
            }
        }
    if (fit.pair_count < 2) throw ConfigError("holder_t: fewer than 2 admissible pairs");
    if (fit_pairs < 2) {
        fit.flat = true; // constant in time; exponent has no meaning
        fit.exponent = 0.0;
        return fit;
    }
    const double denom = fit_pairs * sxx - sx * sx;
    fit.exponent = denom != 0.0 ? (fit_pairs * sxy - sx * sy) / denom : 0.0;
    return fit;
}

namespace {

struct BumpEval {
    double psi = 0.0, psi_t = 0.0;
    double gx = 0.0, gy = 0.0;
};

BumpEval eval_combo(std::span<const std::pair<double, TestFunction>> combo, double x,
                    double y, double t) {
    BumpEval e;
    for (const auto& [c, psi] : combo) {
        e.psi += c * psi.value(x, y, t);
        e.psi_t += c * psi.dt(x, y, t);
        const auto g = psi.grad(x, y, t);
        e.gx += c * g[0];
        e.gy += c * g[1];
    }
    return e;
}

} // namespace

WeakResidual weak_residual(const Trajectory& traj,
                           std::span<const std::pair<double, TestFunction>> combo,
                           double gamma, const Forcing& f, SignConvention sign,
                           const ExactBoundary* bc) {
    const GridPtr grid = traj.fields.front().grid;
    const double L = grid->extent();
    const double T = traj.times.back();
    const int dim = grid->dim();

    for (const auto& [c, psi] : combo) {
        (void)c;
        for (int a = 0; a < dim; ++a) {
            if (!(psi.center_x[a] - psi.radius_x > 0.0) ||
                !(psi.center_x[a] + psi.radius_x < L))
                throw ConfigError("weak_residual: bump support not strictly inside the box");
        }
        if (!(psi.center_t >= 0.0) || !(psi.center_t + psi.radius_t < T))
            throw ConfigError(
                "weak_residual: bump time support must end before T (touching t = 0 "
                "is allowed)");
        int covering = 0;
        for (double t : traj.times)
            if (t >= psi.center_t - psi.radius_t && t <= psi.center_t + psi.radius_t)
                ++covering;
        if (covering < 8)
            throw ConfigError("weak_residual: needs >= 8 snapshots spanning the bump "
                              "time support, got " + std::to_string(covering));
    }

    const double s = sign == SignConvention::Derived ? 1.0 : -1.0;
    WeakResidual out;

    // Initial term.
    {
        const ScalarField& u0 = traj.fields.front();
        ScalarField integrand(grid), a_integrand(grid);
        for (std::size_t i = 0; i < u0.v.size(); ++i) {
            const auto xy = grid->node_coords(i);
            const double psi0 = eval_combo(combo, xy[0], xy[1], 0.0).psi;
            integrand.v[i] = u0.v[i] * psi0;
            a_integrand.v[i] = std::fabs(u0.v[i] * psi0);
        }
        out.residual += quadrature(integrand);
        out.scale += quadrature(a_integrand);
    }

    // Space-time term: trapezoid over snapshots of the spatial quadratures.
    std::vector<double> inner(traj.size(), 0.0), a_inner(traj.size(), 0.0);
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double t = traj.times[k];
        bool active = false;
        for (const auto& [c, psi] : combo) {
            (void)c;
            if (psi.in_time_support(t)) active = true;
        }
        if (!active) continue;
        const ScalarField& u = traj.fields[k];
        const VectorField g = gradient(u, t, bc);
        const PreparedForcing pf = prepare_forcing(f, t);
        ScalarField integrand(grid), a_integrand(grid);
        for (std::size_t i = 0; i < u.v.size(); ++i) {
            const auto xy = grid->node_coords(i);
            const BumpEval e = eval_combo(combo, xy[0], xy[1], t);
            const double gx = g.comp[0][i];
            const double gy = dim == 2 ? g.comp[1][i] : 0.0;
            const double grad_sq = gx * gx + gy * gy;
            const double grad_dot = gx * e.gx + gy * e.gy;
            const double fv = pf(u.v[i]);
            integrand.v[i] = u.v[i] * e.psi_t - u.v[i] * grad_dot -
                             (1.0 + gamma) * grad_sq * e.psi + s * fv * e.psi;
            a_integrand.v[i] = std::fabs(u.v[i] * e.psi_t) + std::fabs(u.v[i] * grad_dot) +
                               std::fabs((1.0 + gamma) * grad_sq * e.psi) +
                               std::fabs(fv * e.psi);
        }
        inner[k] = quadrature(integrand);
        a_inner[k] = quadrature(a_integrand);
    }
    for (std::size_t k = 0; k + 1 < traj.size(); ++k) {
        const double w = 0.5 * (traj.times[k + 1] - traj.times[k]);
        out.residual += w * (inner[k] + inner[k + 1]);
        out.scale += w * (a_inner[k] + a_inner[k + 1]);
    }
    return out;
}

WeakResidual weak_residual(const Trajectory& traj, const TestFunction& psi, double gamma,
                           const Forcing& f, SignConvention sign,
                           const ExactBoundary* bc) {
    const std::pair<double, TestFunction> one[] = {{1.0, psi}};
    return weak_residual(traj, one, gamma, f, sign, bc);
}

PointwiseCheck pointwise_inequalities(const ScalarField& u, double alpha, double gamma,
                                      double t, const ExactBoundary* bc) {
    const Grid& g = *u.grid;
    const int n = g.points();
    const int N = g.dim();
    const auto c = kernels::make_ctx(g, t, bc);
    PointwiseCheck out;

    auto visit = [&](std::size_t idx, double ui, double w, double hess, double lap) {
        // Eq.(18): sum u_ij^2 >= (lap u)^2 / N, same second differences on
        // both sides.
        const double q18 = lap * lap / N - hess;
        const double s18 = std::fabs(lap * lap / N) + std::fabs(hess);
        if (s18 > out.eq18_scale) out.eq18_scale = s18;
        if (q18 > out.eq18_violation) {
            out.eq18_violation = q18;
            out.eq18_worst = {idx, t, q18};
        }
        // Eq.(21): 2a(a+g+1) u^(-a-1) z^2 + 2 z lap u - u^(a+1) (lap u)^2 / N.
        if (ui > 0.0 || (ui == 0.0 && alpha >= 0.0 && alpha + 1.0 >= 0.0)) {
            const double z = (alpha == 0.0 ? 1.0 : std::pow(ui, alpha)) * w;
            const double t1 = 2.0 * alpha * (alpha + gamma + 1.0) *
                              (ui == 0.0 ? 0.0 : std::pow(ui, -alpha - 1.0)) * z * z;
            const double t2 = 2.0 * z * lap;
            const double t3 = -std::pow(ui, alpha + 1.0) * lap * lap / N;
            const double q21 = t1 + t2 + t3;
            const double s21 = std::fabs(t1) + std::fabs(t2) + std::fabs(t3);
            if (s21 > out.eq21_scale) out.eq21_scale = s21;
            if (q21 > out.eq21_violation) {
                out.eq21_violation = q21;
                out.eq21_worst = {idx, t, q21};
            }
        } else {
            throw NumericError("pointwise_inequalities: u <= 0 at node " +
                               std::to_string(idx) + " with negative power exponent");
        }
    };

    if (N == 1) {
        for (int i = 0; i < n; ++i) {
            const auto d = kernels::detail::node_derivs_1d(c, u.v.data(), i);
            visit(static_cast<std::size_t>(i), u.v[i], 0.5 * d.ux * d.ux, d.uxx * d.uxx,
                  d.uxx);
        }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto d = kernels::detail::node_derivs_2d(c, u.v.data(), i, j);
                const std::size_t idx = g.index(i, j);
                visit(idx, u.v[idx], 0.5 * (d.ux * d.ux + d.uy * d.uy),
                      d.uxx * d.uxx + d.uyy * d.uyy + 2.0 * d.uxy * d.uxy,
                      d.uxx + d.uyy);
            }
    }
    return out;
}

ZMaxCheck z_max_principle(const Trajectory& traj, double alpha, double tol_grad,
                          const ExactBoundary* bc) {
    ZMaxCheck out;
    out.tolerance = tol_grad;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const ScalarField z = z_field(traj.fields[k], alpha, traj.times[k], bc);
        double sup = 0.0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < z.v.size(); ++i)
            if (std::fabs(z.v[i]) > sup) {
                sup = std::fabs(z.v[i]);
                arg = i;
            }
        if (k == 0) out.sup_initial = sup;
        if (sup > out.sup_overall) {
            out.sup_overall = sup;
            out.worst = {arg, traj.times[k], sup};
        }
    }
    out.pass = out.sup_overall <= out.sup_initial * (1.0 + tol_grad);
    return out;
}

bool RegularityReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<std::pair<std::string, TestFunction>> standard_bumps(const ProblemConfig& cfg) {
    const double L = cfg.grid.extent;
    const double T = cfg.horizon;
    const int dim = cfg.grid.dim;
    std::vector<std::pair<std::string, TestFunction>> out;
    out.emplace_back("bump_mid",
                     bump({0.5 * L, 0.5 * L}, 0.5 * T, 0.2 * L, 0.3 * T, dim));
    out.emplace_back("bump_off",
                     bump({0.35 * L, 0.35 * L}, 0.6 * T, 0.15 * L, 0.25 * T, dim));
    out.emplace_back("bump_t0",
                     bump({0.6 * L, 0.6 * L}, 0.0, 0.2 * L, 0.35 * T, dim));
    return out;
}

RegularityReport certify(const ProblemConfig& cfg, const Trajectory& traj, double M,
                         const CertifyOptions& opts, const ExactBoundary* bc) {
    RegularityReport rep;
    rep.epsilon = traj.epsilon;
    rep.M = M;

    const GridPtr grid = traj.fields.front().grid;
    const double h = grid->spacing();
    const double abs_a2 = std::fabs(1.0 + 0.5 * cfg.alpha);

    // Gradient-power bound.
    const GradientBoundCheck gb =
        check_gradient_bound(traj, cfg.alpha, M, opts.tol_grad, bc);
    rep.sup_grad_power = gb.sup_grad_power;
    rep.checks.push_back({"gradient_bound", gb.pass, opts.tol_grad});
    {
        const auto xy = grid->node_coords(gb.worst.node);
        rep.witnesses.push_back(
            {"gradient_bound", gb.worst.t, gb.worst.node, xy[0], xy[1], gb.worst.value});
    }

    // z maximum principle.
    const ZMaxCheck zm = z_max_principle(traj, cfg.alpha, opts.tol_grad, bc);
    rep.z_sup_initial = zm.sup_initial;
    rep.z_sup_overall = zm.sup_overall;
    rep.checks.push_back({"z_max_principle", zm.pass, opts.tol_grad});
    {
        const auto xy = grid->node_coords(zm.worst.node);
        rep.witnesses.push_back(
            {"z_max_principle", zm.worst.t, zm.worst.node, xy[0], xy[1], zm.worst.value});
    }

    // Lipschitz-in-x against the power-bound estimate, per snapshot.
    bool lip_pass = true;
    double lip_bound_at_worst = 0.0;
    double worst_t = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double lip = lipschitz_x(traj.fields[k]);
        const double mn = traj.fields[k].min_value();
        const double bound =
            (abs_a2 > 0.0 ? (1.0 / abs_a2) * std::pow(mn, -0.5 * cfg.alpha) * M *
                                (1.0 + opts.tol_grad)
                          : std::numeric_limits<double>::infinity()) +
            10.0 * h;
        if (lip > rep.lipschitz_x_max) {
            rep.lipschitz_x_max = lip;
            lip_bound_at_worst = bound;
            worst_t = traj.times[k];
        }
        if (lip > bound) lip_pass = false;
    }
    rep.lipschitz_bound = lip_bound_at_worst;
    rep.checks.push_back({"lipschitz_x", lip_pass, opts.tol_grad});
    rep.witnesses.push_back({"lipschitz_x", worst_t, 0, 0.0, 0.0, rep.lipschitz_x_max});

    // Hoelder-in-t.
    const HolderFit hf = holder_t(traj, opts.holder_delta_fraction * cfg.horizon);
    rep.holder_K = hf.K;
    rep.holder_exponent = hf.exponent;
    rep.holder_flat = hf.flat;
    rep.holder_delta = hf.delta;
    const bool holder_pass = hf.flat || hf.exponent >= opts.holder_min_exponent;
    rep.checks.push_back({"holder_t", holder_pass, opts.holder_min_exponent});

    // Weak residuals, both sign conventions; the derived one is the gate.
    bool weak_pass = true;
    for (const auto& [id, psi] : standard_bumps(cfg)) {
        WeakResidualEntry e;
        e.id = id;
        const WeakResidual rd =
            weak_residual(traj, psi, cfg.gamma, cfg.forcing, SignConvention::Derived, bc);
        const WeakResidual rp =
            weak_residual(traj, psi, cfg.gamma, cfg.forcing, SignConvention::Paper, bc);
        e.residual_derived = rd.residual;
        e.residual_paper = rp.residual;
        e.scale = rd.scale;
        const double rel = std::fabs(rd.residual) / std::max(rd.scale, 1e-300);
        if (rd.scale == 0.0 ? std::fabs(rd.residual) > 1e-12 : rel > opts.weak_rel_tol)
            weak_pass = false;
        rep.weak_residuals.push_back(e);
    }
    rep.checks.push_back({"weak_residual", weak_pass, opts.weak_rel_tol});

    // Pointwise algebraic inequalities over all snapshots.
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const PointwiseCheck pc =
            pointwise_inequalities(traj.fields[k], cfg.alpha, cfg.gamma, traj.times[k], bc);
        if (pc.eq18_violation > rep.eq18_max_violation) {
            rep.eq18_max_violation = pc.eq18_violation;
            const auto xy = grid->node_coords(pc.eq18_worst.node);
            rep.witnesses.push_back({"eq18", pc.eq18_worst.t, pc.eq18_worst.node, xy[0],
                                     xy[1], pc.eq18_worst.value});
        }
        rep.eq18_scale = std::max(rep.eq18_scale, pc.eq18_scale);
        if (pc.eq21_violation > rep.eq21_max_violation) {
            rep.eq21_max_violation = pc.eq21_violation;
            const auto xy = grid->node_coords(pc.eq21_worst.node);
            rep.witnesses.push_back({"eq21", pc.eq21_worst.t, pc.eq21_worst.node, xy[0],
                                     xy[1], pc.eq21_worst.value});
        }
        rep.eq21_scale = std::max(rep.eq21_scale, pc.eq21_scale);
    }
    const double tol18 = 1e-12 * (1.0 + rep.eq18_scale);
    const double tol21 = 1e-10 * (1.0 + rep.eq21_scale);
    rep.checks.push_back({"eq18", rep.eq18_max_violation <= tol18, tol18});
    rep.checks.push_back({"eq21", rep.eq21_max_violation <= tol21, tol21});

    // Boundary-adjacent activity: the box must emulate all of space.
    {
        double global = 0.0, edge = 0.0;
        const int n = grid->points();
        for (std::size_t k = 0; k < traj.size(); ++k) {
            const ScalarField mag = gradient(traj.fields[k], traj.times[k], bc).magnitude();
            for (std::size_t i = 0; i < mag.v.size(); ++i) {
                global = std::max(global, mag.v[i]);
                const auto ij = grid->unindex(i);
                const bool edge_node =
                    ij[0] == 0 || ij[0] == n - 1 ||
                    (grid->dim() == 2 && (ij[1] == 0 || ij[1] == n - 1));
                if (edge_node) edge = std::max(edge, mag.v[i]);
            }
        }
        rep.boundary_activity = global > 0.0 ? edge / global : 0.0;
    }

    return rep;
}

} // namespace vvlab
