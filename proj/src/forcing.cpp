#include "vvlab/forcing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vvlab {

std::string to_string(ForcingKind k) {
    switch (k) {
        case ForcingKind::Zero: return "zero";
        case ForcingKind::Constant: return "constant";
        case ForcingKind::ExpDecay: return "exp_decay";
        case ForcingKind::Rational: return "rational";
        case ForcingKind::TimeProfile: return "time_profile";
    }
    return "?";
}

ForcingKind forcing_kind_from_string(const std::string& s) {
    if (s == "zero") return ForcingKind::Zero;
    if (s == "constant") return ForcingKind::Constant;
    if (s == "exp_decay") return ForcingKind::ExpDecay;
    if (s == "rational") return ForcingKind::Rational;
    if (s == "time_profile") return ForcingKind::TimeProfile;
    throw ConfigError("unknown forcing.kind '" + s +
                      "' (zero|constant|exp_decay|rational|time_profile)");
}

double Forcing::profile_value(double t) const {
    // Horner evaluation of c(t).
    double acc = 0.0;
    for (auto it = profile.rbegin(); it != profile.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double Forcing::growth_kg(double horizon) const {
    switch (kind) {
        case ForcingKind::Zero: return 0.0;
        case ForcingKind::Constant:
        case ForcingKind::ExpDecay:
        case ForcingKind::Rational: return k;
        case ForcingKind::TimeProfile: {
            // max |c(t)| over [0,T] by dense sampling (10^4 points).
            const int m = 10000;
            double kg = 0.0;
            for (int i = 0; i <= m; ++i)
                kg = std::max(kg, std::fabs(profile_value(horizon * i / m)));
            return kg;
        }
    }
    return 0.0;
}

PreparedForcing prepare_forcing(const Forcing& f, double t) {
    PreparedForcing p;
    p.kind = f.kind;
    p.k = f.k;
    p.ct = f.kind == ForcingKind::TimeProfile ? f.profile_value(t) : 0.0;
    return p;
}

double eval_forcing(const Forcing& f, double t, double u) {
    return prepare_forcing(f, t)(u);
}

ScalarField eval_forcing(const Forcing& f, double t, const ScalarField& u) {
    const PreparedForcing p = prepare_forcing(f, t);
    ScalarField out(u.grid);
    for (std::size_t i = 0; i < u.v.size(); ++i) out.v[i] = p(u.v[i]);
    return out;
}

std::string ForcingValidation::message() const {
    std::ostringstream os;
    if (pass) return "forcing hypotheses hold";
    if (worst_negative_f > 1e-10)
        os << "f >= 0 violated: f = " << -worst_negative_f << " at (t,u) = ("
           << negative_f_at.t << "," << negative_f_at.u << "); ";
    if (worst_positive_fu > 1e-10)
        os << "f_u <= 0 violated: f_u = " << worst_positive_fu << " at (t,u) = ("
           << positive_fu_at.t << "," << positive_fu_at.u << "); ";
    if (worst_growth_excess > 1e-10)
        os << "growth envelope |f| <= k_g*|u|^m violated by " << worst_growth_excess
           << " at (t,u) = (" << growth_at.t << "," << growth_at.u << ")";
    return os.str();
}

ForcingValidation validate_forcing(const Forcing& f, double horizon, double u_max) {
    ForcingValidation r;
    const int m = 200;
    const double kg = f.growth_kg(horizon);
    const double du = u_max / (m - 1);
    const double hfd = 0.5 * du; // centered-difference half step for f_u
    for (int it = 0; it < m; ++it) {
        const double t = horizon * it / (m - 1);
        const PreparedForcing p = prepare_forcing(f, t);
        for (int iu = 0; iu < m; ++iu) {
            const double u = iu * du;
            const double fv = p(u);
            if (-fv > r.worst_negative_f) {
                r.worst_negative_f = -fv;
                r.negative_f_at = {t, u};
            }
            const double fu = (p(u + hfd) - p(std::max(0.0, u - hfd))) /
                              (hfd + std::min(u, hfd));
            if (fu > r.worst_positive_fu) {
                r.worst_positive_fu = fu;
                r.positive_fu_at = {t, u};
            }
            const double bound = kg * std::pow(std::fabs(u), f.growth_m);
            const double excess = std::fabs(fv) - bound;
            if (excess > r.worst_growth_excess) {
                r.worst_growth_excess = excess;
                r.growth_at = {t, u};
            }
        }
    }
    r.pass = r.worst_negative_f <= 1e-10 && r.worst_positive_fu <= 1e-10 &&
             r.worst_growth_excess <= 1e-10;
    return r;
}

} // namespace vvlab
