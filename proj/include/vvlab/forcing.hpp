// Forcing catalog f(t,u) with hypothesis checks (sign, monotonicity, growth).
#pragma once

#include <string>
#include <vector>

#include "vvlab/grid.hpp"

namespace vvlab {

enum class ForcingKind { Zero, Constant, ExpDecay, Rational, TimeProfile };

std::string to_string(ForcingKind k);
ForcingKind forcing_kind_from_string(const std::string& s);

struct Forcing {
    ForcingKind kind = ForcingKind::Zero;
    double k = 0.0;                 // catalog coefficient, k >= 0
    std::vector<double> profile;    // c(t) polynomial coefficients (TimeProfile)
    double growth_m = 0.0;          // declared growth envelope |f| <= k_g |u|^m

    bool is_zero() const { return kind == ForcingKind::Zero; }
    // Envelope constant k_g: the catalog kinds all satisfy |f| <= k (m = 0);
    // for TimeProfile it is max c(t) over [0,T], supplied by the caller.
    double growth_kg(double horizon) const;

    double profile_value(double t) const;
};

// Snapshot of f at a fixed time, cheap to apply nodewise in hot loops.
struct PreparedForcing {
    ForcingKind kind = ForcingKind::Zero;
    double k = 0.0;
    double ct = 0.0; // c(t) for TimeProfile

    double operator()(double u) const {
        switch (kind) {
            case ForcingKind::Zero: return 0.0;
            case ForcingKind::Constant: return k;
            case ForcingKind::ExpDecay: return k * std::exp(-u);
            case ForcingKind::Rational: return k / (1.0 + u);
            case ForcingKind::TimeProfile: return ct;
        }
        return 0.0;
    }
};

PreparedForcing prepare_forcing(const Forcing& f, double t);

double eval_forcing(const Forcing& f, double t, double u);
ScalarField eval_forcing(const Forcing& f, double t, const ScalarField& u);

// Dense-sampling hypothesis check over (t,u) in [0,T] x [0,u_max] on a
// 200x200 lattice: f >= 0, df/du <= 0 (centered difference), and the growth
// envelope |f| <= k_g |u|^m. Passes iff all violations <= 1e-10.
struct ForcingValidation {
    bool pass = false;
    double worst_negative_f = 0.0;   // max(0, -f)
    double worst_positive_fu = 0.0;  // max(0, df/du)
    double worst_growth_excess = 0.0;
    struct Witness { double t = 0.0, u = 0.0; };
    Witness negative_f_at, positive_fu_at, growth_at;
    std::string message() const;
};

ForcingValidation validate_forcing(const Forcing& f, double horizon, double u_max);

} // namespace vvlab
