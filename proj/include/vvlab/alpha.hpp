// Admissible exponent interval: the solution set of a^2 + (g+1)a + N/2 <= 0.
#pragma once

#include <string>

namespace vvlab {

struct AlphaInterval {
    enum class Status { Empty, Point, Interval };
    Status status = Status::Empty;
    double lo = 0.0;
    double hi = 0.0;

    bool empty() const { return status == Status::Empty; }
    bool contains(double a) const { return !empty() && a >= lo && a <= hi; }
    double midpoint() const { return 0.5 * (lo + hi); }
    std::string describe() const;
};

// Exact solution set of the quadratic inequality; empty iff (gamma+1)^2 < 2N.
AlphaInterval admissible_alpha_interval(double gamma, int dim);

// Interval midpoint, pushed to distance 0.05 from -2 when it lands within
// 0.05 of it (the Lipschitz/Hoelder estimates need alpha != -2).
double auto_alpha(const AlphaInterval& iv);

// Residual of the defining quadratic at a.
double alpha_quadratic(double a, double gamma, int dim);

} // namespace vvlab
