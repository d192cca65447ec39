#include "vvlab/alpha.hpp"

#include <cmath>
#include <cstdio>

namespace vvlab {

double alpha_quadratic(double a, double gamma, int dim) {
    return a * a + (gamma + 1.0) * a + 0.5 * dim;
}

AlphaInterval admissible_alpha_interval(double gamma, int dim) {
    AlphaInterval iv;
    const double b = gamma + 1.0;
    const double disc = b * b - 2.0 * dim;
    if (disc < 0.0) {
        iv.status = AlphaInterval::Status::Empty;
        return iv;
    }
    const double s = std::sqrt(disc);
    iv.lo = 0.5 * (-b - s);
    iv.hi = 0.5 * (-b + s);
    iv.status = disc == 0.0 ? AlphaInterval::Status::Point
                            : AlphaInterval::Status::Interval;
    return iv;
}

double auto_alpha(const AlphaInterval& iv) {
    double a = iv.midpoint();
    if (std::fabs(a + 2.0) < 0.05) a = (a >= -2.0) ? -1.95 : -2.05;
    return a;
}

std::string AlphaInterval::describe() const {
    char buf[96];
    switch (status) {
        case Status::Empty: return "empty";
        case Status::Point:
            std::snprintf(buf, sizeof buf, "{%.7f}", lo);
            return buf;
        case Status::Interval:
            std::snprintf(buf, sizeof buf, "[%.7f, %.7f]", lo, hi);
            return buf;
    }
    return "?";
}

} // namespace vvlab
