#include "vvlab/bump.hpp"

#include <cmath>
#include <stdexcept>

namespace vvlab {

double mollifier(double s) {
    const double s2 = s * s;
    if (s2 >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - s2));
}

double mollifier_deriv(double s) {
    const double s2 = s * s;
    if (s2 >= 1.0) return 0.0;
    const double d = 1.0 - s2;
    return -2.0 * s / (d * d) * std::exp(-1.0 / d);
}

double TestFunction::value(double x, double y, double t) const {
    double r2 = (x - center_x[0]) * (x - center_x[0]);
    if (dim == 2) r2 += (y - center_x[1]) * (y - center_x[1]);
    const double sx2 = r2 / (radius_x * radius_x);
    if (sx2 >= 1.0) return 0.0;
    return mollifier(std::sqrt(sx2)) * mollifier((t - center_t) / radius_t);
}

double TestFunction::dt(double x, double y, double t) const {
    double r2 = (x - center_x[0]) * (x - center_x[0]);
    if (dim == 2) r2 += (y - center_x[1]) * (y - center_x[1]);
    const double sx2 = r2 / (radius_x * radius_x);
    if (sx2 >= 1.0) return 0.0;
    const double tau = (t - center_t) / radius_t;
    return mollifier(std::sqrt(sx2)) * mollifier_deriv(tau) / radius_t;
}

std::array<double, 2> TestFunction::grad(double x, double y, double t) const {
    // d/dx_i b(|x-x0|/r) = -2 (x_i - x0_i) / (r^2 (1-s^2)^2) * b(s); no
    // singularity at the center because the x_i - x0_i factor vanishes there.
    std::array<double, 2> g = {0.0, 0.0};
    double r2 = (x - center_x[0]) * (x - center_x[0]);
    if (dim == 2) r2 += (y - center_x[1]) * (y - center_x[1]);
    const double s2 = r2 / (radius_x * radius_x);
    if (s2 >= 1.0) return g;
    const double d = 1.0 - s2;
    const double common = -2.0 / (radius_x * radius_x * d * d) * std::exp(-1.0 / d) *
                          mollifier((t - center_t) / radius_t);
    g[0] = common * (x - center_x[0]);
    if (dim == 2) g[1] = common * (y - center_x[1]);
    return g;
}

bool TestFunction::in_space_support(double x, double y) const {
    double r2 = (x - center_x[0]) * (x - center_x[0]);
    if (dim == 2) r2 += (y - center_x[1]) * (y - center_x[1]);
    return r2 < radius_x * radius_x;
}

bool TestFunction::in_time_support(double t) const {
    return std::fabs(t - center_t) < radius_t;
}

TestFunction bump(std::array<double, 2> center_x, double center_t, double radius_x,
                  double radius_t, int dim) {
    if (!(radius_x > 0.0) || !(radius_t > 0.0))
        throw std::invalid_argument("bump radii must be positive");
    TestFunction f;
    f.center_x = center_x;
    f.center_t = center_t;
    f.radius_x = radius_x;
    f.radius_t = radius_t;
    f.dim = dim;
    return f;
}

} // namespace vvlab
