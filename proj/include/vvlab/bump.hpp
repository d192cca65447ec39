// Compactly supported C^inf space-time test functions built from the
// mollifier profile b(s) = exp(-1/(1-s^2)) for |s| < 1, 0 otherwise.
// psi(x,t) = b(|x-x0|/r_x) * b((t-t0)/r_t); derivatives are analytic, never
// differenced.
#pragma once

#include <array>

namespace vvlab {

double mollifier(double s);        // b(s)
double mollifier_deriv(double s);  // b'(s)

struct TestFunction {
    std::array<double, 2> center_x = {0.5, 0.5};
    double center_t = 0.5;
    double radius_x = 0.25; // r_x > 0
    double radius_t = 0.25; // r_t > 0
    int dim = 1;

    double value(double x, double y, double t) const;
    double dt(double x, double y, double t) const;
    std::array<double, 2> grad(double x, double y, double t) const;

    // Support is the closed product of the space ball and the time interval.
    bool in_space_support(double x, double y) const;
    bool in_time_support(double t) const;
};

TestFunction bump(std::array<double, 2> center_x, double center_t, double radius_x,
                  double radius_t, int dim);

} // namespace vvlab
