#pragma once

// Radial test functions with closed-form derivatives, used to pit the
// symbolic operators against finite differences in real Cartesian space.

#include <functional>
#include <string>
#include <vector>

namespace radialop::num {

struct RadialTestFunction {
    std::string name;
    std::function<double(double)> value;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
    double support_lo;  // well-behaved on [support_lo, support_hi], inside (0, inf)
    double support_hi;
};

// The standard suite: r^2, r^3, 1/r, exp(-r^2/2), sin(r)/r.
const std::vector<RadialTestFunction>& standard_suite();

// Smooth bump exp(-1/(1-t^2)) mapped onto [a, b]; vanishes with all
// derivatives at the endpoints, which isolates the formal adjoint rule in
// quadrature checks.
RadialTestFunction bump(double a, double b);

}  // namespace radialop::num
