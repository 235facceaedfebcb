#include "radialop/test_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace radialop::num {

const std::vector<RadialTestFunction>& standard_suite() {
    static const std::vector<RadialTestFunction> suite = {
        {"r^2",
         [](double r) { return r * r; },
         [](double r) { return 2.0 * r; },
         [](double) { return 2.0; },
         0.05, 20.0},
        {"r^3",
         [](double r) { return r * r * r; },
         [](double r) { return 3.0 * r * r; },
         [](double r) { return 6.0 * r; },
         0.05, 20.0},
        {"r^-1",
         [](double r) { return 1.0 / r; },
         [](double r) { return -1.0 / (r * r); },
         [](double r) { return 2.0 / (r * r * r); },
         0.5, 5.0},
        {"exp(-r^2/2)",
         [](double r) { return std::exp(-0.5 * r * r); },
         [](double r) { return -r * std::exp(-0.5 * r * r); },
         [](double r) { return (r * r - 1.0) * std::exp(-0.5 * r * r); },
         0.05, 20.0},
        {"sin(r)/r",
         [](double r) { return std::sin(r) / r; },
         [](double r) { return std::cos(r) / r - std::sin(r) / (r * r); },
         [](double r) {
             return -std::sin(r) / r - 2.0 * std::cos(r) / (r * r)
                 + 2.0 * std::sin(r) / (r * r * r);
         },
         0.05, 20.0},
    };
    return suite;
}

namespace {

// Profile psi(t) = exp(-1/(1-t^2)) on (-1, 1), zero outside. Values within
// kEdge of |t| = 1 are already deep in the underflow region; returning exact
// zeros avoids 0 * inf in the derivative formulas.
constexpr double kEdge = 1e-6;

double psi(double t) {
    if (std::abs(t) >= 1.0 - kEdge)
        return 0.0;
    return std::exp(-1.0 / (1.0 - t * t));
}

double psi_d1(double t) {
    if (std::abs(t) >= 1.0 - kEdge)
        return 0.0;
    const double u = 1.0 - t * t;
    return psi(t) * (-2.0 * t) / (u * u);
}

double psi_d2(double t) {
    if (std::abs(t) >= 1.0 - kEdge)
        return 0.0;
    const double u = 1.0 - t * t;
    const double u2 = u * u;
    return psi(t) * (4.0 * t * t / (u2 * u2) - 8.0 * t * t / (u2 * u) - 2.0 / u2);
}

}  // namespace

RadialTestFunction bump(double a, double b) {
    if (!(0.0 < a && a < b))
        throw std::invalid_argument("bump: need 0 < a < b");
    const double mid = 0.5 * (a + b);
    const double scale = 2.0 / (b - a);  // dt/dr
    auto to_t = [mid, scale](double r) { return (r - mid) * scale; };
    return {
        "bump[" + std::to_string(a) + "," + std::to_string(b) + "]",
        [to_t](double r) { return psi(to_t(r)); },
        [to_t, scale](double r) { return scale * psi_d1(to_t(r)); },
        [to_t, scale](double r) { return scale * scale * psi_d2(to_t(r)); },
        a, b};
}

}  // namespace radialop::num
