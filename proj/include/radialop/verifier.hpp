#pragma once

// Numeric cross-validation of the symbolic identities in real n-dimensional
// Cartesian space: finite-difference Laplacians, the divergence of the unit
// radial field, radial directional derivatives, metric/Jacobian agreement,
// and quadrature checks of the formal adjoint. Numeric agreement here is
// evidence, not proof; the exact layer carries the proof burden.

#include "radialop/geometry.hpp"
#include "radialop/radial_operator.hpp"
#include "radialop/rng.hpp"
#include "radialop/test_functions.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace radialop::num {

struct VerificationRecord {
    std::string check_name;
    int dimension = 0;
    int sample_count = 0;
    double max_abs_error = 0.0;
    double max_rel_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Default steps: 1e-3 for second differences (with one Richardson level;
// smaller steps are roundoff-dominated once the extrapolation amplifies the
// cancellation noise), 1e-6 for first differences.
inline constexpr double kLaplacianStep = 1e-3;
inline constexpr double kFirstDiffStep = 1e-6;

// Sum of per-axis second central differences of f(|x|), with one Richardson
// extrapolation level (h and h/2). The point must sit inside f's support
// with room for the stencil.
double fd_cartesian_laplacian(const RadialTestFunction& f, const geom::CartesianPoint& x,
                              double h = kLaplacianStep);

// Central-difference divergence of the unit radial field x/|x|; equals
// (n-1)/|x| analytically. Near-origin points are rejected.
double fd_divergence_rhat(const geom::CartesianPoint& x, double h = kFirstDiffStep);

// Central-difference directional derivative rhat . grad f at x; equals
// df/dr at |x|.
double fd_radial_directional_derivative(const RadialTestFunction& f,
                                        const geom::CartesianPoint& x,
                                        double h = kFirstDiffStep);

// Evaluate the action of a concrete-dimension operator (order <= 2) on f at
// radius r through f's analytic derivatives: sum_k c_k(r) f^(k)(r).
double apply_to_function(const RadialOperator& op, const RadialTestFunction& f, double r);

// Compare the symbolic action of A (at concrete dimension n) against the FD
// Cartesian Laplacian at |x| = each sample radius, along seeded random
// directions. Passes when A's action reproduces the Laplacian of f; a
// genuine operator gap (e.g. D_r^2 in even dimensions) shows up as failure.
VerificationRecord verify_operator_action(const RadialOperator& op, int dimension,
                                          const RadialTestFunction& f,
                                          const std::vector<double>& radii,
                                          double tolerance, std::uint64_t seed);

// |<A f, g> - <f, A+ g>| with weight r^(n-1) over the common support, via
// adaptive Simpson quadrature. A is given symbolically; its adjoint is taken
// formally and both are specialized to the given dimension. f and g must
// vanish at the common support boundary.
VerificationRecord quadrature_adjoint_check(const RadialOperator& symbolic_op,
                                            const std::string& op_name, int dimension,
                                            const RadialTestFunction& f,
                                            const RadialTestFunction& g,
                                            double tolerance = 1e-8);

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tolerance = 1e-10);

// ---- suite runners (the CLI's verify command) --------------------------

struct SuiteConfig {
    int n_min = 1;
    int n_max = 7;
    std::uint64_t seed = 42;
    // When set, replaces each record's default tolerance.
    std::optional<double> tolerance_override;
};

std::vector<VerificationRecord> run_laplacian_suite(const SuiteConfig& config);
std::vector<VerificationRecord> run_divergence_suite(const SuiteConfig& config);
std::vector<VerificationRecord> run_directional_suite(const SuiteConfig& config);
std::vector<VerificationRecord> run_adjoint_suite(const SuiteConfig& config);
std::vector<VerificationRecord> run_metric_suite(const SuiteConfig& config);
std::vector<VerificationRecord> run_all_suites(const SuiteConfig& config);

}  // namespace radialop::num
