#pragma once

// Hyperspherical coordinates (r, theta_{n-2}, ..., theta_1, phi) in
// n-dimensional Euclidean space: the chained sine/cosine map to Cartesian
// coordinates, the analytic diagonal metric, and a finite-difference
// Jacobian used as the numeric oracle for both.
//
// Coordinate ordering matches the metric's row order: u^1 = r,
// u^2 = theta_{n-2}, ..., u^(n-1) = theta_1, u^n = phi. Conventions for the
// degenerate low dimensions: n = 2 has no thetas (r, phi); n = 1 is just
// x_1 = r with the trivial metric.

#include "radialop/rng.hpp"

#include <vector>

namespace radialop::geom {

using CartesianPoint = std::vector<double>;
using Matrix = std::vector<std::vector<double>>;

struct PolarPoint {
    // thetas are stored in coordinate order [theta_{n-2}, ..., theta_1],
    // each strictly inside (0, pi); r > 0; phi in [0, 2*pi).
    PolarPoint(int dimension, double r, std::vector<double> thetas = {}, double phi = 0.0);

    int dimension;
    double r;
    std::vector<double> thetas;
    double phi;
};

// x_1 = r cos(phi) sin(theta_1)...sin(theta_{n-2}), ...,
// x_n = r cos(theta_{n-2}); the Euclidean norm of the result is r.
CartesianPoint to_cartesian(const PolarPoint& p);

// diag(1, r^2, r^2 sin^2(theta_{n-2}), ...,
//      r^2 sin^2(theta_{n-2})...sin^2(theta_1)).
std::vector<double> analytic_metric_diagonal(const PolarPoint& p);

// Product of the diagonal entries; equals
// r^(2(n-1)) * prod_i sin^(2i)(theta_i).
double metric_determinant(const PolarPoint& p);

// Central-difference Jacobian d x_k / d u^j (rows k, columns j in the
// coordinate order above), with one Richardson extrapolation level.
// Points too close to the sin(theta) = 0 degeneracy are rejected.
Matrix jacobian_fd(const PolarPoint& p, double h = 1e-5);

// J^T J, the metric induced by any Jacobian.
Matrix gram_matrix(const Matrix& jacobian);

// Determinant by Gaussian elimination with partial pivoting.
double determinant(Matrix m);

// Random point in the oracle sampling box r in [0.5, 5],
// theta in [0.3, pi - 0.3], phi in [0, 2*pi).
PolarPoint sample_interior_point(int dimension, Rng& rng);

}  // namespace radialop::geom
