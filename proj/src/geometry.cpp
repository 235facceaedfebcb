#include "radialop/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace radialop::geom {

namespace {

constexpr double kDegeneracyMargin = 1e-3;

}  // namespace

PolarPoint::PolarPoint(int dimension_, double r_, std::vector<double> thetas_, double phi_)
    : dimension(dimension_), r(r_), thetas(std::move(thetas_)), phi(phi_) {
    if (dimension < 1)
        throw std::invalid_argument("PolarPoint: dimension must be >= 1");
    if (!(r > 0.0))
        throw std::invalid_argument("PolarPoint: r must be positive");
    const size_t expected = dimension >= 2 ? static_cast<size_t>(dimension - 2) : 0;
    if (thetas.size() != expected)
        throw std::invalid_argument("PolarPoint: expected " + std::to_string(expected)
                                    + " theta coordinates for dimension "
                                    + std::to_string(dimension));
    for (double t : thetas) {
        if (!(t > 0.0 && t < M_PI))
            throw std::invalid_argument("PolarPoint: thetas must lie strictly in (0, pi)");
    }
    if (dimension >= 2 && !(phi >= 0.0 && phi < 2.0 * M_PI))
        throw std::invalid_argument("PolarPoint: phi must lie in [0, 2*pi)");
}

CartesianPoint to_cartesian(const PolarPoint& p) {
    const int n = p.dimension;
    if (n == 1)
        return {p.r};

    // Suffix products S_i = sin(theta_i) ... sin(theta_{n-2}) over the
    // conventional indices i = 1..n-2; theta_i is stored at n-2-i.
    // suffix[i-1] holds S_i, with the empty product S_{n-1} = 1.
    std::vector<double> suffix(static_cast<size_t>(n), 1.0);
    for (int i = n - 2; i >= 1; --i)
        suffix[i - 1] = std::sin(p.thetas[n - 2 - i]) * suffix[i];

    CartesianPoint x(static_cast<size_t>(n));
    x[0] = p.r * std::cos(p.phi) * suffix[0];
    x[1] = p.r * std::sin(p.phi) * suffix[0];
    for (int i = 3; i <= n; ++i)
        x[i - 1] = p.r * std::cos(p.thetas[n - i]) * suffix[i - 2];
    return x;
}

std::vector<double> analytic_metric_diagonal(const PolarPoint& p) {
    const int n = p.dimension;
    std::vector<double> diag(static_cast<size_t>(n));
    diag[0] = 1.0;
    double entry = p.r * p.r;
    for (int j = 1; j < n; ++j) {
        if (j >= 2) {
            const double s = std::sin(p.thetas[j - 2]);
            entry *= s * s;
        }
        diag[j] = entry;
    }
    return diag;
}

double metric_determinant(const PolarPoint& p) {
    double det = 1.0;
    for (double g : analytic_metric_diagonal(p))
        det *= g;
    return det;
}

namespace {

CartesianPoint map_at(const PolarPoint& p, const std::vector<double>& u) {
    // phi is periodic: wrap stencil points that stepped outside [0, 2*pi).
    double phi = p.dimension >= 2 ? u.back() : 0.0;
    phi = std::fmod(phi, 2.0 * M_PI);
    if (phi < 0.0)
        phi += 2.0 * M_PI;
    if (phi >= 2.0 * M_PI)  // fmod of a tiny negative can round back up
        phi = 0.0;
    PolarPoint q(p.dimension, u[0],
                 std::vector<double>(u.begin() + 1, u.end() - (p.dimension >= 2 ? 1 : 0)),
                 phi);
    return to_cartesian(q);
}

Matrix jacobian_once(const PolarPoint& p, const std::vector<double>& u, double h) {
    const int n = p.dimension;
    Matrix jac(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
    for (int j = 0; j < n; ++j) {
        std::vector<double> up = u;
        std::vector<double> um = u;
        up[j] += h;
        um[j] -= h;
        const CartesianPoint xp = map_at(p, up);
        const CartesianPoint xm = map_at(p, um);
        for (int k = 0; k < n; ++k)
            jac[k][j] = (xp[k] - xm[k]) / (2.0 * h);
    }
    return jac;
}

}  // namespace

Matrix jacobian_fd(const PolarPoint& p, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("jacobian_fd: step must be positive");
    for (double t : p.thetas) {
        if (t < kDegeneracyMargin || t > M_PI - kDegeneracyMargin)
            throw std::domain_error("jacobian_fd: theta too close to the sin(theta) = 0 "
                                    "degeneracy");
    }
    if (p.r <= 2.0 * h)
        throw std::domain_error("jacobian_fd: point too close to r = 0");

    std::vector<double> u;
    u.reserve(static_cast<size_t>(p.dimension));
    u.push_back(p.r);
    u.insert(u.end(), p.thetas.begin(), p.thetas.end());
    if (p.dimension >= 2)
        u.push_back(p.phi);

    const Matrix coarse = jacobian_once(p, u, h);
    const Matrix fine = jacobian_once(p, u, h / 2.0);
    Matrix out = fine;
    for (size_t k = 0; k < out.size(); ++k)
        for (size_t j = 0; j < out.size(); ++j)
            out[k][j] = (4.0 * fine[k][j] - coarse[k][j]) / 3.0;
    return out;
}

Matrix gram_matrix(const Matrix& jacobian) {
    const size_t n = jacobian.size();
    Matrix gram(n, std::vector<double>(n, 0.0));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            double sum = 0.0;
            for (size_t k = 0; k < n; ++k)
                sum += jacobian[k][a] * jacobian[k][b];
            gram[a][b] = sum;
        }
    return gram;
}

double determinant(Matrix m) {
    const size_t n = m.size();
    double det = 1.0;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t row = col + 1; row < n; ++row)
            if (std::abs(m[row][col]) > std::abs(m[pivot][col]))
                pivot = row;
        if (m[pivot][col] == 0.0)
            return 0.0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            const double factor = m[row][col] / m[col][col];
            for (size_t k = col; k < n; ++k)
                m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

PolarPoint sample_interior_point(int dimension, Rng& rng) {
    const double r = rng.uniform(0.5, 5.0);
    std::vector<double> thetas;
    for (int i = 0; i < dimension - 2; ++i)
        thetas.push_back(rng.uniform(0.3, M_PI - 0.3));
    const double phi = dimension >= 2 ? rng.uniform(0.0, 2.0 * M_PI) : 0.0;
    return PolarPoint(dimension, r, std::move(thetas), phi);
}

}  // namespace radialop::geom
