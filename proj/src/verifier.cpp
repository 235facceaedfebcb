#include "radialop/verifier.hpp"

#include "radialop/derivation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace radialop::num {

namespace {

double norm(const geom::CartesianPoint& x) {
    double s = 0.0;
    for (double c : x)
        s += c * c;
    return std::sqrt(s);
}

void check_support(const RadialTestFunction& f, double r, double margin) {
    if (r - margin < f.support_lo || r + margin > f.support_hi)
        throw std::domain_error("point outside the support of " + f.name);
}

// Relative error with a unit floor: the reference values are O(1) and cross
// zero inside the sampling range (e.g. the Gaussian Laplacian at r = sqrt(n)),
// where a bare ratio would be meaningless.
double rel_error(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

struct ErrorTally {
    double max_abs = 0.0;
    double max_rel = 0.0;

    void add(double got, double want) {
        max_abs = std::max(max_abs, std::abs(got - want));
        max_rel = std::max(max_rel, rel_error(got, want));
    }
};

VerificationRecord make_record(std::string name, int dimension, int samples,
                               const ErrorTally& tally, double tolerance, bool rel) {
    VerificationRecord rec;
    rec.check_name = std::move(name);
    rec.dimension = dimension;
    rec.sample_count = samples;
    rec.max_abs_error = tally.max_abs;
    rec.max_rel_error = tally.max_rel;
    rec.tolerance = tolerance;
    rec.pass = (rel ? tally.max_rel : tally.max_abs) <= tolerance;
    return rec;
}

}  // namespace

double fd_cartesian_laplacian(const RadialTestFunction& f, const geom::CartesianPoint& x,
                              double h) {
    const double r0 = norm(x);
    check_support(f, r0, 2.0 * h);

    auto laplacian_at_step = [&](double step) {
        const double f0 = f.value(r0);
        double sum = 0.0;
        geom::CartesianPoint y = x;
        for (size_t i = 0; i < x.size(); ++i) {
            y[i] = x[i] + step;
            const double fp = f.value(norm(y));
            y[i] = x[i] - step;
            const double fm = f.value(norm(y));
            y[i] = x[i];
            sum += fp - 2.0 * f0 + fm;
        }
        return sum / (step * step);
    };

    const double coarse = laplacian_at_step(h);
    const double fine = laplacian_at_step(h / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

double fd_divergence_rhat(const geom::CartesianPoint& x, double h) {
    const double r0 = norm(x);
    if (r0 <= h)
        throw std::domain_error("fd_divergence_rhat: point too close to the origin");

    double sum = 0.0;
    geom::CartesianPoint y = x;
    for (size_t i = 0; i < x.size(); ++i) {
        y[i] = x[i] + h;
        const double vp = y[i] / norm(y);
        y[i] = x[i] - h;
        const double vm = y[i] / norm(y);
        y[i] = x[i];
        sum += (vp - vm) / (2.0 * h);
    }
    return sum;
}

double fd_radial_directional_derivative(const RadialTestFunction& f,
                                        const geom::CartesianPoint& x, double h) {
    const double r0 = norm(x);
    check_support(f, r0, 2.0 * h);

    double sum = 0.0;
    geom::CartesianPoint y = x;
    for (size_t i = 0; i < x.size(); ++i) {
        y[i] = x[i] + h;
        const double fp = f.value(norm(y));
        y[i] = x[i] - h;
        const double fm = f.value(norm(y));
        y[i] = x[i];
        sum += (x[i] / r0) * (fp - fm) / (2.0 * h);
    }
    return sum;
}

double apply_to_function(const RadialOperator& op, const RadialTestFunction& f, double r) {
    if (op.order() > 2)
        throw std::invalid_argument("apply_to_function: derivative order > 2 unsupported");
    double sum = 0.0;
    for (const auto& [k, c] : op.terms()) {
        const double fk = k == 0 ? f.value(r) : (k == 1 ? f.d1(r) : f.d2(r));
        sum += c.evaluate(r) * fk;
    }
    return sum;
}

VerificationRecord verify_operator_action(const RadialOperator& op, int dimension,
                                          const RadialTestFunction& f,
                                          const std::vector<double>& radii,
                                          double tolerance, std::uint64_t seed) {
    if (op.order() > 2)
        throw std::invalid_argument("verify_operator_action: derivative order > 2 unsupported");

    Rng rng(seed);
    ErrorTally tally;
    for (double r : radii) {
        geom::CartesianPoint x = rng.unit_vector(dimension);
        for (double& c : x)
            c *= r;
        const double symbolic = apply_to_function(op, f, r);
        const double numeric = fd_cartesian_laplacian(f, x);
        tally.add(numeric, symbolic);
    }
    return make_record("operator_action[" + f.name + "]", dimension,
                       static_cast<int>(radii.size()), tally, tolerance, /*rel=*/true);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tolerance) {
    struct Recurse {
        const std::function<double(double)>& f;

        double step(double lo, double hi, double flo, double fmid, double fhi,
                    double whole, double tol, int depth) const {
            const double mid = 0.5 * (lo + hi);
            const double lmid = 0.5 * (lo + mid);
            const double rmid = 0.5 * (mid + hi);
            const double flmid = f(lmid);
            const double frmid = f(rmid);
            const double left = (mid - lo) / 6.0 * (flo + 4.0 * flmid + fmid);
            const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frmid + fhi);
            const double split = left + right;
            if (depth <= 0 || std::abs(split - whole) <= 15.0 * tol)
                return split + (split - whole) / 15.0;
            return step(lo, mid, flo, flmid, fmid, left, tol / 2.0, depth - 1)
                + step(mid, hi, fmid, frmid, fhi, right, tol / 2.0, depth - 1);
        }
    };

    // Seed the recursion with a fixed panel split; bump-like integrands are
    // so flat near the edges that a single whole-interval estimate can fool
    // the refinement criterion.
    constexpr int kPanels = 16;
    const double width = (b - a) / kPanels;
    double total = 0.0;
    Recurse rec{f};
    for (int i = 0; i < kPanels; ++i) {
        const double lo = a + i * width;
        const double hi = lo + width;
        const double mid = 0.5 * (lo + hi);
        const double flo = f(lo);
        const double fmid = f(mid);
        const double fhi = f(hi);
        const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += rec.step(lo, hi, flo, fmid, fhi, whole, tolerance / kPanels, 40);
    }
    return total;
}

VerificationRecord quadrature_adjoint_check(const RadialOperator& symbolic_op,
                                            const std::string& op_name, int dimension,
                                            const RadialTestFunction& f,
                                            const RadialTestFunction& g,
                                            double tolerance) {
    const double lo = std::max(f.support_lo, g.support_lo);
    const double hi = std::min(f.support_hi, g.support_hi);
    if (!(lo < hi))
        throw std::invalid_argument("quadrature_adjoint_check: disjoint supports");
    for (double edge : {lo, hi}) {
        const double boundary = std::abs(f.value(edge) * g.value(edge))
            + std::abs(f.d1(edge) * g.value(edge)) + std::abs(f.value(edge) * g.d1(edge));
        if (boundary > 1e-12)
            throw std::invalid_argument(
                "quadrature_adjoint_check: non-vanishing boundary values");
    }

    const RadialOperator op = substitute_n(symbolic_op, Rational(dimension));
    const RadialOperator adj = substitute_n(formal_adjoint(symbolic_op), Rational(dimension));

    auto weight = [dimension](double r) { return std::pow(r, dimension - 1); };
    const double lhs = adaptive_simpson(
        [&](double r) { return apply_to_function(op, f, r) * g.value(r) * weight(r); }, lo, hi);
    const double rhs = adaptive_simpson(
        [&](double r) { return f.value(r) * apply_to_function(adj, g, r) * weight(r); }, lo, hi);

    ErrorTally tally;
    tally.max_abs = std::abs(lhs - rhs);
    tally.max_rel = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return make_record("adjoint[" + op_name + "]", dimension, 1, tally, tolerance,
                       /*rel=*/false);
}

// ---- suites -------------------------------------------------------------

namespace {

constexpr double kSampleLo = 0.5;
constexpr double kSampleHi = 3.0;
constexpr int kRadialSamples = 60;
constexpr int kDivergenceSamples = 120;
constexpr int kMetricSamples = 100;

// Keep the FD stencils strictly inside the support of f.
std::vector<double> sample_radii(const RadialTestFunction& f, int count, Rng& rng) {
    const double lo = std::max(kSampleLo, f.support_lo + 0.01);
    const double hi = std::min(kSampleHi, f.support_hi - 0.01);
    std::vector<double> radii(count);
    for (double& r : radii)
        r = rng.uniform(lo, hi);
    return radii;
}

double pick_tolerance(const SuiteConfig& config, double fallback) {
    return config.tolerance_override.value_or(fallback);
}

}  // namespace

std::vector<VerificationRecord> run_laplacian_suite(const SuiteConfig& config) {
    std::vector<VerificationRecord> records;
    const double tol = pick_tolerance(config, 1e-6);
    for (int n = config.n_min; n <= config.n_max; ++n) {
        const RadialOperator laplacian = substitute_n(build_radial_laplacian(), Rational(n));
        const RadialOperator momentum_sq = substitute_n(build_momentum_squared(), Rational(n));
        const RadialOperator gap = substitute_n(compute_discrepancy(), Rational(n));
        int f_index = 0;
        for (const auto& f : standard_suite()) {
            const std::uint64_t sub = Rng::mix(config.seed, (n << 8) | f_index++);
            Rng rng(Rng::mix(sub, 1));
            const auto radii = sample_radii(f, kRadialSamples, rng);

            VerificationRecord lap =
                verify_operator_action(laplacian, n, f, radii, tol, Rng::mix(sub, 2));
            lap.check_name = "laplacian_fd_vs_symbolic[" + f.name + "]";
            records.push_back(lap);

            // D_r^2 differs from (Delta)_r by the discrepancy operator:
            // (FD Laplacian) - (D_r^2 f) must equal (gap f) pointwise.
            Rng dir_rng(Rng::mix(sub, 3));
            ErrorTally tally;
            for (double r : radii) {
                geom::CartesianPoint x = dir_rng.unit_vector(n);
                for (double& c : x)
                    c *= r;
                const double fd_lap = fd_cartesian_laplacian(f, x);
                const double momentum_action = apply_to_function(momentum_sq, f, r);
                const double predicted_gap = apply_to_function(gap, f, r);
                tally.add(fd_lap - momentum_action, predicted_gap);
            }
            records.push_back(make_record(
                "momentum_sq_gap_matches_correction[" + f.name + "]", n,
                static_cast<int>(radii.size()), tally, tol, /*rel=*/true));
        }
    }
    return records;
}

std::vector<VerificationRecord> run_divergence_suite(const SuiteConfig& config) {
    std::vector<VerificationRecord> records;
    const double tol = pick_tolerance(config, 1e-6);
    for (int n = config.n_min; n <= config.n_max; ++n) {
        Rng rng(Rng::mix(config.seed, 0x64697600u + n));
        ErrorTally tally;
        for (int s = 0; s < kDivergenceSamples; ++s) {
            const double r = rng.uniform(kSampleLo, kSampleHi);
            geom::CartesianPoint x = rng.unit_vector(n);
            for (double& c : x)
                c *= r;
            tally.add(fd_divergence_rhat(x), (n - 1) / r);
        }
        records.push_back(make_record("divergence_rhat", n, kDivergenceSamples, tally, tol,
                                      /*rel=*/false));
    }
    return records;
}

std::vector<VerificationRecord> run_directional_suite(const SuiteConfig& config) {
    std::vector<VerificationRecord> records;
    const double tol = pick_tolerance(config, 1e-6);
    for (int n = config.n_min; n <= config.n_max; ++n) {
        int f_index = 0;
        for (const auto& f : standard_suite()) {
            Rng rng(Rng::mix(config.seed, 0x64697200u + (n << 8) + f_index++));
            const auto radii = sample_radii(f, kRadialSamples, rng);
            ErrorTally tally;
            for (double r : radii) {
                geom::CartesianPoint x = rng.unit_vector(n);
                for (double& c : x)
                    c *= r;
                tally.add(fd_radial_directional_derivative(f, x), f.d1(r));
            }
            records.push_back(make_record("radial_directional_derivative[" + f.name + "]",
                                          n, kRadialSamples, tally, tol, /*rel=*/true));
        }
    }
    return records;
}

std::vector<VerificationRecord> run_adjoint_suite(const SuiteConfig& config) {
    std::vector<VerificationRecord> records;
    const double tol = pick_tolerance(config, 1e-8);
    const auto f = bump(1.0, 3.0);
    const auto g = bump(1.25, 2.75);
    const RadialOperator momentum = build_reduced_momentum();
    const RadialOperator laplacian = build_radial_laplacian();
    const RadialOperator mult_r =
        RadialOperator::multiplication(RadialCoeff::monomial(DimPoly(1), 1));
    for (int n = config.n_min; n <= config.n_max; ++n) {
        records.push_back(quadrature_adjoint_check(momentum, "D_r", n, f, g, tol));
        records.push_back(quadrature_adjoint_check(laplacian, "(Delta)_r", n, f, g, tol));
        records.push_back(quadrature_adjoint_check(mult_r, "r", n, f, g, tol));
    }
    return records;
}

std::vector<VerificationRecord> run_metric_suite(const SuiteConfig& config) {
    std::vector<VerificationRecord> records;
    const double diag_tol = pick_tolerance(config, 1e-6);
    const double offdiag_tol = pick_tolerance(config, 1e-6);
    const double det_tol = pick_tolerance(config, 1e-5);
    for (int n = config.n_min; n <= config.n_max; ++n) {
        Rng rng(Rng::mix(config.seed, 0x6d657400u + n));
        ErrorTally diag_tally, offdiag_tally, det_tally;
        for (int s = 0; s < kMetricSamples; ++s) {
            const geom::PolarPoint p = geom::sample_interior_point(n, rng);
            const geom::Matrix gram = geom::gram_matrix(geom::jacobian_fd(p));
            const auto diag = geom::analytic_metric_diagonal(p);

            for (int a = 0; a < n; ++a) {
                // Mixed abs/rel for the diagonal (entries range up to r^2).
                diag_tally.add(gram[a][a], diag[a]);
                for (int b = 0; b < n; ++b)
                    if (a != b)
                        offdiag_tally.add(gram[a][b], 0.0);
            }

            const double det_fd = geom::determinant(gram);
            const double det_want = geom::metric_determinant(p);
            det_tally.max_abs = std::max(det_tally.max_abs, std::abs(det_fd - det_want));
            det_tally.max_rel = std::max(det_tally.max_rel,
                                         std::abs(det_fd - det_want) / std::abs(det_want));
        }
        records.push_back(make_record("metric_jacobian_diagonal", n, kMetricSamples,
                                      diag_tally, diag_tol, /*rel=*/true));
        records.push_back(make_record("metric_jacobian_offdiagonal", n, kMetricSamples,
                                      offdiag_tally, offdiag_tol, /*rel=*/false));
        records.push_back(make_record("metric_determinant", n, kMetricSamples, det_tally,
                                      det_tol, /*rel=*/true));
    }
    return records;
}

std::vector<VerificationRecord> run_all_suites(const SuiteConfig& config) {
    std::vector<VerificationRecord> records;
    for (auto* runner : {&run_laplacian_suite, &run_divergence_suite, &run_directional_suite,
                         &run_adjoint_suite, &run_metric_suite}) {
        auto part = (*runner)(config);
        records.insert(records.end(), part.begin(), part.end());
    }
    return records;
}

}  // namespace radialop::num
