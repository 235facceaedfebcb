#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radialop/radial_operator.hpp"
#include "radialop/render.hpp"

#include <stdexcept>

using namespace radialop;

namespace {

const DimPoly n = DimPoly::variable();

RadialCoeff r_pow(int e) { return RadialCoeff::monomial(DimPoly(1), e); }

RadialCoeff coeff(DimPoly p, int e) { return RadialCoeff::monomial(std::move(p), e); }

// (n-1)/2 * r^-1
RadialCoeff half_weight() { return coeff((n - DimPoly(1)) * Rational(1, 2), -1); }

RadialOperator mult(RadialCoeff c) { return RadialOperator::multiplication(std::move(c)); }

// Brute-force falling factorial: d^k r^m = m(m-1)...(m-k+1) r^(m-k).
RadialCoeff monomial_derivative_oracle(int k, int m) {
    Rational factor(1);
    for (int j = 0; j < k; ++j)
        factor *= Rational(m - j);
    return RadialCoeff::monomial(DimPoly(factor), m - k);
}

}  // namespace

TEST_CASE("canonical commutation: [d, r] = 1") {
    const RadialOperator d = RadialOperator::partial();
    CHECK(commutator(d, mult(r_pow(1))) == RadialOperator::one());

    // compose in both orders separately
    CHECK(d * mult(r_pow(1)) == mult(r_pow(1)) * d + RadialOperator::one());
}

TEST_CASE("left scale differs from composition with a multiplication operator") {
    const RadialOperator d = RadialOperator::partial();
    const RadialOperator scaled = r_pow(1) * d;          // r d
    const RadialOperator composed = d * mult(r_pow(1));  // r d + 1
    CHECK(scaled == RadialOperator::term(r_pow(1), 1));
    CHECK(composed == scaled + RadialOperator::one());
    CHECK(scaled != composed);

    // Leibniz oracle on monomials: (r d) r^m = m r^m, (d r.) r^m = (m+1) r^m.
    for (int m : {-3, -1, 0, 2, 5}) {
        const RadialCoeff p = r_pow(m);
        CHECK(scaled.apply(p) == Rational(m) * p);
        CHECK(composed.apply(p) == Rational(m + 1) * p);
    }
}

TEST_CASE("addition and negation") {
    const RadialOperator d = RadialOperator::partial();
    CHECK((d + d) == Rational(2) * d);
    CHECK((d - d).is_zero());

    RadialOperator a = mult(half_weight()) + RadialOperator::partial(2);
    CHECK((a + (-a)).is_zero());
    CHECK(a.order() == 2);
    CHECK(RadialOperator::zero().order() == -1);
}

TEST_CASE("the momentum commutator identity: [d, (n-1)/2r] = -(n-1)/2r^2") {
    const RadialOperator bracket =
        commutator(RadialOperator::partial(), mult(half_weight()));
    const RadialOperator expected =
        mult(coeff ((n - DimPoly(1)) * Rational(-1, 2), -2));
    CHECK(bracket == expected);
}

TEST_CASE("[d^2, r] = 2d") {
    const RadialOperator bracket =
        commutator(RadialOperator::partial(2), mult(r_pow(1)));
    CHECK(bracket == Rational(2) * RadialOperator::partial());

    // Leibniz oracle on monomials r^m.
    for (int m : {-2, 0, 1, 4}) {
        const RadialCoeff p = r_pow(m);
        const RadialCoeff lhs = RadialOperator::partial(2).apply(r_pow(1) * p);
        const RadialCoeff rhs =
            (r_pow(1) * RadialOperator::partial(2)).apply(p) + Rational(2) * p.derivative();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("momentum square: D_r o D_r = d^2 + (n-1)/r d + (n-1)(n-3)/4 r^-2") {
    const RadialOperator d_r = RadialOperator::partial() + mult(half_weight());
    const RadialOperator square = d_r * d_r;

    RadialOperator expected = RadialOperator::partial(2);
    expected += RadialOperator::term(coeff(n - DimPoly(1), -1), 1);
    expected += mult(coeff((n - DimPoly(1)) * (n - DimPoly(3)) * Rational(1, 4), -2));
    CHECK(square == expected);
}

TEST_CASE("operator application") {
    // d^2 r^5 = 20 r^3
    CHECK(RadialOperator::partial(2).apply(r_pow(5))
          == RadialCoeff::monomial(DimPoly(20), 3));

    // falling-factorial oracle across orders and exponents, negative included
    for (int k = 0; k <= 4; ++k)
        for (int m = -4; m <= 4; ++m)
            CHECK(RadialOperator::partial(k).apply(r_pow(m))
                  == monomial_derivative_oracle(k, m));

    // (Delta)_r r^2 = 2 + (n-1)/r * 2r = 2n
    const RadialOperator laplacian = RadialOperator::partial(2)
        + RadialOperator::term(coeff(n - DimPoly(1), -1), 1);
    CHECK(laplacian.apply(r_pow(2)) == RadialCoeff(n * Rational(2)));

    // anything applied to zero is zero
    CHECK(laplacian.apply(RadialCoeff()).is_zero());
    CHECK(RadialOperator::zero().apply(r_pow(3)).is_zero());
}

TEST_CASE("substitute_n specializes the dimension") {
    const RadialOperator d_r = RadialOperator::partial() + mult(half_weight());
    CHECK(substitute_n(d_r, Rational(3))
          == RadialOperator::partial() + mult(r_pow(-1)));
    CHECK(substitute_n(d_r, Rational(1)) == RadialOperator::partial());

    // the discrepancy coefficient (n-1)(n-3)/4 at n = 2 is -1/4
    const DimPoly gap = (n - DimPoly(1)) * (n - DimPoly(3)) * Rational(1, 4);
    CHECK(gap.eval_at(Rational(2)) == Rational(-1, 4));
}

TEST_CASE("conjugation by powers of r") {
    const RadialOperator d = RadialOperator::partial();

    // r^-(n-1) d r^(n-1) = d + (n-1)/r; composing with d gives (Delta)_r.
    const RadialOperator conj = conjugate_by_r_power(d, n - DimPoly(1));
    CHECK(conj == d + mult(coeff(n - DimPoly(1), -1)));

    // with weight (n-1)/2 the conjugate is exactly D_r
    CHECK(conjugate_by_r_power(d, (n - DimPoly(1)) * Rational(1, 2))
          == d + mult(half_weight()));

    // inverse conjugation restores the operator
    const RadialOperator a = RadialOperator::partial(2)
        + RadialOperator::term(coeff(n, -2), 1) + mult(r_pow(3));
    const DimPoly w = n * n - DimPoly(2);
    CHECK(conjugate_by_r_power(conjugate_by_r_power(a, w), -w) == a);
}

TEST_CASE("formal adjoint generator rules") {
    const RadialOperator d = RadialOperator::partial();
    const RadialOperator d_r = d + mult(half_weight());
    const RadialOperator laplacian = conjugate_by_r_power(d, n - DimPoly(1)) * d;

    CHECK(formal_adjoint(d) == -d - mult(coeff(n - DimPoly(1), -1)));
    CHECK(formal_adjoint(d_r) == -d_r);           // skew: P_r = -i hbar D_r symmetric
    CHECK(formal_adjoint(laplacian) == laplacian);
    CHECK(formal_adjoint(mult(r_pow(1))) == mult(r_pow(1)));
}

TEST_CASE("negative derivative order is rejected") {
    CHECK_THROWS_AS(RadialOperator::partial(-1), std::invalid_argument);
    CHECK_THROWS_AS(pow(RadialOperator::partial(), -2), std::invalid_argument);
}
