#pragma once

// Random algebra values for property tests: derivative order <= 4,
// r-exponents in [-4, 4], DimPoly degree <= 3, small rational entries.

#include "radialop/dim_poly.hpp"
#include "radialop/radial_coeff.hpp"
#include "radialop/radial_operator.hpp"
#include "radialop/rational.hpp"
#include "radialop/rng.hpp"

namespace radialop::testgen {

inline Rational random_rational(Rng& rng) {
    return Rational(rng.uniform_int(-6, 6), rng.uniform_int(1, 6));
}

inline Rational random_nonzero_rational(Rng& rng) {
    Rational q = random_rational(rng);
    return q.is_zero() ? Rational(1, 2) : q;
}

inline DimPoly random_dim_poly(Rng& rng, int max_degree = 3) {
    DimPoly p;
    const int terms = static_cast<int>(rng.uniform_int(1, 3));
    for (int i = 0; i < terms; ++i)
        p += DimPoly::monomial(random_rational(rng),
                               static_cast<int>(rng.uniform_int(0, max_degree)));
    return p;  // occasionally zero, via zero or cancelling coefficients
}

inline DimPoly random_nonzero_dim_poly(Rng& rng, int max_degree = 3) {
    DimPoly p = random_dim_poly(rng, max_degree);
    return p.is_zero() ? DimPoly(1) : p;
}

inline RadialCoeff random_radial_coeff(Rng& rng) {
    RadialCoeff c;
    const int terms = static_cast<int>(rng.uniform_int(1, 3));
    for (int i = 0; i < terms; ++i)
        c += RadialCoeff::monomial(random_dim_poly(rng),
                                   static_cast<int>(rng.uniform_int(-4, 4)));
    return c;
}

inline RadialCoeff random_nonzero_radial_coeff(Rng& rng) {
    RadialCoeff c = random_radial_coeff(rng);
    return c.is_zero() ? RadialCoeff::one() : c;
}

inline RadialOperator random_operator(Rng& rng, int max_order = 4) {
    RadialOperator op;
    const int terms = static_cast<int>(rng.uniform_int(1, 3));
    for (int i = 0; i < terms; ++i)
        op += RadialOperator::term(random_radial_coeff(rng),
                                   static_cast<int>(rng.uniform_int(0, max_order)));
    return op;
}

}  // namespace radialop::testgen
