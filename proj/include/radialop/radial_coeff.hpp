#pragma once

// Laurent polynomial in the radial coordinate r (integer exponents, possibly
// negative) with DimPoly coefficients. The operator algebra only ever
// produces integer powers of r; the volume weight r^(n-1) enters through the
// conjugation and adjoint generator rules, never as a stored symbolic power.

#include "radialop/dim_poly.hpp"
#include "radialop/rational.hpp"

#include <map>

namespace radialop {

class RadialCoeff {
public:
    RadialCoeff() = default;                  // zero
    explicit RadialCoeff(DimPoly constant);   // constant in r (exponent 0)
    explicit RadialCoeff(Rational constant) : RadialCoeff(DimPoly(std::move(constant))) {}

    static RadialCoeff one() { return RadialCoeff(DimPoly(1)); }
    static RadialCoeff monomial(DimPoly coeff, int exponent);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, DimPoly>& terms() const { return terms_; }
    DimPoly coeff(int exponent) const;        // zero polynomial if absent
    int min_exponent() const;                 // requires nonzero
    int max_exponent() const;                 // requires nonzero

    RadialCoeff operator-() const;
    RadialCoeff& operator+=(const RadialCoeff& o);
    RadialCoeff& operator-=(const RadialCoeff& o);
    RadialCoeff& operator*=(const RadialCoeff& o);
    RadialCoeff& operator*=(const DimPoly& p);
    RadialCoeff& operator*=(const Rational& q);

    friend RadialCoeff operator+(RadialCoeff a, const RadialCoeff& b) { return a += b; }
    friend RadialCoeff operator-(RadialCoeff a, const RadialCoeff& b) { return a -= b; }
    friend RadialCoeff operator*(RadialCoeff a, const RadialCoeff& b) { return a *= b; }
    friend RadialCoeff operator*(RadialCoeff a, const DimPoly& p) { return a *= p; }
    friend RadialCoeff operator*(const DimPoly& p, RadialCoeff a) { return a *= p; }
    friend RadialCoeff operator*(RadialCoeff a, const Rational& q) { return a *= q; }
    friend RadialCoeff operator*(const Rational& q, RadialCoeff a) { return a *= q; }

    friend bool operator==(const RadialCoeff& a, const RadialCoeff& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const RadialCoeff& a, const RadialCoeff& b) { return !(a == b); }

    // d/dr, term by term: c r^e -> e c r^(e-1); the e = 0 term vanishes.
    RadialCoeff derivative() const;

    // Evaluate every DimPoly coefficient at n0.
    RadialCoeff substitute_n(const Rational& n0) const;

    // Numeric evaluation at radius r; requires all coefficients constant in n
    // (i.e. substitute_n first), throws std::domain_error otherwise.
    double evaluate(double r) const;

private:
    void set(int exponent, DimPoly value);

    std::map<int, DimPoly> terms_;  // exponent of r -> nonzero DimPoly
};

}  // namespace radialop
