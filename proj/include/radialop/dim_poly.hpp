#pragma once

// Polynomial in the symbolic space dimension n over Rational, stored sparse.
// This is the coefficient ring Q[n]: every coefficient that shows up in the
// radial operator algebra ((n-1)/2, (n-1)(n-3)/4, ...) is polynomial in n,
// so no rational functions of n are ever needed.

#include "radialop/rational.hpp"

#include <map>
#include <set>

namespace radialop {

class DimPoly {
public:
    DimPoly() = default;                     // zero polynomial (empty map)
    explicit DimPoly(Rational constant);
    DimPoly(long long constant) : DimPoly(Rational(constant)) {}

    static DimPoly variable();               // the symbol n
    static DimPoly monomial(Rational coeff, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    int degree() const;                      // -1 for the zero polynomial
    Rational coeff(int degree) const;        // 0 if absent
    Rational leading_coeff() const;          // 0 for the zero polynomial
    const std::map<int, Rational>& terms() const { return coeffs_; }

    DimPoly operator-() const;
    DimPoly& operator+=(const DimPoly& o);
    DimPoly& operator-=(const DimPoly& o);
    DimPoly& operator*=(const DimPoly& o);
    DimPoly& operator*=(const Rational& q);

    friend DimPoly operator+(DimPoly a, const DimPoly& b) { return a += b; }
    friend DimPoly operator-(DimPoly a, const DimPoly& b) { return a -= b; }
    friend DimPoly operator*(DimPoly a, const DimPoly& b) { return a *= b; }
    friend DimPoly operator*(DimPoly a, const Rational& q) { return a *= q; }
    friend DimPoly operator*(const Rational& q, DimPoly a) { return a *= q; }

    friend bool operator==(const DimPoly& a, const DimPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const DimPoly& a, const DimPoly& b) { return !(a == b); }

    Rational eval_at(const Rational& n0) const;

    // Exact integer roots, found by rational-root search over the divisors of
    // the trailing coefficient (after clearing denominators and stripping any
    // power of n). Constant polynomials have no enumerable roots and yield {}.
    std::set<BigInt> roots_over_integers() const;

private:
    void set(int degree, Rational value);

    std::map<int, Rational> coeffs_;  // degree -> nonzero coefficient
};

}  // namespace radialop
