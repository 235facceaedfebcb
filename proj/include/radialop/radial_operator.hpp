#pragma once

// Normal-ordered differential operators in the radial coordinate:
//
//     A = sum_k c_k(n, r) * d^k      (d = d/dr, c_k a RadialCoeff)
//
// with every coefficient written to the left of its derivative power. The
// normal form is unique: two operators agree as maps on smooth functions of
// r iff their term maps are identical, so structural equality is semantic
// equality. All constructors and operations canonicalize eagerly (zero
// coefficients are never stored).
//
// Composition follows the Leibniz rule,
//
//     (c d^k)(e d^l) = sum_{j=0..k} C(k,j) c e^(j) d^(k-j+l),
//
// with exact binomial coefficients.

#include "radialop/dim_poly.hpp"
#include "radialop/radial_coeff.hpp"
#include "radialop/rational.hpp"

#include <map>

namespace radialop {

class RadialOperator {
public:
    RadialOperator() = default;  // zero operator (empty term map)

    static RadialOperator zero() { return RadialOperator(); }
    static RadialOperator one();                         // multiplication by 1
    static RadialOperator partial(int order = 1);        // d^order
    static RadialOperator multiplication(RadialCoeff c); // f -> c*f
    static RadialOperator term(RadialCoeff c, int order);

    bool is_zero() const { return terms_.empty(); }
    int order() const;                                   // -1 for zero
    const std::map<int, RadialCoeff>& terms() const { return terms_; }
    RadialCoeff coeff(int order) const;                  // zero if absent

    RadialOperator operator-() const;
    RadialOperator& operator+=(const RadialOperator& o);
    RadialOperator& operator-=(const RadialOperator& o);

    friend RadialOperator operator+(RadialOperator a, const RadialOperator& b) { return a += b; }
    friend RadialOperator operator-(RadialOperator a, const RadialOperator& b) { return a -= b; }

    // Composition A*B: apply B first, then A. Noncommutative.
    friend RadialOperator operator*(const RadialOperator& a, const RadialOperator& b);

    // Left scale by a multiplication operator: c * (c_k d^k) = (c c_k) d^k.
    // Distinct from multiplication(c) * A only in never invoking Leibniz;
    // the results coincide.
    friend RadialOperator operator*(const RadialCoeff& c, RadialOperator a);
    friend RadialOperator operator*(const Rational& q, RadialOperator a);

    friend bool operator==(const RadialOperator& a, const RadialOperator& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const RadialOperator& a, const RadialOperator& b) { return !(a == b); }

    // Exact action on a Laurent polynomial in r (n stays symbolic), via
    // d^k r^m = m(m-1)...(m-k+1) r^(m-k).
    RadialCoeff apply(const RadialCoeff& p) const;

private:
    void add_term(int order, const RadialCoeff& c);

    std::map<int, RadialCoeff> terms_;  // derivative order -> nonzero coefficient
};

RadialOperator commutator(const RadialOperator& a, const RadialOperator& b);

RadialOperator pow(const RadialOperator& a, int k);  // k >= 0

// Specialize the symbolic dimension to a concrete value.
RadialOperator substitute_n(const RadialOperator& a, const Rational& n0);

// Similarity transform r^(-w) A r^w without symbolic powers of r: the
// generator map is d -> d + (w/r), multiplication operators are fixed.
RadialOperator conjugate_by_r_power(const RadialOperator& a, const DimPoly& w);

// Formal adjoint with respect to the volume weight r^(n-1), by the generator
// rules d+ = -d - (n-1)/r, (c.)+ = c., and (AB)+ = B+ A+; boundary terms are
// assumed to vanish (the numeric oracle uses compactly supported functions).
RadialOperator formal_adjoint(const RadialOperator& a);

}  // namespace radialop
