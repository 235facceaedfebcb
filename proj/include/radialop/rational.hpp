#pragma once

// Exact arbitrary-precision rational scalar: the base field of the
// coefficient ring. Always held in canonical form (positive denominator,
// gcd-reduced, zero as 0/1), so operator== is semantic equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace radialop {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);
    Rational(long long numerator, long long denominator)
        : Rational(BigInt(numerator), BigInt(denominator)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on o == 0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Exact integer power; k < 0 requires a nonzero base.
    Rational pow(long long k) const;

    double to_double() const;
    std::string str() const;  // "a" or "a/b"

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

Rational abs(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace radialop
