#pragma once

// Multiplicative physical bookkeeping: i^a hbar^b m^c q with q rational.
// Kept outside RadialOperator so the operator algebra stays real and
// commutative; the factor -i*hbar of the radial momentum and -hbar^2/(2m)
// of the Hamiltonian are attached at the reporting layer only.
//
// Canonical form: the sign of q is folded into i^2 = -1, so scalar >= 0 and
// i_power is reduced mod 4. Equality is then structural.

#include "radialop/rational.hpp"

#include <string>

namespace radialop {

class Prefactor {
public:
    Prefactor() : i_power_(0), hbar_power_(0), mass_power_(0), scalar_(1) {}
    Prefactor(int i_power, int hbar_power, int mass_power, Rational scalar);

    static Prefactor one() { return Prefactor(); }
    static Prefactor minus_i_hbar() { return Prefactor(3, 1, 0, Rational(1)); }
    // -hbar^2/(2m), the free-particle Hamiltonian factor.
    static Prefactor hamiltonian() { return Prefactor(2, 2, -1, Rational(1, 2)); }

    int i_power() const { return i_power_; }
    int hbar_power() const { return hbar_power_; }
    int mass_power() const { return mass_power_; }
    const Rational& scalar() const { return scalar_; }

    bool is_zero() const { return scalar_.is_zero(); }
    bool is_real() const { return i_power_ % 2 == 0; }

    Prefactor conjugated() const;  // i -> -i

    friend Prefactor operator*(const Prefactor& a, const Prefactor& b);
    friend Prefactor operator*(const Prefactor& a, const Rational& q);

    friend bool operator==(const Prefactor& a, const Prefactor& b) {
        return a.i_power_ == b.i_power_ && a.hbar_power_ == b.hbar_power_
            && a.mass_power_ == b.mass_power_ && a.scalar_ == b.scalar_;
    }
    friend bool operator!=(const Prefactor& a, const Prefactor& b) { return !(a == b); }

    // e.g. "-i*hbar", "-hbar^2/(2*m)", "hbar^2/(8*m)".
    std::string str() const;

private:
    int i_power_;      // 0..3
    int hbar_power_;
    int mass_power_;
    Rational scalar_;  // >= 0 in canonical form
};

}  // namespace radialop
