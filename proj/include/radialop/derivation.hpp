#pragma once

// The derivation chain: radial Laplacian, symmetric-form radial momentum,
// its square, and the gap between the two Hamiltonian expressions.
//
// Everything is built from the algebra primitives -- the Laplacian by
// conjugating d with the volume weight exponent, the momentum square by
// composition -- never from hardcoded expanded forms, so structural equality
// against the expected coefficients is a genuine derivation check.

#include "radialop/dim_poly.hpp"
#include "radialop/prefactor.hpp"
#include "radialop/radial_operator.hpp"
#include "radialop/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radialop {

// (Delta)_r = d^2 + (n-1)/r d, derived as conjugate_by_r_power(d, n-1) * d,
// i.e. the normal form of (1/r^(n-1)) d (r^(n-1) d .).
RadialOperator build_radial_laplacian();

// D_r = d + (n-1)/2 r^-1, the reduced radial momentum; the physical operator
// is P_r = (-i*hbar) * D_r with the prefactor carried separately.
RadialOperator build_reduced_momentum();

// D_r^2 = op-composition of D_r with itself (never the expanded form).
RadialOperator build_momentum_squared();

// The displayed intermediate line of the square:
//   d^2 + 2*((n-1)/2r) d + [d, (n-1)/2r] + ((n-1)/2r)^2
struct MomentumSquaredDecomposition {
    RadialOperator second_derivative;
    RadialOperator double_cross_term;
    RadialOperator commutator_term;
    RadialOperator square_term;

    RadialOperator total() const {
        return second_derivative + double_cross_term + commutator_term + square_term;
    }
};

MomentumSquaredDecomposition build_momentum_squared_decomposition();

// (Delta)_r - D_r^2 = -(n-1)(n-3)/4 r^-2, a pure multiplication operator.
// With the Hamiltonian prefactor -hbar^2/(2m) this renders as the correction
// +hbar^2 (n-1)(n-3)/(8 m r^2) that has to be added to P_r^2/2m + L^2/2mr^2.
RadialOperator compute_discrepancy();

// (n-1)(n-3)/4, the coefficient of r^-2 in D_r^2 (minus the discrepancy sign).
DimPoly correction_coefficient();

struct DerivationReport {
    std::optional<Rational> dimension;  // nullopt = symbolic n

    RadialOperator radial_laplacian;
    RadialOperator reduced_momentum;
    RadialOperator momentum_squared;
    MomentumSquaredDecomposition momentum_squared_steps;
    RadialOperator discrepancy;         // radial_laplacian - momentum_squared
    DimPoly correction_coefficient;     // (n-1)(n-3)/4 (specialized when concrete)

    Prefactor hamiltonian_prefactor;    // -hbar^2/(2*m)
    Prefactor momentum_prefactor;       // -i*hbar
    Prefactor correction_prefactor;     // hbar^2/(2*m): pairs with the coefficient above

    bool momentum_adjoint_skew = false;       // adjoint(D_r) == -D_r
    bool laplacian_self_adjoint = false;      // adjoint((Delta)_r) == (Delta)_r
    bool discrepancy_vanishes = false;

    std::string angular_term;           // opaque marker, never manipulated
    std::vector<std::string> notes;
};

// Runs the whole chain, symbolically or at a concrete dimension.
// A concrete dimension must be a positive integer; anything else throws
// std::invalid_argument.
DerivationReport run_derivation(const std::optional<Rational>& dimension);

}  // namespace radialop
