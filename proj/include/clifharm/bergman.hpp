//==============================================================================
// bergman.hpp
// Bergman-space machinery on the upper half-space: synthesis of a field from
// a frequency-side density G via F(x) = sum_xi e+(x, xi) G(xi) / prod(L_k),
// the A^p slab norm  ( int_0^inf int |F|^p dx dx0 )^{1/p},  and the weighted
// spectral q-norm that it dominates:
//   ( sum_xi |chi_+(xi) G(xi)|^q / (2 pi p |xi|)^{q/p} / prod(L_k) )^{1/q},
// with the sup form  sup_xi |chi_+(xi)G(xi)| / (2 pi |xi|)  at p = 1.
//==============================================================================
#pragma once

#include <vector>

#include "clifharm/extension.hpp"
#include "clifharm/grid.hpp"
#include "clifharm/spectral.hpp"

namespace clifharm {

// A density is a Multivector per lattice frequency; same layout as a spectrum.
using BergmanDensity = SpectralField;

// Pointwise synthesis at one interior point (x0 > 0): the literal lattice sum.
Multivector bergman_from_density(const BergmanDensity& G, const Paravector& x);

// Whole-slice synthesis at each height via the multiplier form
// e^{-2 pi x0 |xi|} chi_+(xi) G(xi) followed by the inverse transform;
// agrees with pointwise synthesis to roundoff.
SlabField bergman_slab(const BergmanDensity& G, const std::vector<double>& x0s);

struct BergmanNormResult {
  double value = 0.0;       // quadrature of the stored slab, p-th root taken
  double tail_bound = 0.0;  // bound on the p-power mass beyond the last slice
};

// A^p norm of a slab: Riemann sums horizontally, trapezoid in x0 across the
// stored heights, plus a linear-extrapolation head correction on
// [0, x0_min]. xi_min > 0 (smallest frequency present in the data) yields
// tail_bound = I(x0_max) / (2 pi p xi_min) where I is the slice integral of
// |F|^p; with xi_min = 0 the bound is reported as +infinity unless the last
// slice vanishes.
BergmanNormResult bergman_norm(const SlabField& s, double p, double xi_min = 0.0);

// Weighted spectral norm of the density (left-hand side of the norm
// inequality). p must be 1 exactly (sup form) or lie in (1, 2]; G must vanish
// at DC, where the weight is singular.
double weighted_spectral_norm(const BergmanDensity& G, double p);

}  // namespace clifharm
