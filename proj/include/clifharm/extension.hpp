//==============================================================================
// extension.hpp
// Extension of boundary data on R^n into the upper half-space x0 > 0 by three
// routes, plus diagnostics that measure how monogenic / harmonic the extended
// field actually is.
//   poisson_extend  : scalar multiplier e^{-2 pi x0 |xi|} (componentwise).
//   spectral_extend : multiplier e^{-2 pi x0 |xi|} chi_+(xi), i.e. the Hardy
//                     part extended; equals poisson o hardy_project(+).
//   cauchy_extend   : direct quadrature of the Cauchy integral over one
//                     periodic fundamental cell, E(x-y) f(y) in kernel-times-
//                     sample order. O(N^2); desk-scale grids only.
//   dirac_residual  : centered-difference residual of D F = sum_k e_k d_k F.
//   mean_value_defect : |ball average - center value| via a degree-3 product
//                     quadrature on the ball and multilinear interpolation.
//==============================================================================
#pragma once

#include <vector>

#include "clifharm/grid.hpp"
#include "clifharm/spectral.hpp"

namespace clifharm {

// Normalization constant sigma_n = pi^{(n+1)/2} / Gamma((n+1)/2) -- half the
// surface area of the unit n-sphere in R^{n+1} (sigma_1 = pi, sigma_2 = 2 pi).
double sigma_n(int n);

// Cauchy kernel E(x) = conj(x) / (2 sigma_n |x|^{n+1}) for a paravector x != 0.
Multivector cauchy_kernel(const Paravector& x, int n);

GridField poisson_extend(const GridField& f, double x0);
GridField spectral_extend(const GridField& f, double x0);
GridField cauchy_extend(const GridField& f, double x0);

enum class ExtendMethod { poisson, spectral, cauchy };

// Stack of extensions of the same boundary data at the given heights.
SlabField build_slab(const GridField& f, const std::vector<double>& x0s,
                     ExtendMethod method);

// max over interior slices and points of || sum_{k=0}^n e_k d_k F || with
// centered differences (e_0 = 1; left multiplication).
double dirac_residual(const SlabField& s);

// Value of the slab at an arbitrary point: linear interpolation between the
// bracketing x0 slices, multilinear (periodic) interpolation horizontally.
Multivector slab_value_at(const SlabField& s, const Paravector& x);

// || ball average - center value ||. The ball of the given radius about the
// center must lie inside the slab's x0 range; radius must be at least two
// horizontal grid spacings. The ball average uses a two-point radial Gauss
// rule for the weight r^n times an axis-point surface rule, exact for
// polynomials of degree <= 3 in n+1 variables.
double mean_value_defect(const SlabField& s, const Paravector& center, double radius);

}  // namespace clifharm
