//==============================================================================
// transforms.hpp
// Riesz transforms, the Clifford Hilbert transformation, the Hardy projections
// (1 +- H)/2, a frequency-side pairing against negative-spectrum symbols, and
// residuals of the conjugate-harmonic (generalized Cauchy-Riemann) systems.
//
// All operators are Fourier multipliers acting by LEFT Clifford multiplication
// on the spectrum; the singular symbols (xi/|xi| forms) are set to 0 at the DC
// bin, and the Hardy projections split the DC coefficient half/half.
//==============================================================================
#pragma once

#include <string>
#include <vector>

#include "clifharm/grid.hpp"
#include "clifharm/spectral.hpp"

namespace clifharm {

struct OperatorReport {
  std::string op;
  FieldHeader input_header;
  FieldHeader output_header;
  bool dc_suppressed = false;    // true when the symbol was zeroed at DC
  double max_residual = 0.0;
  double mean_residual = 0.0;
};

// j-th Riesz transform, axis j in 1..n: multiplier -i xi_j / |xi| (scalar).
GridField riesz(int j, const GridField& f);

// Hilbert transformation H = -sum_k e_k R_k: multiplier i xi/|xi| acting by
// left Clifford multiplication.
GridField hilbert(const GridField& f);

// Hardy projections (1 +- H)/2: multiplier chi_{+-}(xi), left multiplication.
GridField hardy_project(Sign s, const GridField& f);

// sum_m psi(m) fhat(m) / prod(L_k), psi multiplying from the LEFT. Vanishes
// (to roundoff) when f lies in the range of hardy_project(+, .) and psi came
// from make_psi_minus.
Multivector spectrum_pairing(const GridField& f, const SpectralField& psi);

// Residual of the generalized Cauchy-Riemann system for an (n+1)-tuple of
// scalar functions u_0..u_n sampled on a common slab (u_0 plays the x0 role):
//   sum_{j=0}^n du_j/dx_j = 0,   du_j/dx_k = du_k/dx_j  (j != k).
// Returns the max over interior slices, grid points and equations of the
// centered-difference residual. Only the scalar blade of each slab is read.
double gcr_residual(const std::vector<SlabField>& u);

// Residual of the componentwise first-order system equivalent to DF = 0:
// for every blade T,  d0 f_T + sum_j (-1)^{l_j} dj f_{T_j} = 0,  where
// T_j = T xor {j} and l_j is the reordering exponent with
// (-1)^{l_j} e_j e_{T_j} = e_T.  Max over interior slices, points, blades.
double generalized_cr_residual(const SlabField& s);

// The conjugate-harmonic tuple (u_0, ..., u_n) carried by a paravector-valued
// slab: a field U = u_0 - sum_j u_j e_j is monogenic exactly when the tuple
// solves the generalized Cauchy-Riemann system, so u_0 is the scalar blade
// and u_j is the negated e_j blade. Each returned slab is scalar-valued.
std::vector<SlabField> conjugate_system_components(const SlabField& s);

}  // namespace clifharm
