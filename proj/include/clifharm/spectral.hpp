//==============================================================================
// spectral.hpp
// Discrete Fourier machinery emulating the continuous transform
//     Fhat(xi) = int f(x) e^{-2 pi i <x,xi>} dx
// on the periodic box [-L/2, L/2)^n. With samples x_j = -L/2 + j h the
// continuous transform at lattice frequency xi = m/L equals
//     prod(h_k) * (-1)^{sum_k bin_k} * DFT_std[f](bin),
// because the -L/2 grid offset contributes e^{i pi m} = (-1)^m per axis and
// m has the parity of the FFT bin when d is even. The inverse applies the
// same phase before a backward FFT and divides by prod(L_k).
//
// Spectral operators act by LEFT Clifford multiplication on each bin:
//   chi_{+-}(xi) = (1 -+ ... ) = (1 +- i xi/|xi|) / 2     (projector pair)
//   e^{+-}(x, xi) = e^{2 pi i <x,xi>} e^{-+ 2 pi x0 |xi|} chi_{+-}(xi)
// At xi = 0 both projectors degenerate to the scalar 1/2 (half/half split of
// the mean); the kernels reduce to e^{0} * 1/2.
//==============================================================================
#pragma once

#include <vector>

#include "clifharm/grid.hpp"
#include "clifharm/multivector.hpp"

namespace clifharm {

enum class Sign { plus, minus };

// Forward / inverse transforms between the physical grid and the frequency
// lattice. Round trip is exact to machine precision.
SpectralField dft_forward(const GridField& f);
GridField dft_inverse(const SpectralField& g);

// chi_{+-}(xi) = (1 +- i xi/|xi|)/2 as a multivector (scalar + vector part).
// xi must have size n; xi = 0 yields the scalar 1/2.
Multivector chi_projector(Sign s, const std::vector<double>& xi);

// Exponential kernel e^{+-}(x, xi) evaluated at one point:
//   e^{2 pi i <x,xi>} e^{-+ 2 pi x0 |xi|} chi_{+-}(xi).
// The plus kernel decays for x0 >= 0, the minus kernel for x0 <= 0; calling
// with x0 on the growing side throws std::domain_error.
Multivector e_kernel(Sign s, double x0, const std::vector<double>& x,
                     const std::vector<double>& xi);

// Clifford-valued L2 pairings: sum_x f(x) conj(g(x)) prod(h_k) on the grid,
// sum_m fhat(m) conj(ghat(m)) prod(1/L_k) on the lattice. With the chosen
// normalization the two agree exactly in exact arithmetic, blade by blade.
Multivector grid_pairing(const GridField& f, const GridField& g);
Multivector lattice_pairing(const SpectralField& f, const SpectralField& g);

// Norm of the difference of the two pairings (an absolute defect).
double plancherel_defect(const GridField& f, const GridField& g);

// Smooth compactly supported negative-spectrum symbol.  The returned field
// holds psi(xi) = phi(|xi|) chi_-(xi) with phi a C^infty bump supported on
// the open annulus r0 < |xi| < r1:
//   phi(rho) = amplitude * exp(1 - (r1-r0)^2 / (4 (rho-r0)(r1-rho))).
// Requires 0 < r0 < r1 <= Nyquist radius of the lattice.
struct PsiEnvelope {
  double r0 = 0.0;
  double r1 = 0.0;
  double amplitude = 1.0;
};

SpectralField make_psi_minus(const FieldHeader& header, const PsiEnvelope& env);

}  // namespace clifharm
