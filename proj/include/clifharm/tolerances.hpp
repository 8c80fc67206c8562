//==============================================================================
// tolerances.hpp
// The single versioned tolerance table. Every residual bound used by the
// verification battery and the acceptance gate lives here, so reports can
// echo the exact numbers they were judged against.
//==============================================================================
#pragma once

namespace clifharm::tol {

inline constexpr const char* kVersion = "tol-v1";

// Algebra: floating identities on random elements (signs themselves are exact).
inline constexpr double kAlgebraIdentity = 1e-12;

// chi projector identities at every lattice frequency (coefficient-wise).
inline constexpr double kProjectorResidual = 1e-14;

// Relative L2 residual of applying the Hilbert transformation twice.
inline constexpr double kHilbertInvolution = 1e-10;

// Fraction of total spectral energy allowed on the minus component of a
// plus-projected field.
inline constexpr double kSpectrumSupportEnergy = 1e-20;

// |pairing| / (||f|| ||psi||) for plus-projected fields.
inline constexpr double kSpectrumPairing = 1e-10;

// Relative L2 gap between direct Cauchy quadrature and the multiplier route.
inline constexpr double kRouteEquivalence = 1e-3;

// Relative L2 gap for identities that are exact multiplier factorizations
// (e.g. decay-multiplied Hardy part vs Poisson of the projected data), for
// projector completeness on fields, and for file-independent reconstruction.
inline constexpr double kExactIdentity = 1e-12;

// Allowed band for the residual drop factor under mesh halving of an
// order-2 scheme (4 in exact asymptotics).
inline constexpr double kConvergenceRatioLo = 3.0;
inline constexpr double kConvergenceRatioHi = 5.0;

// Plancherel pairing defect relative to ||f|| ||g||.
inline constexpr double kPlancherel = 1e-10;

// Single-mode slab norm vs its closed form (relative).
inline constexpr double kBergmanClosedForm = 1e-6;

// Multiplicative quadrature slack allowed in the norm inequality check.
inline constexpr double kBergmanSlack = 1e-2;

// Slice pairing of density-synthesized slabs against negative-spectrum
// symbols, relative to ||slice|| ||psi||.
inline constexpr double kBergmanSlicePairing = 1e-10;

// Ball mean-value defect of extended fields, relative to the field scale.
inline constexpr double kMeanValueDefect = 1e-3;

// The non-harmonic control case must exceed the mean-value bound by this
// factor.
inline constexpr double kMeanValueControlFactor = 10.0;

}  // namespace clifharm::tol
