//==============================================================================
// generators.hpp
// Deterministic test-field synthesis. All randomness flows from a splitmix64
// stream seeded explicitly; the same seed yields the same field on every run.
//==============================================================================
#pragma once

#include <cstdint>
#include <vector>

#include "clifharm/grid.hpp"
#include "clifharm/spectral.hpp"

namespace clifharm {

// splitmix64 with Box-Muller normals; small, seedable, reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  double uniform();   // [0, 1)
  double normal();    // standard normal
  Rng fork(std::uint64_t stream);  // independent child stream

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Constant scalar field.
GridField gen_constant(const FieldHeader& h, cplx value);

// Plane wave e^{2 pi i <x, xi0>} * amplitude with xi0 = m/L on the lattice,
// evaluated directly at the grid points.
GridField gen_plane_wave(const FieldHeader& h, const std::vector<std::int64_t>& m,
                         const Multivector& amplitude);
GridField gen_plane_wave(const FieldHeader& h, const std::vector<std::int64_t>& m);

// Gaussian ring spectrum: scalar coefficients exp(-(|xi|-center)^2/(2 width^2))
// on the open annulus |xi| in (center - 3 width, center + 3 width), zero at DC
// and on Nyquist rows. Phases are 1 when random_phase is false (the field is
// then a coherent, spatially localized wave packet) and uniform unit complex
// numbers drawn from the seed otherwise.
SpectralField make_gaussian_ring_spectrum(const FieldHeader& h, double center,
                                          double width, std::uint64_t seed,
                                          bool random_phase);
GridField gen_gaussian_ring(const FieldHeader& h, double center, double width,
                            std::uint64_t seed, bool random_phase);

// Band-limited random field: independent complex Gaussian coefficients on the
// bins with 0 < max_k |m_k| <= band (DC-free; band < d_k/2 keeps all Nyquist
// rows empty), on every blade or on the scalar blade only.
GridField gen_random_bandlimited(const FieldHeader& h, std::int64_t band,
                                 std::uint64_t seed, bool scalar_only);

}  // namespace clifharm
