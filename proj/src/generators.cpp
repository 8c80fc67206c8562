//==============================================================================
// generators.cpp -- seeded synthesis of boundary data and spectra.
//==============================================================================
#include "clifharm/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace clifharm {

std::uint64_t Rng::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * kPi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Rng Rng::fork(std::uint64_t stream) {
  return Rng(next_u64() ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
}

GridField gen_constant(const FieldHeader& h, cplx value) {
  GridField f(h);
  const std::int64_t np = f.num_points();
  for (std::int64_t p = 0; p < np; ++p) f.at(p, 0) = value;
  return f;
}

GridField gen_plane_wave(const FieldHeader& h, const std::vector<std::int64_t>& m,
                         const Multivector& amplitude) {
  h.validate();
  if (static_cast<int>(m.size()) != h.n)
    throw std::invalid_argument("gen_plane_wave: mode vector rank mismatch");
  if (amplitude.dim() != h.n)
    throw std::invalid_argument("gen_plane_wave: amplitude dimension mismatch");
  for (int k = 0; k < h.n; ++k)
    if (m[k] < -h.dims[k] / 2 || m[k] >= h.dims[k] / 2)
      throw std::invalid_argument("gen_plane_wave: mode outside the frequency lattice");

  GridField f(h);
  const std::int64_t np = f.num_points();
  for (std::int64_t p = 0; p < np; ++p) {
    const auto x = f.coords(p);
    double dot = 0.0;
    for (int k = 0; k < h.n; ++k) dot += x[k] * static_cast<double>(m[k]) / h.extent[k];
    Multivector v = amplitude;
    v *= std::polar(1.0, 2.0 * kPi * dot);
    f.set_value(p, v);
  }
  return f;
}

GridField gen_plane_wave(const FieldHeader& h, const std::vector<std::int64_t>& m) {
  return gen_plane_wave(h, m, Multivector::scalar(h.n, cplx(1.0, 0.0)));
}

SpectralField make_gaussian_ring_spectrum(const FieldHeader& h, double center,
                                          double width, std::uint64_t seed,
                                          bool random_phase) {
  h.validate();
  if (!(center > 0.0) || !(width > 0.0))
    throw std::invalid_argument("gaussian_ring: center and width must be > 0");
  SpectralField g(h);
  Rng rng(seed);
  const std::int64_t nbins = g.num_bins();
  for (std::int64_t bin = 0; bin < nbins; ++bin) {
    if (g.is_dc(bin) || g.is_nyquist(bin)) continue;
    const auto xi = g.xi(bin);
    double rho = 0.0;
    for (double v : xi) rho += v * v;
    rho = std::sqrt(rho);
    if (std::abs(rho - center) >= 3.0 * width) continue;
    const double dev = (rho - center) / width;
    const double env = std::exp(-0.5 * dev * dev);
    const cplx phase = random_phase ? std::polar(1.0, 2.0 * kPi * rng.uniform())
                                    : cplx(1.0, 0.0);
    g.at(bin, 0) = env * phase;
  }
  return g;
}

GridField gen_gaussian_ring(const FieldHeader& h, double center, double width,
                            std::uint64_t seed, bool random_phase) {
  return dft_inverse(make_gaussian_ring_spectrum(h, center, width, seed, random_phase));
}

GridField gen_random_bandlimited(const FieldHeader& h, std::int64_t band,
                                 std::uint64_t seed, bool scalar_only) {
  h.validate();
  if (band < 1) throw std::invalid_argument("gen_random_bandlimited: band must be >= 1");
  for (int k = 0; k < h.n; ++k)
    if (band >= h.dims[k] / 2)
      throw std::invalid_argument("gen_random_bandlimited: band reaches the Nyquist row");

  SpectralField g(h);
  Rng rng(seed);
  const std::int64_t nbins = g.num_bins();
  const int nb = h.num_blades();
  for (std::int64_t bin = 0; bin < nbins; ++bin) {
    const auto m = g.freq(bin);
    std::int64_t linf = 0;
    for (auto v : m) linf = std::max(linf, v < 0 ? -v : v);
    if (linf == 0 || linf > band) continue;
    const int blades = scalar_only ? 1 : nb;
    for (int b = 0; b < blades; ++b) {
      const double re = rng.normal();
      const double im = rng.normal();
      g.at(bin, static_cast<std::uint32_t>(b)) = cplx(re, im);
    }
  }
  return dft_inverse(g);
}

}  // namespace clifharm
