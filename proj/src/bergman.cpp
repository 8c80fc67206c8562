//==============================================================================
// bergman.cpp -- A^p slab norms and the weighted spectral norm of a density.
//==============================================================================
#include "clifharm/bergman.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace clifharm {

Multivector bergman_from_density(const BergmanDensity& G, const Paravector& x) {
  const FieldHeader& h = G.header();
  if (static_cast<int>(x.vec.size()) != h.n)
    throw std::invalid_argument("bergman_from_density: rank mismatch");
  if (!(x.x0 > 0.0)) throw std::domain_error("bergman_from_density: x0 must be > 0");
  Multivector acc(h.n);
  const std::int64_t nbins = G.num_bins();
  for (std::int64_t bin = 0; bin < nbins; ++bin) {
    const Multivector g = G.value(bin);
    if (g.norm_sq() == 0.0) continue;
    acc += e_kernel(Sign::plus, x.x0, x.vec, G.xi(bin)) * g;
  }
  acc *= cplx(1.0 / h.box_volume(), 0.0);
  return acc;
}

SlabField bergman_slab(const BergmanDensity& G, const std::vector<double>& x0s) {
  const FieldHeader& h = G.header();
  SlabField slab;
  slab.header = h;
  slab.x0_values = x0s;
  slab.slices.reserve(x0s.size());
  const std::int64_t nbins = G.num_bins();
  for (double x0 : x0s) {
    if (!(x0 > 0.0)) throw std::domain_error("bergman_slab: heights must be > 0");
    SpectralField g = G;
    for (std::int64_t bin = 0; bin < nbins; ++bin) {
      const auto xi = g.xi(bin);
      double mag = 0.0;
      for (double v : xi) mag += v * v;
      mag = std::sqrt(mag);
      Multivector m = chi_projector(Sign::plus, xi);
      m *= cplx(std::exp(-2.0 * kPi * x0 * mag), 0.0);
      g.set_value(bin, m * g.value(bin));
    }
    slab.slices.push_back(dft_inverse(g));
  }
  slab.validate();
  return slab;
}

namespace {

// Horizontal Riemann sum of |F|^p over one slice.
double slice_p_integral(const GridField& f, double p) {
  const FieldHeader& h = f.header();
  const int nb = h.num_blades();
  const std::int64_t np = f.num_points();
  double acc = 0.0;
  for (std::int64_t pt = 0; pt < np; ++pt) {
    double mag_sq = 0.0;
    for (int b = 0; b < nb; ++b) mag_sq += std::norm(f.at(pt, static_cast<std::uint32_t>(b)));
    acc += std::pow(mag_sq, 0.5 * p);
  }
  return acc * h.cell_volume();
}

}  // namespace

BergmanNormResult bergman_norm(const SlabField& s, double p, double xi_min) {
  s.validate();
  if (!(p >= 1.0)) throw std::invalid_argument("bergman_norm: p must be >= 1");
  if (xi_min < 0.0) throw std::invalid_argument("bergman_norm: xi_min must be >= 0");

  const std::size_t ns = s.num_slices();
  std::vector<double> I(ns);
  for (std::size_t i = 0; i < ns; ++i) I[i] = slice_p_integral(s.slices[i], p);

  // Trapezoid across the stored heights.
  double power = 0.0;
  for (std::size_t i = 0; i + 1 < ns; ++i)
    power += 0.5 * (I[i] + I[i + 1]) * (s.x0_values[i + 1] - s.x0_values[i]);

  // Head [0, x0_min]: extrapolate the integrand linearly from the first two
  // nodes (the integrand grows toward x0 = 0, so a constant head would bias
  // low); a single node falls back to the constant rule.
  const double x0_min = s.x0_values.front();
  double I_at_zero = I[0];
  if (ns >= 2) {
    const double slope = (I[1] - I[0]) / (s.x0_values[1] - s.x0_values[0]);
    I_at_zero = I[0] - slope * x0_min;
    if (I_at_zero < 0.0) I_at_zero = 0.0;
  }
  power += 0.5 * (I_at_zero + I[0]) * x0_min;

  // Tail beyond the last slice: |F(x0_max + t)| <= e^{-2 pi xi_min t}|F(x0_max)|
  // pointwise when every frequency present has |xi| >= xi_min.
  double tail = 0.0;
  if (I[ns - 1] > 0.0)
    tail = (xi_min > 0.0) ? I[ns - 1] / (2.0 * kPi * p * xi_min)
                          : std::numeric_limits<double>::infinity();

  BergmanNormResult r;
  r.value = std::pow(power, 1.0 / p);
  r.tail_bound = tail;
  return r;
}

double weighted_spectral_norm(const BergmanDensity& G, double p) {
  const FieldHeader& h = G.header();
  const bool sup_form = (p == 1.0);
  if (!sup_form && !(p > 1.0 && p <= 2.0))
    throw std::invalid_argument("weighted_spectral_norm: p must be 1 or in (1, 2]");

  const std::int64_t nbins = G.num_bins();
  double acc = 0.0;
  const double q = sup_form ? 0.0 : p / (p - 1.0);
  for (std::int64_t bin = 0; bin < nbins; ++bin) {
    const Multivector g = G.value(bin);
    if (g.norm_sq() == 0.0) continue;
    const auto xi = G.xi(bin);
    double mag = 0.0;
    for (double v : xi) mag += v * v;
    mag = std::sqrt(mag);
    if (mag == 0.0)
      throw std::domain_error("weighted_spectral_norm: density has a DC component where the weight is singular");
    const double num = (chi_projector(Sign::plus, xi) * g).norm();
    if (sup_form) {
      acc = std::max(acc, num / (2.0 * kPi * mag));
    } else {
      acc += std::pow(num, q) / std::pow(2.0 * kPi * p * mag, q / p);
    }
  }
  if (sup_form) return acc;
  return std::pow(acc / h.box_volume(), 1.0 / (p / (p - 1.0)));
}

}  // namespace clifharm
