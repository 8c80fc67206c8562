//==============================================================================
// spectral.cpp -- FFTW-backed transforms and frequency-side symbols.
//==============================================================================
#include "clifharm/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace clifharm {

namespace {

// Parity of the multi-index bin (sum of per-axis bins mod 2) for every flat
// index, visited in row-major order without re-deriving the multi-index.
void apply_centered_phase(const FieldHeader& h, std::vector<cplx>& data) {
  const std::int64_t np = h.num_points();
  const int nb = h.num_blades();
  std::vector<std::int64_t> idx(h.n, 0);
  for (std::int64_t p = 0; p < np; ++p) {
    int parity = 0;
    for (int k = 0; k < h.n; ++k) parity ^= static_cast<int>(idx[k] & 1);
    if (parity) {
      cplx* row = data.data() + static_cast<std::size_t>(p) * nb;
      for (int b = 0; b < nb; ++b) row[b] = -row[b];
    }
    for (int k = h.n - 1; k >= 0; --k) {
      if (++idx[k] < h.dims[k]) break;
      idx[k] = 0;
    }
  }
}

void run_fftw(const FieldHeader& h, std::vector<cplx>& data, int direction) {
  const int nb = h.num_blades();
  std::vector<int> dims(h.n);
  for (int k = 0; k < h.n; ++k) dims[k] = static_cast<int>(h.dims[k]);
  std::vector<cplx> out(data.size());
  // One transform per blade; blades are interleaved point-major, so the
  // per-transform stride is 2^n and consecutive transforms are offset by 1.
  fftw_plan plan = fftw_plan_many_dft(
      h.n, dims.data(), nb,
      reinterpret_cast<fftw_complex*>(data.data()), nullptr, nb, 1,
      reinterpret_cast<fftw_complex*>(out.data()), nullptr, nb, 1,
      direction, FFTW_ESTIMATE);
  if (plan == nullptr) throw std::runtime_error("fftw plan creation failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  data = std::move(out);
}

}  // namespace

SpectralField dft_forward(const GridField& f) {
  const FieldHeader& h = f.header();
  SpectralField out(h);
  out.data() = f.data();
  run_fftw(h, out.data(), FFTW_FORWARD);
  // Grid offset -L/2 contributes e^{i pi m} = (-1)^m per axis; m has the bin's
  // parity because d is even, so the phase lives purely on the spectral side.
  apply_centered_phase(h, out.data());
  const cplx scale(h.cell_volume(), 0.0);
  for (auto& v : out.data()) v *= scale;
  return out;
}

GridField dft_inverse(const SpectralField& g) {
  const FieldHeader& h = g.header();
  GridField out(h);
  out.data() = g.data();
  apply_centered_phase(h, out.data());
  run_fftw(h, out.data(), FFTW_BACKWARD);
  const cplx scale(1.0 / h.box_volume(), 0.0);
  for (auto& v : out.data()) v *= scale;
  return out;
}

Multivector chi_projector(Sign s, const std::vector<double>& xi) {
  const int n = static_cast<int>(xi.size());
  check_dimension(n);
  double mag = 0.0;
  for (double x : xi) mag += x * x;
  mag = std::sqrt(mag);
  Multivector m = Multivector::scalar(n, cplx(0.5, 0.0));
  if (mag == 0.0) return m;  // both projectors share the mean equally
  const double sgn = (s == Sign::plus) ? 1.0 : -1.0;
  for (int j = 1; j <= n; ++j) {
    const std::uint32_t mask = 1u << (j - 1);
    m[mask] = cplx(0.0, 0.5 * sgn * xi[j - 1] / mag);
  }
  return m;
}

Multivector e_kernel(Sign s, double x0, const std::vector<double>& x,
                     const std::vector<double>& xi) {
  const int n = static_cast<int>(xi.size());
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("e_kernel: x and xi rank mismatch");
  double mag = 0.0, dot = 0.0;
  for (int k = 0; k < n; ++k) {
    mag += xi[k] * xi[k];
    dot += x[k] * xi[k];
  }
  mag = std::sqrt(mag);
  if (s == Sign::plus && x0 < 0.0)
    throw std::domain_error("e_kernel: plus kernel requires x0 >= 0");
  if (s == Sign::minus && x0 > 0.0)
    throw std::domain_error("e_kernel: minus kernel requires x0 <= 0");
  const double decay = (s == Sign::plus) ? std::exp(-2.0 * kPi * x0 * mag)
                                         : std::exp(2.0 * kPi * x0 * mag);
  const cplx osc = std::polar(decay, 2.0 * kPi * dot);
  Multivector m = chi_projector(s, xi);
  m *= osc;
  return m;
}

Multivector grid_pairing(const GridField& f, const GridField& g) {
  require_compatible(f.header(), g.header());
  const int n = f.header().n;
  Multivector acc(n);
  const std::int64_t np = f.num_points();
  for (std::int64_t p = 0; p < np; ++p)
    acc += f.value(p) * conjugate(g.value(p));
  acc *= cplx(f.header().cell_volume(), 0.0);
  return acc;
}

Multivector lattice_pairing(const SpectralField& f, const SpectralField& g) {
  require_compatible(f.header(), g.header());
  const int n = f.header().n;
  Multivector acc(n);
  const std::int64_t nb = f.num_bins();
  for (std::int64_t b = 0; b < nb; ++b)
    acc += f.value(b) * conjugate(g.value(b));
  acc *= cplx(1.0 / f.header().box_volume(), 0.0);
  return acc;
}

double plancherel_defect(const GridField& f, const GridField& g) {
  const Multivector phys = grid_pairing(f, g);
  const Multivector spec = lattice_pairing(dft_forward(f), dft_forward(g));
  return (phys - spec).norm();
}

SpectralField make_psi_minus(const FieldHeader& header, const PsiEnvelope& env) {
  header.validate();
  if (!(env.r0 > 0.0) || !(env.r1 > env.r0))
    throw std::invalid_argument("make_psi_minus: need 0 < r0 < r1");
  if (env.r1 > header.nyquist_radius() + 1e-15)
    throw std::invalid_argument("make_psi_minus: r1 exceeds the Nyquist radius");
  SpectralField psi(header);
  const double a = env.r0, b = env.r1;
  const double width_sq = (b - a) * (b - a);
  const std::int64_t nbins = psi.num_bins();
  for (std::int64_t bin = 0; bin < nbins; ++bin) {
    const auto xi = psi.xi(bin);
    double rho = 0.0;
    for (double x : xi) rho += x * x;
    rho = std::sqrt(rho);
    if (rho <= a || rho >= b) continue;
    const double phi = env.amplitude * std::exp(1.0 - width_sq / (4.0 * (rho - a) * (b - rho)));
    Multivector m = chi_projector(Sign::minus, xi);
    m *= cplx(phi, 0.0);
    psi.set_value(bin, m);
  }
  return psi;
}

}  // namespace clifharm
