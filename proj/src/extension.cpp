//==============================================================================
// extension.cpp -- half-space extensions and monogenicity diagnostics.
//==============================================================================
#include "clifharm/extension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "clifharm/finite_diff.hpp"

namespace clifharm {

double sigma_n(int n) {
  check_dimension(n);
  return std::pow(kPi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

Multivector cauchy_kernel(const Paravector& x, int n) {
  if (static_cast<int>(x.vec.size()) != n)
    throw std::invalid_argument("cauchy_kernel: paravector rank mismatch");
  double mag_sq = x.x0 * x.x0;
  for (double v : x.vec) mag_sq += v * v;
  if (mag_sq == 0.0) throw std::domain_error("cauchy_kernel: singular at the origin");
  const double scale = 1.0 / (2.0 * sigma_n(n) * std::pow(mag_sq, 0.5 * (n + 1)));
  Multivector m = Multivector::scalar(n, cplx(x.x0 * scale, 0.0));
  for (int j = 1; j <= n; ++j)
    m[1u << (j - 1)] = cplx(-x.vec[j - 1] * scale, 0.0);
  return m;
}

namespace {

void require_positive_height(double x0, const char* who) {
  if (!(x0 > 0.0)) throw std::domain_error(std::string(who) + ": x0 must be > 0");
}

}  // namespace

GridField poisson_extend(const GridField& f, double x0) {
  require_positive_height(x0, "poisson_extend");
  SpectralField g = dft_forward(f);
  const std::int64_t nbins = g.num_bins();
  const int nb = f.header().num_blades();
  for (std::int64_t bin = 0; bin < nbins; ++bin) {
    const auto xi = g.xi(bin);
    double mag = 0.0;
    for (double v : xi) mag += v * v;
    const double mult = std::exp(-2.0 * kPi * x0 * std::sqrt(mag));
    for (int b = 0; b < nb; ++b) g.at(bin, static_cast<std::uint32_t>(b)) *= mult;
  }
  return dft_inverse(g);
}

GridField spectral_extend(const GridField& f, double x0) {
  require_positive_height(x0, "spectral_extend");
  SpectralField g = dft_forward(f);
  const std::int64_t nbins = g.num_bins();
  for (std::int64_t bin = 0; bin < nbins; ++bin) {
    const auto xi = g.xi(bin);
    double mag = 0.0;
    for (double v : xi) mag += v * v;
    mag = std::sqrt(mag);
    Multivector m = chi_projector(Sign::plus, xi);
    m *= cplx(std::exp(-2.0 * kPi * x0 * mag), 0.0);
    g.set_value(bin, m * g.value(bin));
  }
  return dft_inverse(g);
}

GridField cauchy_extend(const GridField& f, double x0) {
  require_positive_height(x0, "cauchy_extend");
  const FieldHeader& h = f.header();
  const int n = h.n;
  const std::int64_t np = h.num_points();

  std::vector<Multivector> samples;
  std::vector<std::vector<double>> coords;
  samples.reserve(np);
  coords.reserve(np);
  for (std::int64_t p = 0; p < np; ++p) {
    samples.push_back(f.value(p));
    coords.push_back(f.coords(p));
  }

  GridField out(h);
  const double cell = h.cell_volume();
  Paravector diff;
  diff.x0 = x0;
  diff.vec.resize(n);
  for (std::int64_t p = 0; p < np; ++p) {
    Multivector acc(n);
    for (std::int64_t q = 0; q < np; ++q) {
      for (int k = 0; k < n; ++k) diff.vec[k] = coords[p][k] - coords[q][k];
      acc += cauchy_kernel(diff, n) * samples[q];
    }
    acc *= cplx(cell, 0.0);
    out.set_value(p, acc);
  }
  return out;
}

SlabField build_slab(const GridField& f, const std::vector<double>& x0s,
                     ExtendMethod method) {
  SlabField slab;
  slab.header = f.header();
  slab.x0_values = x0s;
  slab.slices.reserve(x0s.size());
  for (double x0 : x0s) {
    switch (method) {
      case ExtendMethod::poisson: slab.slices.push_back(poisson_extend(f, x0)); break;
      case ExtendMethod::spectral: slab.slices.push_back(spectral_extend(f, x0)); break;
      case ExtendMethod::cauchy: slab.slices.push_back(cauchy_extend(f, x0)); break;
    }
  }
  slab.validate();
  return slab;
}

double dirac_residual(const SlabField& s) {
  s.validate();
  if (s.num_slices() < 3)
    throw std::invalid_argument("dirac_residual: need at least three slices");
  const FieldHeader& h = s.header;
  const int n = h.n;
  const std::int64_t np = h.num_points();

  std::vector<Multivector> basis;
  for (int j = 1; j <= n; ++j) basis.push_back(Multivector::basis(n, j));

  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < s.num_slices(); ++i) {
    const GridField d0 = slab_x0_derivative(s, i);
    std::vector<GridField> dj;
    dj.reserve(n);
    for (int j = 1; j <= n; ++j) dj.push_back(spatial_derivative(s.slices[i], j));
    for (std::int64_t p = 0; p < np; ++p) {
      Multivector m = d0.value(p);
      for (int j = 1; j <= n; ++j) m += basis[j - 1] * dj[j - 1].value(p);
      worst = std::max(worst, m.norm());
    }
  }
  return worst;
}

namespace {

// Periodic multilinear interpolation within one slice.
Multivector grid_value_at(const GridField& f, const std::vector<double>& x) {
  const FieldHeader& h = f.header();
  const int n = h.n;
  std::vector<std::int64_t> base(n);
  std::vector<double> frac(n);
  for (int k = 0; k < n; ++k) {
    const double u = (x[k] + 0.5 * h.extent[k]) / h.spacing(k);
    const double fl = std::floor(u);
    frac[k] = u - fl;
    std::int64_t idx = static_cast<std::int64_t>(fl) % h.dims[k];
    if (idx < 0) idx += h.dims[k];
    base[k] = idx;
  }
  Multivector acc(n);
  std::vector<std::int64_t> corner(n);
  for (int c = 0; c < (1 << n); ++c) {
    double w = 1.0;
    for (int k = 0; k < n; ++k) {
      if (c & (1 << k)) {
        corner[k] = (base[k] + 1) % h.dims[k];
        w *= frac[k];
      } else {
        corner[k] = base[k];
        w *= 1.0 - frac[k];
      }
    }
    if (w == 0.0) continue;
    Multivector v = f.value(flatten_index(h, corner));
    v *= cplx(w, 0.0);
    acc += v;
  }
  return acc;
}

}  // namespace

Multivector slab_value_at(const SlabField& s, const Paravector& x) {
  s.validate();
  if (static_cast<int>(x.vec.size()) != s.header.n)
    throw std::invalid_argument("slab_value_at: rank mismatch");
  const auto& t = s.x0_values;
  if (x.x0 < t.front() - 1e-12 || x.x0 > t.back() + 1e-12)
    throw std::domain_error("slab_value_at: x0 outside the slab range");
  const double x0 = std::clamp(x.x0, t.front(), t.back());
  const auto upper = std::upper_bound(t.begin(), t.end(), x0);
  std::size_t hi = static_cast<std::size_t>(upper - t.begin());
  if (hi == 0) hi = 1;
  if (hi >= t.size()) hi = t.size() - 1;
  const std::size_t lo = hi - 1;
  const double span = t[hi] - t[lo];
  const double w = (x0 - t[lo]) / span;
  Multivector a = grid_value_at(s.slices[lo], x.vec);
  Multivector b = grid_value_at(s.slices[hi], x.vec);
  a *= cplx(1.0 - w, 0.0);
  b *= cplx(w, 0.0);
  return a + b;
}

double mean_value_defect(const SlabField& s, const Paravector& center, double radius) {
  s.validate();
  const FieldHeader& h = s.header;
  const int n = h.n;
  if (static_cast<int>(center.vec.size()) != n)
    throw std::invalid_argument("mean_value_defect: rank mismatch");
  if (!(radius > 0.0)) throw std::invalid_argument("mean_value_defect: radius must be > 0");
  if (radius < 2.0 * h.max_spacing())
    throw std::invalid_argument("mean_value_defect: radius under two grid spacings");
  if (center.x0 - radius < s.x0_values.front() - 1e-12 ||
      center.x0 + radius > s.x0_values.back() + 1e-12)
    throw std::domain_error("mean_value_defect: ball exits the slab");

  // Two-point Gauss rule for the radial weight r^{D-1} on [0, R], D = n+1:
  // moments m_k = R^{D+k}/(D+k); nodes are roots of the monic orthogonal
  // quadratic. Together with the axis-point surface rule the ball average is
  // exact for polynomials of total degree <= 3.
  const int D = n + 1;
  const double R = radius;
  double mom[4];
  for (int k = 0; k < 4; ++k) mom[k] = std::pow(R, D + k) / static_cast<double>(D + k);
  const double det = mom[1] * mom[1] - mom[0] * mom[2];
  const double c1 = (mom[0] * mom[3] - mom[1] * mom[2]) / det;
  const double c0 = (mom[2] * mom[2] - mom[1] * mom[3]) / det;
  const double disc = std::sqrt(c1 * c1 - 4.0 * c0);
  const double r1 = 0.5 * (-c1 + disc);
  const double r2 = 0.5 * (-c1 - disc);
  const double w1 = (mom[1] - mom[0] * r2) / (r1 - r2);
  const double w2 = mom[0] - w1;

  const double node[2] = {r1, r2};
  const double wgt[2] = {w1, w2};
  Multivector avg(n);
  for (int q = 0; q < 2; ++q) {
    Multivector shell(n);
    Paravector pt = center;
    for (int axis = 0; axis <= n; ++axis) {
      for (int dir = -1; dir <= 1; dir += 2) {
        pt = center;
        if (axis == 0) pt.x0 += dir * node[q];
        else pt.vec[axis - 1] += dir * node[q];
        shell += slab_value_at(s, pt);
      }
    }
    shell *= cplx(wgt[q] / (2.0 * D), 0.0);
    avg += shell;
  }
  avg *= cplx(1.0 / mom[0], 0.0);

  const Multivector at_center = slab_value_at(s, center);
  return (avg - at_center).norm();
}

}  // namespace clifharm
