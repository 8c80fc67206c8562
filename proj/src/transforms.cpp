//==============================================================================
// transforms.cpp -- multiplier operators and conjugate-system residuals.
//==============================================================================
#include "clifharm/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "clifharm/finite_diff.hpp"

namespace clifharm {

namespace {

double xi_magnitude(const std::vector<double>& xi) {
  double m = 0.0;
  for (double x : xi) m += x * x;
  return std::sqrt(m);
}

}  // namespace

GridField riesz(int j, const GridField& f) {
  const FieldHeader& h = f.header();
  if (j < 1 || j > h.n) throw std::invalid_argument("riesz: axis out of range");
  SpectralField g = dft_forward(f);
  const std::int64_t nbins = g.num_bins();
  const int nb = h.num_blades();
  for (std::int64_t bin = 0; bin < nbins; ++bin) {
    const auto xi = g.xi(bin);
    const double mag = xi_magnitude(xi);
    const cplx mult = (mag == 0.0) ? cplx(0.0, 0.0) : cplx(0.0, -xi[j - 1] / mag);
    for (int b = 0; b < nb; ++b) g.at(bin, static_cast<std::uint32_t>(b)) *= mult;
  }
  return dft_inverse(g);
}

GridField hilbert(const GridField& f) {
  const FieldHeader& h = f.header();
  SpectralField g = dft_forward(f);
  const std::int64_t nbins = g.num_bins();
  for (std::int64_t bin = 0; bin < nbins; ++bin) {
    const auto xi = g.xi(bin);
    const double mag = xi_magnitude(xi);
    if (mag == 0.0) {
      g.set_value(bin, Multivector(h.n));
      continue;
    }
    Multivector symbol(h.n);
    for (int j = 1; j <= h.n; ++j)
      symbol[1u << (j - 1)] = cplx(0.0, xi[j - 1] / mag);
    g.set_value(bin, symbol * g.value(bin));
  }
  return dft_inverse(g);
}

GridField hardy_project(Sign s, const GridField& f) {
  const FieldHeader& h = f.header();
  SpectralField g = dft_forward(f);
  const std::int64_t nbins = g.num_bins();
  for (std::int64_t bin = 0; bin < nbins; ++bin) {
    const Multivector chi = chi_projector(s, g.xi(bin));
    g.set_value(bin, chi * g.value(bin));
  }
  return dft_inverse(g);
}

Multivector spectrum_pairing(const GridField& f, const SpectralField& psi) {
  require_compatible(f.header(), psi.header());
  const SpectralField fhat = dft_forward(f);
  Multivector acc(f.header().n);
  const std::int64_t nbins = fhat.num_bins();
  for (std::int64_t bin = 0; bin < nbins; ++bin)
    acc += psi.value(bin) * fhat.value(bin);
  acc *= cplx(1.0 / f.header().box_volume(), 0.0);
  return acc;
}

double gcr_residual(const std::vector<SlabField>& u) {
  if (u.empty()) throw std::invalid_argument("gcr_residual: empty component list");
  const FieldHeader& h = u[0].header;
  const int n = h.n;
  if (static_cast<int>(u.size()) != n + 1)
    throw std::invalid_argument("gcr_residual: need exactly n+1 scalar components");
  for (const auto& comp : u) {
    comp.validate();
    require_compatible(h, comp.header);
    if (comp.x0_values != u[0].x0_values)
      throw std::invalid_argument("gcr_residual: components sampled at different heights");
  }
  const std::size_t ns = u[0].num_slices();
  if (ns < 3) throw std::invalid_argument("gcr_residual: need at least three slices");

  const std::int64_t np = h.num_points();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < ns; ++i) {
    // d[j][k] = centered difference of u_j along axis k at slice i
    // (k = 0 is the vertical direction).
    std::vector<std::vector<GridField>> d(n + 1);
    for (int j = 0; j <= n; ++j) {
      d[j].reserve(n + 1);
      d[j].push_back(slab_x0_derivative(u[j], i));
      for (int k = 1; k <= n; ++k)
        d[j].push_back(spatial_derivative(u[j].slices[i], k));
    }
    for (std::int64_t p = 0; p < np; ++p) {
      cplx div(0.0, 0.0);
      for (int j = 0; j <= n; ++j) div += d[j][j].at(p, 0);
      worst = std::max(worst, std::abs(div));
      for (int j = 0; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          worst = std::max(worst, std::abs(d[j][k].at(p, 0) - d[k][j].at(p, 0)));
    }
  }
  return worst;
}

double generalized_cr_residual(const SlabField& s) {
  s.validate();
  if (s.num_slices() < 3)
    throw std::invalid_argument("generalized_cr_residual: need at least three slices");
  const FieldHeader& h = s.header;
  const int n = h.n;
  const int nb = h.num_blades();

  // Reordering data per (axis j, blade T): sign (-1)^{l_j} and partner T_j.
  std::vector<std::vector<double>> sign(n + 1);
  std::vector<std::vector<std::uint32_t>> partner(n + 1);
  for (int j = 1; j <= n; ++j) {
    sign[j].resize(nb);
    partner[j].resize(nb);
    for (int t = 0; t < nb; ++t) {
      const BladeSignL bs = blade_sign_l(j, static_cast<std::uint32_t>(t), n);
      sign[j][t] = (bs.l % 2 == 0) ? 1.0 : -1.0;
      partner[j][t] = bs.t_j;
    }
  }

  const std::int64_t np = h.num_points();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < s.num_slices(); ++i) {
    const GridField d0 = slab_x0_derivative(s, i);
    std::vector<GridField> dj;
    dj.reserve(n);
    for (int j = 1; j <= n; ++j) dj.push_back(spatial_derivative(s.slices[i], j));
    for (std::int64_t p = 0; p < np; ++p) {
      for (int t = 0; t < nb; ++t) {
        cplx r = d0.at(p, static_cast<std::uint32_t>(t));
        for (int j = 1; j <= n; ++j)
          r += sign[j][t] * dj[j - 1].at(p, partner[j][t]);
        worst = std::max(worst, std::abs(r));
      }
    }
  }
  return worst;
}

std::vector<SlabField> conjugate_system_components(const SlabField& s) {
  s.validate();
  const FieldHeader& h = s.header;
  const int n = h.n;
  const std::int64_t np = h.num_points();
  std::vector<SlabField> comps(n + 1);
  for (int j = 0; j <= n; ++j) {
    comps[j].header = h;
    comps[j].x0_values = s.x0_values;
    const std::uint32_t blade = (j == 0) ? 0u : (1u << (j - 1));
    const cplx factor = (j == 0) ? cplx(1.0, 0.0) : cplx(-1.0, 0.0);
    for (const GridField& slice : s.slices) {
      GridField comp(h);
      for (std::int64_t p = 0; p < np; ++p) comp.at(p, 0) = factor * slice.at(p, blade);
      comps[j].slices.push_back(std::move(comp));
    }
  }
  return comps;
}

}  // namespace clifharm
