//==============================================================================
// test_extension.cpp -- half-space extensions and harmonicity diagnostics.
// Kernels and constants are pinned, multiplier routes are checked against
// exact factorizations and the literal Cauchy quadrature, and the ball-average
// rule is validated on polynomials where its defect is known in closed form.
//==============================================================================
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "clifharm/extension.hpp"
#include "clifharm/generators.hpp"
#include "clifharm/grid.hpp"
#include "clifharm/multivector.hpp"
#include "clifharm/spectral.hpp"
#include "clifharm/transforms.hpp"

using namespace clifharm;

namespace {

FieldHeader unit_header(int n, std::int64_t d) {
  return FieldHeader(n, std::vector<std::int64_t>(n, d), std::vector<double>(n, 1.0));
}

double rel_gap(const GridField& a, const GridField& b) {
  const double scale = std::max(a.l2_norm(), b.l2_norm());
  return scale == 0.0 ? 0.0 : (a - b).l2_norm() / scale;
}

}  // namespace

TEST_CASE("normalization constants") {
  CHECK(sigma_n(1) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(sigma_n(2) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
  CHECK(sigma_n(3) == doctest::Approx(kPi * kPi).epsilon(1e-14));
}

TEST_CASE("reproducing kernel values") {
  // n = 1: E(x) = conj(x) / (2 pi |x|^2).
  const Multivector above = cauchy_kernel(Paravector(1.0, {0.0}), 1);
  CHECK(above.sc().real() == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
  CHECK(above.nsc().norm() <= 1e-15);

  const Multivector side = cauchy_kernel(Paravector(0.0, {1.0}), 1);
  CHECK(std::abs(side.sc()) <= 1e-15);
  CHECK(side[0b1].real() == doctest::Approx(-1.0 / (2.0 * kPi)).epsilon(1e-14));
  CHECK(std::abs(side[0b1].imag()) <= 1e-15);

  // Homogeneity of degree -n: E(t x) = E(x)/t^n for t > 0.
  const Paravector x(0.4, {-0.3, 0.2});
  const Multivector e1 = cauchy_kernel(x, 2);
  Paravector x2 = x;
  x2.x0 *= 2.0;
  for (double& v : x2.vec) v *= 2.0;
  const Multivector e2 = cauchy_kernel(x2, 2);
  CHECK((e2 * cplx(4.0, 0.0) - e1).norm() <= 1e-13 * e1.norm());

  CHECK_THROWS_AS(cauchy_kernel(Paravector(0.0, {0.0}), 1), std::domain_error);
  CHECK_THROWS_AS(cauchy_kernel(Paravector(1.0, {0.0}), 2), std::invalid_argument);
}

TEST_CASE("multiplier extensions on a single plane wave") {
  FieldHeader h(2, {16, 16}, {1.0, 2.0});
  const std::vector<std::int64_t> m = {3, -2};
  const GridField w = gen_plane_wave(h, m);
  const double mag = std::hypot(3.0 / 1.0, -2.0 / 2.0);
  const double x0 = 0.07;

  // Componentwise decay multiplier on the single mode.
  const GridField pw = poisson_extend(w, x0);
  CHECK(rel_gap(pw, w * cplx(std::exp(-2.0 * kPi * x0 * mag), 0.0)) <= 1e-12);

  // The full extension equals the decaying kernel pointwise.
  const GridField sw = spectral_extend(w, x0);
  const std::vector<double> xi = {3.0 / 1.0, -2.0 / 2.0};
  double worst = 0.0;
  for (std::int64_t p = 0; p < h.num_points(); ++p) {
    const Multivector want = e_kernel(Sign::plus, x0, w.coords(p), xi);
    worst = std::max(worst, (sw.value(p) - want).norm());
  }
  CHECK(worst <= 1e-12);

  CHECK_THROWS_AS(poisson_extend(w, 0.0), std::domain_error);
  CHECK_THROWS_AS(spectral_extend(w, -0.1), std::domain_error);
  CHECK_THROWS_AS(cauchy_extend(w, 0.0), std::domain_error);
}

TEST_CASE("factorization, semigroup and decay of the multiplier routes") {
  const FieldHeader h = unit_header(2, 16);
  const GridField f = gen_random_bandlimited(h, 3, 314, false);
  const double fn = f.l2_norm();
  const double x0 = 0.1;

  CHECK((spectral_extend(f, x0) - poisson_extend(hardy_project(Sign::plus, f), x0))
            .l2_norm() <= 1e-12 * fn);
  CHECK((poisson_extend(poisson_extend(f, 0.04), 0.06) - poisson_extend(f, 0.1))
            .l2_norm() <= 1e-12 * fn);

  // DC-free data decays at least like the slowest mode present.
  const double n1 = spectral_extend(f, 0.5).l2_norm();
  CHECK(n1 <= std::exp(-2.0 * kPi * 0.5) * fn + 1e-12);
  CHECK(spectral_extend(f, 0.2).l2_norm() >= n1);
}

TEST_CASE("direct quadrature route approaches the multiplier route") {
  const FieldHeader h = unit_header(1, 32);
  // Coherent phases keep the packet localized away from the periodic seam.
  const GridField data =
      hardy_project(Sign::plus, gen_gaussian_ring(h, 6.0, 4.0 / 3.0, 11, false));
  const double dn = data.l2_norm();
  const double hh = h.spacing(0);
  for (double mult : {2.0, 4.0}) {
    const GridField a = spectral_extend(data, mult * hh);
    const GridField b = cauchy_extend(data, mult * hh);
    // The single-cell kernel quadrature carries an absolute truncation error
    // at the boundary-data scale, so that is the right normalization.
    CHECK((a - b).l2_norm() <= 1e-3 * dn);
  }
}

TEST_CASE("first-order residual of exact slabs") {
  const FieldHeader h = unit_header(1, 16);
  const double h0 = h.spacing(0);

  // F = x0 (scalar): the vertical derivative contributes exactly 1.
  SlabField s;
  s.header = h;
  for (int i = 1; i <= 3; ++i) {
    s.x0_values.push_back(i * h0);
    s.slices.push_back(gen_constant(h, cplx(i * h0, 0.0)));
  }
  CHECK(dirac_residual(s) == doctest::Approx(1.0).epsilon(1e-13));

  // Constant slabs have zero residual.
  SlabField c;
  c.header = h;
  for (int i = 1; i <= 3; ++i) {
    c.x0_values.push_back(i * h0);
    c.slices.push_back(gen_constant(h, cplx(2.0, 1.0)));
  }
  CHECK(dirac_residual(c) == 0.0);

  SlabField two = c;
  two.x0_values.pop_back();
  two.slices.pop_back();
  CHECK_THROWS_AS(dirac_residual(two), std::invalid_argument);
}

TEST_CASE("slab interpolation") {
  const FieldHeader h = unit_header(1, 8);
  SlabField s;
  s.header = h;
  s.x0_values = {0.1, 0.3};
  // Slices are constants 1 and 3, so the value is linear in x0.
  s.slices.push_back(gen_constant(h, cplx(1.0, 0.0)));
  s.slices.push_back(gen_constant(h, cplx(3.0, 0.0)));

  Paravector q(0.2, {0.0});
  CHECK(slab_value_at(s, q).sc().real() == doctest::Approx(2.0).epsilon(1e-14));
  q.x0 = 0.1;
  CHECK(slab_value_at(s, q).sc().real() == doctest::Approx(1.0).epsilon(1e-14));

  // Horizontal multilinear rule: halfway between two grid points the value is
  // the average of the neighbors.
  GridField g(h);
  for (std::int64_t p = 0; p < h.num_points(); ++p) g.at(p, 0) = cplx(double(p * p), 0.0);
  SlabField t;
  t.header = h;
  t.x0_values = {0.1, 0.3};
  t.slices = {g, g};
  const double hh = h.spacing(0);
  Paravector mid(0.2, {-0.5 + 2.5 * hh});  // between points 2 and 3
  CHECK(slab_value_at(t, mid).sc().real() == doctest::Approx(0.5 * (4.0 + 9.0)).epsilon(1e-13));

  q.x0 = 0.5;
  CHECK_THROWS_AS(slab_value_at(s, q), std::domain_error);
  Paravector wrong(0.2, {0.0, 0.0});
  CHECK_THROWS_AS(slab_value_at(s, wrong), std::invalid_argument);
}

namespace {

SlabField sampled_slab(const FieldHeader& h, const std::vector<double>& x0s,
                       double (*v)(double, const std::vector<double>&)) {
  SlabField s;
  s.header = h;
  s.x0_values = x0s;
  for (double x0 : x0s) {
    GridField slice(h);
    for (std::int64_t p = 0; p < h.num_points(); ++p)
      slice.at(p, 0) = cplx(v(x0, slice.coords(p)), 0.0);
    s.slices.push_back(std::move(slice));
  }
  return s;
}

double v_affine(double x0, const std::vector<double>& x) {
  return 0.7 + 1.3 * x0 - 0.4 * x[0];
}
double v_sq(double, const std::vector<double>& x) {
  double sq = 0.0;
  for (double u : x) sq += u * u;
  return sq;
}

}  // namespace

TEST_CASE("ball average rule") {
  const FieldHeader h = unit_header(1, 64);
  const std::vector<double> x0s = {0.05, 0.30, 0.55};
  Paravector center(0.30, {0.0});

  // Constants and affine data are harmonic and integrate exactly.
  SlabField cs;
  cs.header = h;
  cs.x0_values = x0s;
  for (std::size_t i = 0; i < x0s.size(); ++i) cs.slices.push_back(gen_constant(h, cplx(2.5, -1.0)));
  CHECK(mean_value_defect(cs, center, 0.25) <= 1e-13);

  const SlabField af = sampled_slab(h, x0s, v_affine);
  CHECK(mean_value_defect(af, center, 0.2) <= 1e-12);

  // |x|^2 horizontally: defect is exactly n R^2 / (n + 3) up to the O(h^2)
  // interpolation error of the quadratic between grid nodes.
  const SlabField sq = sampled_slab(h, x0s, v_sq);
  const double R = 0.25;
  const double want = 1.0 * R * R / 4.0;
  CHECK(mean_value_defect(sq, center, R) == doctest::Approx(want).epsilon(1e-2));

  // Preconditions.
  CHECK_THROWS_AS(mean_value_defect(af, center, 1.5 * h.spacing(0)), std::invalid_argument);
  CHECK_THROWS_AS(mean_value_defect(af, center, 0.3), std::domain_error);  // exits slab
  Paravector wrong(0.30, {0.0, 0.0});
  CHECK_THROWS_AS(mean_value_defect(af, wrong, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(mean_value_defect(af, center, -0.1), std::invalid_argument);
}

TEST_CASE("build_slab dispatches the three methods consistently") {
  const FieldHeader h = unit_header(1, 32);
  const GridField f = hardy_project(Sign::plus, gen_gaussian_ring(h, 6.0, 4.0 / 3.0, 3, false));
  const double fl2 = f.l2_norm();
  const double hh = h.spacing(0);
  const std::vector<double> x0s = {2.0 * hh, 3.0 * hh, 4.0 * hh};
  const SlabField sp = build_slab(f, x0s, ExtendMethod::spectral);
  const SlabField po = build_slab(f, x0s, ExtendMethod::poisson);
  const SlabField ca = build_slab(f, x0s, ExtendMethod::cauchy);
  for (std::size_t i = 0; i < x0s.size(); ++i) {
    CHECK(rel_gap(sp.slices[i], poisson_extend(f, x0s[i])) <= 1e-12);  // f is Hardy-projected
    CHECK(rel_gap(po.slices[i], sp.slices[i]) <= 1e-12);
    // Single-cell quadrature error is absolute at the boundary-data scale,
    // so the Cauchy route is compared against the boundary norm.
    CHECK((ca.slices[i] - sp.slices[i]).l2_norm() <= 1e-3 * fl2);
  }
}
