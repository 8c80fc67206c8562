//==============================================================================
// test_bergman.cpp -- density synthesis, slab norms, weighted spectral norm.
// The single-mode case is fully solvable: both sides of the norm inequality
// have closed forms and coincide, which pins the quadrature and the weight
// bookkeeping at once (including non-unit boxes). Ring densities exercise the
// strict-inequality direction.
//==============================================================================
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "clifharm/bergman.hpp"
#include "clifharm/generators.hpp"
#include "clifharm/grid.hpp"
#include "clifharm/multivector.hpp"
#include "clifharm/spectral.hpp"

using namespace clifharm;

namespace {

std::vector<double> geometric_heights(double lo, double hi, double step) {
  std::vector<double> x0s;
  for (double x = lo; x < hi; x *= 1.0 + step) x0s.push_back(x);
  x0s.push_back(hi);
  return x0s;
}

}  // namespace

TEST_CASE("pointwise synthesis of a single mode") {
  FieldHeader h(1, {8}, {2.0});
  BergmanDensity G(h);
  const cplx g(0.8, -0.6);
  G.set_value(G.bin_of_freq({2}), Multivector::scalar(1, g));  // xi = 1

  Paravector x(0.3, {0.45});
  const Multivector got = bergman_from_density(G, x);
  Multivector want = e_kernel(Sign::plus, x.x0, x.vec, {1.0}) * cplx(g) *
                     cplx(1.0 / h.box_volume(), 0.0);
  CHECK((got - want).norm() <= 1e-14);

  CHECK_THROWS_AS(bergman_from_density(G, Paravector(0.0, {0.45})), std::domain_error);
  CHECK_THROWS_AS(bergman_from_density(G, Paravector(0.3, {0.1, 0.1})), std::invalid_argument);

  const BergmanDensity zero(h);
  CHECK(bergman_from_density(zero, x).norm() == 0.0);
}

TEST_CASE("slice synthesis agrees with the pointwise sum") {
  const FieldHeader h(1, {16}, {1.0});
  const BergmanDensity G = make_gaussian_ring_spectrum(h, 4.0, 1.0, 21, true);
  const SlabField s = bergman_slab(G, {0.02, 0.09});
  for (std::size_t i = 0; i < s.slices.size(); ++i) {
    const double scale = s.slices[i].max_norm();
    for (std::int64_t p = 0; p < h.num_points(); ++p) {
      Paravector x(s.x0_values[i], s.slices[i].coords(p));
      CHECK((bergman_from_density(G, x) - s.slices[i].value(p)).norm() <= 1e-12 * scale);
    }
  }
  CHECK_THROWS_AS(bergman_slab(G, {0.1, 0.0}), std::domain_error);
}

TEST_CASE("single-mode closed forms: quadrature and weighted norm coincide") {
  // Box of length 2, mode m = 2 (xi = 1), unit scalar coefficient. The slab
  // norm has the closed form [prodL (|chi_+ g|/prodL)^p / (2 pi p)]^{1/p} and
  // the weighted spectral norm equals it exactly, for every admissible p.
  FieldHeader h(1, {8}, {2.0});
  BergmanDensity G(h);
  G.set_value(G.bin_of_freq({2}), Multivector::scalar(1, cplx(1.0, 0.0)));
  const double amp = 1.0 / std::sqrt(2.0);  // |chi_+(1) * 1|

  for (double p : {1.0, 1.5, 2.0}) {
    const double closed =
        std::pow(h.box_volume() * std::pow(amp / h.box_volume(), p) / (2.0 * kPi * p),
                 1.0 / p);
    const double wsn = weighted_spectral_norm(G, p);
    CHECK(wsn == doctest::Approx(closed).epsilon(1e-12));

    const double a = 2.0 * kPi * p;
    const SlabField s = bergman_slab(G, geometric_heights(1e-2 / a, 18.0 / a, 1e-3));
    const BergmanNormResult r = bergman_norm(s, p, 1.0);
    CHECK(r.value == doctest::Approx(closed).epsilon(1e-6));
    CHECK(r.tail_bound <= 1e-7 * std::pow(closed, p));
  }
}

TEST_CASE("norm inequality on ring densities") {
  const FieldHeader h(1, {32}, {1.0});
  const BergmanDensity G = make_gaussian_ring_spectrum(h, 8.0, 1.0, 5, true);
  const double xi_lo = 5.0, xi_hi = 11.0;
  const SlabField s = bergman_slab(
      G, geometric_heights(1e-2 / (4.0 * kPi * xi_hi), 18.0 / (2.0 * kPi * xi_lo), 0.02));
  for (double p : {1.0, 1.5, 2.0}) {
    const double lhs = weighted_spectral_norm(G, p);
    const double rhs = bergman_norm(s, p, xi_lo).value;
    CHECK(lhs <= rhs * (1.0 + 1e-2));
  }
}

TEST_CASE("density scaling moves both norms linearly") {
  const FieldHeader h(1, {16}, {1.0});
  BergmanDensity G = make_gaussian_ring_spectrum(h, 4.0, 1.0, 31, true);
  BergmanDensity G2 = G;
  G2 *= cplx(0.0, -3.0);  // modulus 3
  for (double p : {1.0, 2.0})
    CHECK(weighted_spectral_norm(G2, p) ==
          doctest::Approx(3.0 * weighted_spectral_norm(G, p)).epsilon(1e-12));
  const SlabField s = bergman_slab(G2, {0.05, 0.1});
  const SlabField s1 = bergman_slab(G, {0.05, 0.1});
  CHECK(s.slices[0].l2_norm() ==
        doctest::Approx(3.0 * s1.slices[0].l2_norm()).epsilon(1e-12));
}

TEST_CASE("hand-checked trapezoid, head and tail bookkeeping") {
  // Two constant slices: c = 2 at x0 = 0.1 and c = 1 at x0 = 0.3, p = 2.
  // I(0.1) = 4, I(0.3) = 1; trapezoid 0.5*(4+1)*0.2 = 0.5; extrapolated
  // I(0) = 4 - (-15)(0.1) = 5.5 gives head 0.5*(5.5+4)*0.1 = 0.475.
  FieldHeader h(1, {4}, {1.0});
  SlabField s;
  s.header = h;
  s.x0_values = {0.1, 0.3};
  s.slices.push_back(gen_constant(h, cplx(2.0, 0.0)));
  s.slices.push_back(gen_constant(h, cplx(1.0, 0.0)));
  const BergmanNormResult r = bergman_norm(s, 2.0, 1.0);
  CHECK(r.value == doctest::Approx(std::sqrt(0.975)).epsilon(1e-13));
  CHECK(r.tail_bound == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-13));

  // Without a frequency floor the tail is unbounded unless the slab died out.
  CHECK(std::isinf(bergman_norm(s, 2.0, 0.0).tail_bound));
  SlabField dead = s;
  dead.slices[1] = gen_constant(h, cplx(0.0, 0.0));
  CHECK(bergman_norm(dead, 2.0, 0.0).tail_bound == 0.0);

  CHECK_THROWS_AS(bergman_norm(s, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bergman_norm(s, 2.0, -1.0), std::invalid_argument);
}

TEST_CASE("weighted norm argument checking") {
  FieldHeader h(1, {8}, {1.0});
  BergmanDensity G(h);
  G.set_value(G.bin_of_freq({1}), Multivector::scalar(1, cplx(1.0, 0.0)));
  CHECK_THROWS_AS(weighted_spectral_norm(G, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(weighted_spectral_norm(G, 2.5), std::invalid_argument);
  CHECK_NOTHROW(weighted_spectral_norm(G, 2.0));

  // A DC component meets the singular weight and is rejected.
  BergmanDensity bad = G;
  bad.set_value(bad.bin_of_freq({0}), Multivector::scalar(1, cplx(0.5, 0.0)));
  CHECK_THROWS_AS(weighted_spectral_norm(bad, 2.0), std::domain_error);

  // The zero density has zero norm under both forms.
  const BergmanDensity zero(h);
  CHECK(weighted_spectral_norm(zero, 1.0) == 0.0);
  CHECK(weighted_spectral_norm(zero, 2.0) == 0.0);

  // Sup form picks the largest weighted coefficient.
  BergmanDensity two(h);
  two.set_value(two.bin_of_freq({1}), Multivector::scalar(1, cplx(4.0, 0.0)));
  two.set_value(two.bin_of_freq({2}), Multivector::scalar(1, cplx(6.0, 0.0)));
  const double amp = 1.0 / std::sqrt(2.0);
  const double want = std::max(4.0 * amp / (2.0 * kPi * 1.0), 6.0 * amp / (2.0 * kPi * 2.0));
  CHECK(weighted_spectral_norm(two, 1.0) == doctest::Approx(want).epsilon(1e-13));
}
