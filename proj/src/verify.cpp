//==============================================================================
// verify.cpp -- the named-residual battery behind the verify command.
//==============================================================================
#include "clifharm/verify.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "clifharm/bergman.hpp"
#include "clifharm/extension.hpp"
#include "clifharm/field_io.hpp"
#include "clifharm/finite_diff.hpp"
#include "clifharm/generators.hpp"
#include "clifharm/grid.hpp"
#include "clifharm/multivector.hpp"
#include "clifharm/spectral.hpp"
#include "clifharm/tolerances.hpp"
#include "clifharm/transforms.hpp"

namespace clifharm {

Profile parse_profile(const std::string& s) {
  if (s == "quick") return Profile::quick;
  if (s == "full") return Profile::full;
  throw std::invalid_argument("unknown profile '" + s + "' (expected quick or full)");
}

Mutation parse_mutation(const std::string& s) {
  if (s == "none") return Mutation::none;
  if (s == "riesz-sign") return Mutation::riesz_sign;
  throw std::invalid_argument("unknown mutation '" + s + "' (expected none or riesz-sign)");
}

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

int VerifyReport::failures() const {
  int f = 0;
  for (const auto& c : checks)
    if (!c.pass()) ++f;
  return f;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* profile_name(Profile p) { return p == Profile::quick ? "quick" : "full"; }
const char* mutation_name(Mutation m) { return m == Mutation::none ? "none" : "riesz-sign"; }

}  // namespace

std::string VerifyReport::machine_text() const {
  std::ostringstream out;
  out << "format=clifharm-verify-v1\n";
  out << "tolerances=" << tol::kVersion << "\n";
  out << "profile=" << profile_name(profile) << "\n";
  out << "seed=" << seed << "\n";
  out << "mutation=" << mutation_name(mutation) << "\n";
  for (const auto& c : checks) {
    out << "check=" << c.name << " residual=" << fmt_double(c.residual)
        << " tol=" << fmt_double(c.tolerance)
        << " status=" << (c.pass() ? "pass" : "fail") << "\n";
  }
  out << "result=" << (all_pass() ? "pass" : "fail") << " checks=" << checks.size()
      << " failures=" << failures() << "\n";
  return out.str();
}

std::string VerifyReport::human_text() const {
  std::size_t width = 4;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  std::ostringstream out;
  out << "verification battery (" << profile_name(profile) << " profile, seed " << seed
      << ", mutation " << mutation_name(mutation) << ", tolerances " << tol::kVersion << ")\n";
  for (const auto& c : checks) {
    out << (c.pass() ? "  ok   " : "  FAIL ") << c.name;
    for (std::size_t i = c.name.size(); i < width + 2; ++i) out << ' ';
    out << "residual " << fmt_double(c.residual) << "  tol " << fmt_double(c.tolerance) << "\n";
  }
  out << (all_pass() ? "all checks passed" : "FAILURES PRESENT") << " (" << checks.size()
      << " checks, " << failures() << " failed)\n";
  return out.str();
}

//==============================================================================
// battery
//==============================================================================

namespace {

struct Battery {
  VerifyReport report;
  Rng rng;
  bool mutate_riesz;

  Battery(Profile profile, std::uint64_t seed, Mutation mutation)
      : rng(seed ^ 0xc1f0'4a17'9e3d'55b1ull), mutate_riesz(mutation == Mutation::riesz_sign) {
    report.profile = profile;
    report.seed = seed;
    report.mutation = mutation;
  }

  void add(const std::string& name, double residual, double tolerance) {
    report.checks.push_back(VerifyCheck{name, residual, tolerance});
  }

  // The battery's view of the Riesz transform; the mutation hook lives here.
  GridField riesz_op(int j, const GridField& f) {
    GridField r = riesz(j, f);
    if (mutate_riesz) r *= cplx(-1.0, 0.0);
    return r;
  }

  Multivector random_multivector(int n, Rng& r) {
    Multivector m(n);
    for (int b = 0; b < (1 << n); ++b)
      m[static_cast<std::uint32_t>(b)] = cplx(r.normal(), r.normal());
    return m;
  }

  static double rel(double num, double den) { return den > 0.0 ? num / den : num; }

  static GridField left_mul(const Multivector& m, const GridField& f) {
    GridField out(f.header());
    const std::int64_t np = f.num_points();
    for (std::int64_t p = 0; p < np; ++p) out.set_value(p, m * f.value(p));
    return out;
  }

  static FieldHeader header_of(int n, std::int64_t d) {
    return FieldHeader(n, std::vector<std::int64_t>(n, d), std::vector<double>(n, 1.0));
  }

  // A field with prescribed lattice modes; lets the same continuum function be
  // sampled on grids of different resolution.
  struct Mode {
    std::vector<std::int64_t> m;
    Multivector value;
  };

  static GridField synthesize(const FieldHeader& h, const std::vector<Mode>& modes) {
    SpectralField g(h);
    for (const auto& mode : modes) {
      std::int64_t bin = g.bin_of_freq(mode.m);
      g.set_value(bin, g.value(bin) + mode.value);
    }
    return dft_inverse(g);
  }

  //----------------------------------------------------------------------------
  void algebra_checks() {
    double anti = 0.0;
    for (int n = 1; n <= 5; ++n) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          Multivector m = Multivector::basis(n, j) * Multivector::basis(n, k) +
                          Multivector::basis(n, k) * Multivector::basis(n, j);
          if (j == k) m -= Multivector::scalar(n, cplx(-2.0, 0.0));
          anti = std::max(anti, m.norm());
        }
      }
    }
    add("algebra-anticommutation", anti, tol::kAlgebraIdentity);

    double reorder_mismatches = 0.0;
    for (int n = 1; n <= 5; ++n) {
      for (std::uint32_t t = 0; t < (1u << n); ++t) {
        for (int j = 1; j <= n; ++j) {
          const BladeSignL bs = blade_sign_l(j, t, n);
          const BladeProduct bp = blade_product(1u << (j - 1), bs.t_j, n);
          const int sgn = (bs.l % 2 == 0) ? 1 : -1;
          if (sgn * bp.sign != 1 || bp.mask != t) reorder_mismatches += 1.0;
        }
      }
    }
    add("algebra-reorder-sign", reorder_mismatches, tol::kAlgebraIdentity);

    double assoc = 0.0, conj_check = 0.0, norm_check = 0.0;
    for (int n = 1; n <= 5; ++n) {
      for (int trial = 0; trial < 12; ++trial) {
        Multivector a = random_multivector(n, rng);
        Multivector b = random_multivector(n, rng);
        Multivector c = random_multivector(n, rng);
        const double scale = a.norm() * b.norm() * c.norm();
        assoc = std::max(assoc, rel(((a * b) * c - a * (b * c)).norm(), scale));
        conj_check = std::max(
            conj_check, rel((conjugate(a * b) - conjugate(b) * conjugate(a)).norm(),
                            a.norm() * b.norm()));
        const cplx sc = (conjugate(a) * a).sc();
        double sum_sq = 0.0;
        for (int t = 0; t < (1 << n); ++t) sum_sq += std::norm(a[static_cast<std::uint32_t>(t)]);
        norm_check = std::max(norm_check,
                              rel(std::abs(cplx(sum_sq, 0.0) - sc), sum_sq));
      }
    }
    add("algebra-associativity", assoc, tol::kAlgebraIdentity);
    add("algebra-conjugation-antiauto", conj_check, tol::kAlgebraIdentity);
    add("algebra-norm-consistency", norm_check, tol::kAlgebraIdentity);
  }

  //----------------------------------------------------------------------------
  void projector_checks(std::int64_t d) {
    const FieldHeader h = header_of(2, d);
    SpectralField probe(h);
    const Multivector one = Multivector::scalar(2, cplx(1.0, 0.0));
    double complete = 0.0, idem = 0.0, annih = 0.0, norm_dev = 0.0;
    for (std::int64_t bin = 0; bin < probe.num_bins(); ++bin) {
      const auto xi = probe.xi(bin);
      const Multivector cp = chi_projector(Sign::plus, xi);
      const Multivector cm = chi_projector(Sign::minus, xi);
      complete = std::max(complete, (cp + cm - one).norm());
      if (probe.is_dc(bin)) continue;
      idem = std::max(idem, (cp * cp - cp).norm());
      idem = std::max(idem, (cm * cm - cm).norm());
      annih = std::max(annih, (cp * cm).norm());
      annih = std::max(annih, (cm * cp).norm());
      norm_dev = std::max(norm_dev, std::abs(cp.norm() - 1.0 / std::sqrt(2.0)));
      norm_dev = std::max(norm_dev, std::abs(cm.norm() - 1.0 / std::sqrt(2.0)));
    }
    add("projector-completeness", complete, tol::kProjectorResidual);
    add("projector-idempotence", idem, tol::kProjectorResidual);
    add("projector-annihilation", annih, tol::kProjectorResidual);
    add("projector-norm", norm_dev, tol::kProjectorResidual);
  }

  //----------------------------------------------------------------------------
  void transform_checks(int n, std::int64_t d) {
    const std::string suffix = "-n" + std::to_string(n);
    const FieldHeader h = header_of(n, d);
    Rng local = rng.fork(100 + n);
    const GridField f = gen_random_bandlimited(h, d / 4, local.next_u64(), false);
    const GridField g = gen_random_bandlimited(h, d / 4, local.next_u64(), false);
    const double fn = f.l2_norm(), gn = g.l2_norm();

    add("dft-roundtrip" + suffix, rel((dft_inverse(dft_forward(f)) - f).l2_norm(), fn),
        tol::kExactIdentity);
    add("plancherel" + suffix, rel(plancherel_defect(f, g), fn * gn), tol::kPlancherel);
    add("hilbert-involution" + suffix, rel((hilbert(hilbert(f)) - f).l2_norm(), fn),
        tol::kHilbertInvolution);

    {
      GridField assembled(h);
      for (int j = 1; j <= n; ++j)
        assembled += left_mul(Multivector::basis(n, j), riesz_op(j, f));
      assembled *= cplx(-1.0, 0.0);
      add("hilbert-assembly" + suffix, rel((hilbert(f) - assembled).l2_norm(), fn),
          tol::kExactIdentity);
    }
    {
      GridField sq(h);
      for (int j = 1; j <= n; ++j) sq += riesz_op(j, riesz_op(j, f));
      add("riesz-square" + suffix, rel((sq + f).l2_norm(), fn), tol::kExactIdentity);
    }
    {
      const GridField f0 = gen_random_bandlimited(h, d / 4, local.next_u64(), true);
      GridField rhs = f0;
      for (int j = 1; j <= n; ++j) {
        GridField rj = riesz_op(j, f0);
        rhs -= left_mul(Multivector::basis(n, j), rj);
      }
      GridField lhs = hardy_project(Sign::plus, f0);
      lhs *= cplx(2.0, 0.0);
      add("vector-correspondence" + suffix, rel((lhs - rhs).l2_norm(), f0.l2_norm()),
          tol::kExactIdentity);
    }

    const GridField fp = hardy_project(Sign::plus, f);
    const GridField fm = hardy_project(Sign::minus, f);
    add("hardy-reconstruction" + suffix, rel((fp + fm - f).l2_norm(), fn), tol::kExactIdentity);
    add("hardy-idempotence" + suffix,
        rel((hardy_project(Sign::plus, fp) - fp).l2_norm(), fn), tol::kExactIdentity);
    add("hardy-annihilation" + suffix, rel(hardy_project(Sign::minus, fp).l2_norm(), fn),
        tol::kExactIdentity);

    {
      const SpectralField spec = dft_forward(fp);
      const double total = spec.total_energy();
      double worst = 0.0;
      for (std::int64_t bin = 0; bin < spec.num_bins(); ++bin) {
        if (spec.is_dc(bin)) continue;
        const Multivector minus_part = chi_projector(Sign::minus, spec.xi(bin)) * spec.value(bin);
        worst = std::max(worst, minus_part.norm_sq() / total);
      }
      add("spectrum-support" + suffix, worst, tol::kSpectrumSupportEnergy);
    }

    {
      const double nyq = h.nyquist_radius();
      double worst = 0.0;
      const PsiEnvelope envs[2] = {{0.25 * nyq, 0.5 * nyq, 1.0}, {0.125 * nyq, 0.375 * nyq, 2.0}};
      for (const auto& env : envs) {
        const SpectralField psi = make_psi_minus(h, env);
        const double pn = psi.l2_norm();
        worst = std::max(worst, rel(spectrum_pairing(fp, psi).norm(), fn * pn));
        const GridField gp = hardy_project(Sign::plus, g);
        worst = std::max(worst, rel(spectrum_pairing(gp, psi).norm(), gn * pn));
      }
      add("spectrum-pairing" + suffix, worst, tol::kSpectrumPairing);
    }
  }

  //----------------------------------------------------------------------------
  void extension_checks(int n, std::int64_t d, std::int64_t route_d) {
    const std::string suffix = "-n" + std::to_string(n);
    const FieldHeader h = header_of(n, d);
    const double hmax = h.max_spacing();
    Rng local = rng.fork(200 + n);
    const GridField f = gen_random_bandlimited(h, d / 4, local.next_u64(), false);
    const double fn = f.l2_norm();

    add("extension-factorization" + suffix,
        rel((spectral_extend(f, 3.0 * hmax) -
             poisson_extend(hardy_project(Sign::plus, f), 3.0 * hmax))
                .l2_norm(),
            fn),
        tol::kExactIdentity);
    add("poisson-semigroup" + suffix,
        rel((poisson_extend(poisson_extend(f, 2.0 * hmax), 3.0 * hmax) -
             poisson_extend(f, 5.0 * hmax))
                .l2_norm(),
            fn),
        tol::kExactIdentity);
    {
      const double na = spectral_extend(f, 2.0 * hmax).l2_norm();
      const double nb = spectral_extend(f, 6.0 * hmax).l2_norm();
      add("extension-monotonicity" + suffix, rel(std::max(0.0, nb - na), na),
          tol::kExactIdentity);
    }

    {
      // Coherent phases localize the packet away from the periodic seam, which
      // keeps the single-cell kernel quadrature honest.  The defect is
      // measured against the boundary norm: it is an absolute truncation
      // error at the data scale, while the extended slice itself decays like
      // e^{-2 pi x0 |xi|} and would make a slice-relative measure blow up.
      const FieldHeader hr = header_of(n, route_d);
      const double hh = hr.max_spacing();
      const double center = (route_d >= 64) ? 10.0 : 6.0;
      const double width = (route_d >= 64) ? 2.0 : 4.0 / 3.0;
      GridField data = hardy_project(
          Sign::plus, gen_gaussian_ring(hr, center, width, local.next_u64(), false));
      const double dn = data.l2_norm();
      double worst = 0.0;
      for (double mult : {2.0, 4.0, 8.0}) {
        const GridField a = spectral_extend(data, mult * hh);
        const GridField b = cauchy_extend(data, mult * hh);
        worst = std::max(worst, rel((a - b).l2_norm(), dn));
      }
      add("route-equivalence" + suffix, worst, tol::kRouteEquivalence);
    }
  }

  //----------------------------------------------------------------------------
  void linear_control_checks() {
    const FieldHeader h = header_of(1, 16);
    const double h0 = h.spacing(0);
    {
      SlabField s;
      s.header = h;
      for (int i = 1; i <= 3; ++i) {
        s.x0_values.push_back(i * h0);
        s.slices.push_back(gen_constant(h, cplx(i * h0, 0.0)));
      }
      add("dirac-linear-control", std::abs(dirac_residual(s) - 1.0), tol::kExactIdentity);
    }
    {
      // u_1(x) = x_0 with u_0 = 0 violates d u_0/d x_1 = d u_1/d x_0 by
      // exactly 1; the vertical direction is linear so the centered
      // differences are exact.
      std::vector<SlabField> comps(2);
      for (int j = 0; j < 2; ++j) {
        comps[j].header = h;
        for (int i = 1; i <= 3; ++i) {
          comps[j].x0_values.push_back(i * h0);
          comps[j].slices.push_back(
              gen_constant(h, j == 1 ? cplx(i * h0, 0.0) : cplx(0.0, 0.0)));
        }
      }
      add("gcr-linear-control", std::abs(gcr_residual(comps) - 1.0), tol::kExactIdentity);
    }
  }

  //----------------------------------------------------------------------------
  std::vector<Mode> draw_modes(int n, std::int64_t band, int count, bool scalar_only,
                               Rng& local) {
    std::vector<Mode> modes;
    while (static_cast<int>(modes.size()) < count) {
      Mode mode;
      mode.m.resize(n);
      std::int64_t linf = 0;
      for (int k = 0; k < n; ++k) {
        mode.m[k] = static_cast<std::int64_t>(local.next_u64() % (2 * band + 1)) - band;
        linf = std::max(linf, std::abs(mode.m[k]));
      }
      if (linf == 0) continue;
      bool dup = false;
      for (const auto& prev : modes) dup = dup || prev.m == mode.m;
      if (dup) continue;
      if (scalar_only) {
        mode.value = Multivector::scalar(n, cplx(local.normal(), local.normal()));
      } else {
        mode.value = random_multivector(n, local);
      }
      modes.push_back(std::move(mode));
    }
    return modes;
  }

  double slab_dirac_at(const FieldHeader& h, const std::vector<Mode>& modes, double a) {
    const double h0 = h.max_spacing();
    const GridField boundary = hardy_project(Sign::plus, synthesize(h, modes));
    SlabField s = build_slab(boundary, {a - h0, a, a + h0}, ExtendMethod::spectral);
    return dirac_residual(s);
  }

  double slab_gcr_at(const FieldHeader& h, const std::vector<Mode>& modes, double a) {
    const double h0 = h.max_spacing();
    const GridField boundary = hardy_project(Sign::plus, synthesize(h, modes));
    SlabField s = build_slab(boundary, {a - h0, a, a + h0}, ExtendMethod::spectral);
    return gcr_residual(conjugate_system_components(s));
  }

  static double band_distance(double ratio, double lo, double hi) {
    return std::max(0.0, std::max(lo - ratio, ratio - hi));
  }

  void convergence_checks(int n) {
    const std::string suffix = "-n" + std::to_string(n);
    const std::int64_t band = (n == 1) ? 4 : 3;
    Rng local = rng.fork(300 + n);
    {
      const auto modes = draw_modes(n, band, 6, false, local);
      const double coarse = slab_dirac_at(header_of(n, 16), modes, 0.25);
      const double fine = slab_dirac_at(header_of(n, 32), modes, 0.25);
      add("dirac-convergence" + suffix, band_distance(coarse / fine, tol::kConvergenceRatioLo,
                                                      tol::kConvergenceRatioHi),
          0.0);
    }
    {
      const auto modes = draw_modes(n, band, 6, true, local);
      const double coarse = slab_gcr_at(header_of(n, 16), modes, 0.25);
      const double fine = slab_gcr_at(header_of(n, 32), modes, 0.25);
      add("gcr-convergence" + suffix, band_distance(coarse / fine, tol::kConvergenceRatioLo,
                                                    tol::kConvergenceRatioHi),
          0.0);
    }
    {
      // The componentwise system's sign tables must assemble to exactly the
      // Dirac operator: compare its residual against the largest coefficient
      // of d0 F + sum_j e_j dj F built through the full product machinery, on
      // an arbitrary (non-monogenic) slab.
      const auto modes = draw_modes(n, band, 4, false, local);
      const FieldHeader h = header_of(n, 16);
      const GridField boundary = synthesize(h, modes);
      const double h0 = h.max_spacing();
      SlabField s = build_slab(boundary, {0.25 - h0, 0.25, 0.25 + h0}, ExtendMethod::poisson);
      const GridField d0 = slab_x0_derivative(s, 1);
      std::vector<GridField> dj;
      for (int j = 1; j <= n; ++j) dj.push_back(spatial_derivative(s.slices[1], j));
      double a = 0.0;
      for (std::int64_t p = 0; p < h.num_points(); ++p) {
        Multivector m = d0.value(p);
        for (int j = 1; j <= n; ++j)
          m += Multivector::basis(n, j) * dj[j - 1].value(p);
        for (int t = 0; t < h.num_blades(); ++t)
          a = std::max(a, std::abs(m[static_cast<std::uint32_t>(t)]));
      }
      const double b = generalized_cr_residual(s);
      add("gcr-dirac-consistency" + suffix, rel(std::abs(a - b), a), tol::kExactIdentity);
    }
  }

  //----------------------------------------------------------------------------
  void mean_value_checks(int n) {
    const std::string suffix = "-n" + std::to_string(n);
    const std::int64_t d = 128;
    const FieldHeader h = header_of(n, d);
    const double hs = h.max_spacing();
    Rng local = rng.fork(400 + n);

    // Axis modes only (|xi| = 1): interpolation error stays well under the
    // tolerance at this resolution.
    std::vector<Mode> modes;
    for (int k = 0; k < n; ++k) {
      for (int s = -1; s <= 1; s += 2) {
        Mode mode;
        mode.m.assign(n, 0);
        mode.m[k] = s;
        mode.value = Multivector::scalar(n, cplx(local.normal(), local.normal()));
        modes.push_back(std::move(mode));
      }
    }
    const GridField boundary = hardy_project(Sign::plus, synthesize(h, modes));

    std::vector<double> x0s;
    for (int i = 0; i <= 16; ++i) x0s.push_back((2.0 + 0.5 * i) * hs);
    SlabField s = build_slab(boundary, x0s, ExtendMethod::spectral);
    double scale = 0.0;
    for (const auto& slice : s.slices) scale = std::max(scale, slice.max_norm());

    Paravector center;
    center.x0 = 6.0 * hs;
    center.vec.assign(n, 0.0);
    const double defect = mean_value_defect(s, center, 4.0 * hs);
    add("mean-value" + suffix, rel(defect, scale), tol::kMeanValueDefect);

    // Control: |x|^2 horizontally is not harmonic in n+1 variables; its ball
    // average exceeds the center value by n r^2/(n+3).
    SlabField control;
    control.header = h;
    control.x0_values = {0.04, 0.30, 0.56};
    for (double x0 : control.x0_values) {
      GridField slice(h);
      for (std::int64_t p = 0; p < slice.num_points(); ++p) {
        const auto x = slice.coords(p);
        double sq = 0.0;
        for (double v : x) sq += v * v;
        slice.at(p, 0) = cplx(sq, 0.0);
      }
      control.slices.push_back(std::move(slice));
    }
    double cscale = 0.0;
    for (const auto& slice : control.slices) cscale = std::max(cscale, slice.max_norm());
    Paravector ccenter;
    ccenter.x0 = 0.30;
    ccenter.vec.assign(n, 0.0);
    const double cdefect = mean_value_defect(control, ccenter, 0.25);
    const double bound = tol::kMeanValueControlFactor * tol::kMeanValueDefect * cscale;
    add("mean-value-control" + suffix, rel(std::max(0.0, bound - cdefect), bound), 0.0);
  }

  //----------------------------------------------------------------------------
  static std::vector<double> geometric_heights(double lo, double hi, double step) {
    std::vector<double> x0s;
    for (double x = lo; x < hi; x *= 1.0 + step) x0s.push_back(x);
    x0s.push_back(hi);
    return x0s;
  }

  void bergman_checks(bool full) {
    // Closed form: a single lattice mode xi0 has |F(x)| constant horizontally,
    // so the A^p power is prod(L) (|chi_+ g| / prod(L))^p / (2 pi p |xi0|).
    for (double p : {1.0, 2.0}) {
      const FieldHeader h = header_of(1, 4);
      BergmanDensity G(h);
      G.set_value(G.bin_of_freq({1}), Multivector::scalar(1, cplx(1.0, 0.0)));
      const double xi0 = 1.0;
      const double a = 2.0 * kPi * p * xi0;
      SlabField s = bergman_slab(G, geometric_heights(1e-2 / a, 18.0 / a, 1e-3));
      const double quad = bergman_norm(s, p, xi0).value;
      const double amp = (chi_projector(Sign::plus, {xi0}) *
                          Multivector::scalar(1, cplx(1.0, 0.0)))
                             .norm();
      const double closed = std::pow(std::pow(amp, p) / (2.0 * kPi * p * xi0), 1.0 / p);
      char name[64];
      std::snprintf(name, sizeof name, "bergman-closed-form-p%g", p);
      add(name, rel(std::abs(quad - closed), closed), tol::kBergmanClosedForm);
    }

    {
      // Pointwise synthesis vs whole-slice synthesis.
      const FieldHeader h = header_of(1, 16);
      const BergmanDensity G = make_gaussian_ring_spectrum(h, 4.0, 2.0 / 3.0, 17, true);
      SlabField s = bergman_slab(G, {0.01, 0.1});
      double worst = 0.0;
      for (std::size_t si = 0; si < s.slices.size(); ++si) {
        const double scale = s.slices[si].max_norm();
        for (std::int64_t p = 0; p < s.slices[si].num_points(); p += 5) {
          Paravector x;
          x.x0 = s.x0_values[si];
          x.vec = s.slices[si].coords(p);
          const Multivector direct = bergman_from_density(G, x);
          worst = std::max(worst, rel((direct - s.slices[si].value(p)).norm(), scale));
        }
      }
      add("bergman-dual-route", worst, tol::kExactIdentity);
    }

    {
      struct DensitySpec {
        int n;
        std::int64_t d;
        double center, width;
        std::uint64_t seed;
        bool random_phase;
      };
      std::vector<DensitySpec> battery = {{1, 32, 8.0, 1.0, 3, false},
                                          {1, 32, 6.0, 1.2, 4, true}};
      if (full) battery.push_back({2, 16, 4.0, 2.0 / 3.0, 5, true});

      double worst[3] = {-1.0, -1.0, -1.0};
      const double ps[3] = {1.0, 1.5, 2.0};
      for (const auto& spec : battery) {
        const FieldHeader h = header_of(spec.n, spec.d);
        const BergmanDensity G = make_gaussian_ring_spectrum(h, spec.center, spec.width,
                                                             spec.seed, spec.random_phase);
        const double xi_lo = spec.center - 3.0 * spec.width;
        const double xi_hi = spec.center + 3.0 * spec.width;
        const double lo = 1e-2 / (2.0 * kPi * 2.0 * xi_hi);
        const double hi = 18.0 / (2.0 * kPi * 1.0 * xi_lo);
        SlabField s = bergman_slab(G, geometric_heights(lo, hi, 0.02));
        for (int i = 0; i < 3; ++i) {
          const double lhs = weighted_spectral_norm(G, ps[i]);
          const double rhs = bergman_norm(s, ps[i], xi_lo).value;
          worst[i] = std::max(worst[i], lhs / rhs - 1.0);
        }
      }
      add("bergman-inequality-p1", worst[0], tol::kBergmanSlack);
      add("bergman-inequality-p1.5", worst[1], tol::kBergmanSlack);
      add("bergman-inequality-p2", worst[2], tol::kBergmanSlack);
    }

    {
      const FieldHeader h = header_of(1, 32);
      const BergmanDensity G = make_gaussian_ring_spectrum(h, 8.0, 1.0, 9, true);
      SlabField s = bergman_slab(G, {0.01, 0.05, 0.2});
      const SpectralField psi = make_psi_minus(h, {2.0, 14.0, 1.0});
      const double pn = psi.l2_norm();
      double worst = 0.0;
      for (const auto& slice : s.slices)
        worst = std::max(worst, rel(spectrum_pairing(slice, psi).norm(),
                                    slice.l2_norm() * pn));
      add("bergman-slice-pairing", worst, tol::kBergmanSlicePairing);

      const GridField stepped = poisson_extend(s.slices[0], 0.04);
      add("bergman-semigroup", rel((stepped - s.slices[1]).l2_norm(), s.slices[1].l2_norm()),
          tol::kExactIdentity);
    }
  }

  //----------------------------------------------------------------------------
  void run() {
    const bool full = report.profile == Profile::full;
    algebra_checks();
    projector_checks(full ? 64 : 32);
    transform_checks(1, full ? 64 : 32);
    transform_checks(2, full ? 64 : 32);
    if (full) transform_checks(3, 32);
    extension_checks(1, full ? 64 : 32, 64);
    extension_checks(2, full ? 64 : 32, full ? 64 : 32);
    linear_control_checks();
    convergence_checks(1);
    convergence_checks(2);
    mean_value_checks(1);
    if (full) mean_value_checks(2);
    bergman_checks(full);
  }
};

}  // namespace

VerifyReport run_verify(Profile profile, std::uint64_t seed, Mutation mutation) {
  Battery battery(profile, seed, mutation);
  battery.run();
  return battery.report;
}

}  // namespace clifharm
