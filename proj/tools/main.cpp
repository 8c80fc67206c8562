//==============================================================================
// main.cpp -- command-line front end.
// Verbs: gen, decompose, extend, riesz, hilbert, verify, bergman.
// Field files use the CFLD1 format owned by field_io; verify's stdout is the
// machine report and its exit status is 0 exactly when every check passed.
//==============================================================================
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clifharm/bergman.hpp"
#include "clifharm/extension.hpp"
#include "clifharm/field_io.hpp"
#include "clifharm/generators.hpp"
#include "clifharm/grid.hpp"
#include "clifharm/spectral.hpp"
#include "clifharm/tolerances.hpp"
#include "clifharm/transforms.hpp"
#include "clifharm/verify.hpp"

namespace {

using namespace clifharm;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

FieldHeader header_from_flags(const std::vector<std::int64_t>& dims,
                              std::vector<double> extent, int n_flag) {
  if (dims.empty()) throw CLI::ValidationError("--dims is required");
  const int n = static_cast<int>(dims.size());
  if (n_flag != 0 && n_flag != n)
    throw CLI::ValidationError("--n disagrees with the number of --dims entries");
  if (extent.empty()) extent.assign(n, 1.0);
  if (static_cast<int>(extent.size()) == 1 && n > 1) extent.assign(n, extent[0]);
  return FieldHeader(n, dims, extent);
}

void emit(const GridField& f, const std::string& out, const std::string& csv) {
  write_field(out, f);
  if (!csv.empty()) write_csv(csv, f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford harmonic analysis toolkit: Hardy projections, Riesz/Hilbert "
               "transforms, monogenic extensions, Bergman norms, verification suite"};
  app.require_subcommand(1);

  // ---- gen ------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "synthesize a field file");
  std::string gen_kind, gen_out, gen_csv;
  std::vector<std::int64_t> gen_dims, gen_mode;
  std::vector<double> gen_extent, gen_value = {1.0, 0.0};
  int gen_n = 0;
  std::int64_t gen_band = 4;
  std::uint64_t gen_seed = 1;
  double gen_center = 0.0, gen_width = 0.0;
  bool gen_random_phase = false, gen_scalar = false;
  gen->add_option("generator", gen_kind,
                  "constant | plane-wave | gaussian-ring | random-bandlimited")
      ->required();
  gen->add_option("--out", gen_out, "output CFLD1 path")->required();
  gen->add_option("--dims", gen_dims, "per-axis sample counts, comma separated")
      ->delimiter(',')
      ->required();
  gen->add_option("--extent", gen_extent, "per-axis box lengths (default 1)")->delimiter(',');
  gen->add_option("--n", gen_n, "dimension (must match --dims if given)");
  gen->add_option("--value", gen_value, "constant value as re[,im]")->delimiter(',');
  gen->add_option("--m", gen_mode, "plane-wave integer mode, comma separated")->delimiter(',');
  gen->add_option("--center", gen_center, "gaussian-ring radial center frequency");
  gen->add_option("--width", gen_width, "gaussian-ring radial width");
  gen->add_option("--band", gen_band, "random-bandlimited max |m| per axis");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_flag("--random-phase", gen_random_phase, "randomize gaussian-ring phases");
  gen->add_flag("--scalar", gen_scalar, "random-bandlimited: scalar blade only");
  gen->add_option("--csv", gen_csv, "also write a lossy CSV export here");

  // ---- decompose ------------------------------------------------------------
  auto* dec = app.add_subcommand("decompose", "Hardy split into plus and minus parts");
  std::string dec_in, dec_plus, dec_minus;
  dec->add_option("--in", dec_in, "input CFLD1 path")->required();
  dec->add_option("--out-plus", dec_plus, "output path for the plus part")->required();
  dec->add_option("--out-minus", dec_minus, "output path for the minus part")->required();

  // ---- extend ---------------------------------------------------------------
  auto* ext = app.add_subcommand("extend", "extend boundary data to height x0");
  std::string ext_in, ext_out, ext_method = "spectral", ext_csv;
  double ext_x0 = 0.0;
  ext->add_option("--in", ext_in, "input CFLD1 path")->required();
  ext->add_option("--out", ext_out, "output CFLD1 path")->required();
  ext->add_option("--x0", ext_x0, "height (> 0)")->required();
  ext->add_option("--method", ext_method, "poisson | cauchy | spectral");
  ext->add_option("--csv", ext_csv, "also write a lossy CSV export here");

  // ---- riesz ----------------------------------------------------------------
  auto* rz = app.add_subcommand("riesz", "apply the j-th Riesz transform");
  std::string rz_in, rz_out, rz_csv;
  int rz_axis = 1;
  rz->add_option("--in", rz_in, "input CFLD1 path")->required();
  rz->add_option("--out", rz_out, "output CFLD1 path")->required();
  rz->add_option("--axis", rz_axis, "axis j in 1..n")->required();
  rz->add_option("--csv", rz_csv, "also write a lossy CSV export here");

  // ---- hilbert --------------------------------------------------------------
  auto* hb = app.add_subcommand("hilbert", "apply the Hilbert transformation");
  std::string hb_in, hb_out, hb_csv;
  hb->add_option("--in", hb_in, "input CFLD1 path")->required();
  hb->add_option("--out", hb_out, "output CFLD1 path")->required();
  hb->add_option("--csv", hb_csv, "also write a lossy CSV export here");

  // ---- verify ---------------------------------------------------------------
  auto* vf = app.add_subcommand("verify", "run the verification battery");
  std::string vf_profile = "quick", vf_mutate = "none";
  std::uint64_t vf_seed = 1;
  bool vf_human = false;
  vf->add_option("--profile", vf_profile, "quick | full");
  vf->add_option("--seed", vf_seed, "battery seed");
  vf->add_option("--mutate", vf_mutate,
                 "none | riesz-sign (deliberately corrupt an operator)");
  vf->add_flag("--human", vf_human, "print the human-readable report instead");

  // ---- bergman --------------------------------------------------------------
  auto* bg = app.add_subcommand("bergman", "weighted spectral norm vs slab norm");
  std::string bg_density = "gaussian-ring", bg_report;
  std::vector<std::int64_t> bg_dims, bg_mode;
  std::vector<double> bg_extent;
  int bg_n = 0;
  double bg_p = 2.0, bg_center = 0.0, bg_width = 0.0;
  std::uint64_t bg_seed = 1;
  bool bg_random_phase = false;
  bg->add_option("--density", bg_density, "gaussian-ring | single-mode | zero");
  bg->add_option("--dims", bg_dims, "per-axis sample counts")->delimiter(',')->required();
  bg->add_option("--extent", bg_extent, "per-axis box lengths (default 1)")->delimiter(',');
  bg->add_option("--n", bg_n, "dimension (must match --dims if given)");
  bg->add_option("--p", bg_p, "exponent: 1 (sup form) or in (1,2]");
  bg->add_option("--center", bg_center, "gaussian-ring radial center frequency");
  bg->add_option("--width", bg_width, "gaussian-ring radial width");
  bg->add_option("--m", bg_mode, "single-mode frequency, comma separated")->delimiter(',');
  bg->add_option("--seed", bg_seed, "phase seed for gaussian-ring");
  bg->add_flag("--random-phase", bg_random_phase, "randomize gaussian-ring phases");
  bg->add_option("--report", bg_report, "also write the report to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const FieldHeader h = header_from_flags(gen_dims, gen_extent, gen_n);
      GridField f(h);
      if (gen_kind == "constant") {
        if (gen_value.empty() || gen_value.size() > 2)
          throw std::invalid_argument("--value takes re or re,im");
        const cplx v(gen_value[0], gen_value.size() == 2 ? gen_value[1] : 0.0);
        f = gen_constant(h, v);
      } else if (gen_kind == "plane-wave") {
        f = gen_plane_wave(h, gen_mode);
      } else if (gen_kind == "gaussian-ring") {
        f = gen_gaussian_ring(h, gen_center, gen_width, gen_seed, gen_random_phase);
      } else if (gen_kind == "random-bandlimited") {
        f = gen_random_bandlimited(h, gen_band, gen_seed, gen_scalar);
      } else {
        throw std::invalid_argument("unknown generator '" + gen_kind + "'");
      }
      emit(f, gen_out, gen_csv);
      std::cout << "op=gen kind=" << gen_kind << " out=" << gen_out
                << " points=" << h.num_points() << "\n";
    } else if (*dec) {
      const GridField f = read_field(dec_in);
      const GridField fp = hardy_project(Sign::plus, f);
      const GridField fm = hardy_project(Sign::minus, f);
      write_field(dec_plus, fp);
      write_field(dec_minus, fm);
      const double fn = f.l2_norm();
      const double recon = (fp + fm - f).l2_norm();
      std::cout << "op=decompose in=" << dec_in << " dc=half-split"
                << " norm_in=" << fmt(fn) << " norm_plus=" << fmt(fp.l2_norm())
                << " norm_minus=" << fmt(fm.l2_norm())
                << " reconstruction_residual=" << fmt(recon) << "\n";
    } else if (*ext) {
      const GridField f = read_field(ext_in);
      GridField out(f.header());
      if (ext_method == "poisson") out = poisson_extend(f, ext_x0);
      else if (ext_method == "spectral") out = spectral_extend(f, ext_x0);
      else if (ext_method == "cauchy") out = cauchy_extend(f, ext_x0);
      else throw std::invalid_argument("unknown method '" + ext_method + "'");
      emit(out, ext_out, ext_csv);
      std::cout << "op=extend method=" << ext_method << " x0=" << fmt(ext_x0)
                << " out=" << ext_out << " norm_out=" << fmt(out.l2_norm()) << "\n";
    } else if (*rz) {
      const GridField f = read_field(rz_in);
      const GridField out = riesz(rz_axis, f);
      emit(out, rz_out, rz_csv);
      std::cout << "op=riesz axis=" << rz_axis << " dc=suppressed out=" << rz_out
                << " norm_out=" << fmt(out.l2_norm()) << "\n";
    } else if (*hb) {
      const GridField f = read_field(hb_in);
      const GridField out = hilbert(f);
      emit(out, hb_out, hb_csv);
      std::cout << "op=hilbert dc=suppressed out=" << hb_out
                << " norm_out=" << fmt(out.l2_norm()) << "\n";
    } else if (*vf) {
      const VerifyReport report =
          run_verify(parse_profile(vf_profile), vf_seed, parse_mutation(vf_mutate));
      std::cout << (vf_human ? report.human_text() : report.machine_text());
      return report.all_pass() ? 0 : 1;
    } else if (*bg) {
      const FieldHeader h = header_from_flags(bg_dims, bg_extent, bg_n);
      BergmanDensity G(h);
      double xi_lo = 0.0, xi_hi = 0.0;
      if (bg_density == "gaussian-ring") {
        G = make_gaussian_ring_spectrum(h, bg_center, bg_width, bg_seed, bg_random_phase);
        xi_lo = std::max(bg_center - 3.0 * bg_width, h.min_nonzero_freq());
        xi_hi = bg_center + 3.0 * bg_width;
      } else if (bg_density == "single-mode") {
        if (bg_mode.empty()) throw std::invalid_argument("single-mode density needs --m");
        const std::int64_t bin = G.bin_of_freq(bg_mode);
        G.set_value(bin, Multivector::scalar(h.n, cplx(1.0, 0.0)));
        double mag = 0.0;
        const auto xi = G.xi(bin);
        for (double v : xi) mag += v * v;
        xi_lo = xi_hi = std::sqrt(mag);
        if (xi_lo == 0.0) throw std::invalid_argument("single-mode density must not sit at DC");
      } else if (bg_density != "zero") {
        throw std::invalid_argument("unknown density '" + bg_density + "'");
      }

      std::ostringstream rep;
      rep << "op=bergman density=" << bg_density << " p=" << fmt(bg_p)
          << " tolerances=" << tol::kVersion << "\n";
      double lhs = 0.0, rhs = 0.0, tail = 0.0;
      if (bg_density != "zero") {
        lhs = weighted_spectral_norm(G, bg_p);
        std::vector<double> x0s;
        const double lo = 1e-2 / (2.0 * kPi * 2.0 * xi_hi);
        const double hi = 18.0 / (2.0 * kPi * xi_lo);
        for (double x = lo; x < hi; x *= 1.01) x0s.push_back(x);
        x0s.push_back(hi);
        const BergmanNormResult r = bergman_norm(bergman_slab(G, x0s), bg_p, xi_lo);
        rhs = r.value;
        tail = r.tail_bound;
      }
      rep << "weighted_spectral_norm=" << fmt(lhs) << "\n";
      rep << "slab_norm=" << fmt(rhs) << "\n";
      rep << "ratio=" << fmt(rhs > 0.0 ? lhs / rhs : 0.0) << "\n";
      rep << "tail_bound=" << fmt(tail) << "\n";
      std::cout << rep.str();
      if (!bg_report.empty()) {
        std::ofstream out(bg_report, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open report path " + bg_report);
        out << rep.str();
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
