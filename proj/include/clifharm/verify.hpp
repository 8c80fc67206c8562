//==============================================================================
// verify.hpp
// The self-verification battery: every operator identity the library claims,
// run at one of two desk-scale profiles, reported as named residuals against
// the pinned tolerance table. Deterministic given (profile, seed, mutation);
// the machine report is byte-stable across runs.
//
// The mutation hook deliberately corrupts one operator inside the battery
// (currently: flipping the sign of every Riesz transform output) so that the
// suite can demonstrate it actually detects a broken multiplier.
//==============================================================================
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clifharm {

enum class Profile { quick, full };
enum class Mutation { none, riesz_sign };

Profile parse_profile(const std::string& s);
Mutation parse_mutation(const std::string& s);

struct VerifyCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return residual <= tolerance; }
};

struct VerifyReport {
  Profile profile = Profile::quick;
  std::uint64_t seed = 0;
  Mutation mutation = Mutation::none;
  std::vector<VerifyCheck> checks;

  bool all_pass() const;
  int failures() const;
  // Line-oriented key=value form; byte-identical for identical inputs.
  std::string machine_text() const;
  // Aligned human-readable table with a summary line.
  std::string human_text() const;
};

VerifyReport run_verify(Profile profile, std::uint64_t seed,
                        Mutation mutation = Mutation::none);

}  // namespace clifharm
