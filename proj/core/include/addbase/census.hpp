#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "addbase/intset.hpp"

namespace addbase {

struct CensusConfig {
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  Int modulus_max = 360;
  Int exceptional_max = 8;
  double residue_density = 0.5;  // in (0, 1]
  Int window_lo = 0;             // pairs (x, y) for the J_{x,y} bound
  Int window_hi = 120;
  bool order_oracle = false;     // also compare order() with windowed sumsets

  /// Throws InvalidInput when a field is out of range.
  void validate() const;
};

/// Retries per trial before random_basis gives up.
inline constexpr int kGenerationRetries = 1000;

/// Deterministic pseudo-random eventually periodic set; may or may not be a
/// basis. About half the draws concentrate the tail in one class modulo a
/// product of prime factors of m, so essential subsets actually occur.
PeriodicSet random_set(const CensusConfig& config, std::uint64_t trial, std::uint64_t attempt = 0);

/// Resamples random_set until the draw is a basis. Throws GenerationExhausted.
PeriodicSet random_basis(const CensusConfig& config, std::uint64_t trial);

struct Violation {
  std::string law;
  std::uint64_t trial = 0;
  std::string set;
  nlohmann::json detail;
};

struct LawTally {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

struct CensusReport {
  CensusConfig config;
  std::map<std::string, LawTally> laws;
  std::vector<Violation> violations;
  std::map<std::size_t, std::uint64_t> family_sizes;  // #essential subsets -> #bases
  std::uint64_t pairs_checked = 0;
  std::uint64_t bound_equalities = 0;                 // |J_{x,y}| = ω(|x-y|) >= 1
  std::uint64_t max_bound_equality = 0;               // largest such ω

  bool clean() const noexcept { return violations.empty(); }
  std::uint64_t violation_count() const noexcept { return violations.size(); }
};

/// Runs every law over the corpus random_basis(config, 0..trials-1).
CensusReport run_census(const CensusConfig& config);

/// Laws for a single basis; appends to report. Exposed for targeted tests.
void census_check(const CensusConfig& config, std::uint64_t trial, const PeriodicSet& s,
                  CensusReport& report);

void to_json(nlohmann::json& j, const CensusConfig& c);
void to_json(nlohmann::json& j, const CensusReport& r);

}  // namespace addbase
