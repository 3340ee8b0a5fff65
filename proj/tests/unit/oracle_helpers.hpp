#pragma once

// Test-only brute-force oracles. They work from raw descriptions and plain
// element lists, never from the canonical-form shortcuts under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "addbase/intset.hpp"

namespace addbase::testing {

inline bool raw_member(const RawDescription& raw, Int n) {
  if (std::find(raw.exceptional.begin(), raw.exceptional.end(), n) != raw.exceptional.end()) return true;
  if (n < raw.threshold) return false;
  const Int r = ((n % raw.modulus) + raw.modulus) % raw.modulus;
  return std::find(raw.residues.begin(), raw.residues.end(), r) != raw.residues.end();
}

inline std::vector<Int> raw_window(const RawDescription& raw, Int lo, Int hi) {
  std::vector<Int> out;
  for (Int n = lo; n < hi; ++n) {
    if (raw_member(raw, n)) out.push_back(n);
  }
  return out;
}

/// gcd over every pair, quadratic on purpose.
inline Int pairwise_gcd(const std::vector<Int>& xs) {
  Int g = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) g = std::gcd(g, xs[j] - xs[i]);
  }
  return g;
}

/// Sums of exactly h elements of `pool` (repetition allowed) that fall in
/// [0, limit), for a pool of nonnegative integers. Plain boolean DP.
inline std::vector<bool> hfold_upto(const std::vector<Int>& pool, int h, Int limit) {
  std::vector<bool> cur(static_cast<std::size_t>(limit), false);
  for (Int a : pool) {
    if (a >= 0 && a < limit) cur[static_cast<std::size_t>(a)] = true;
  }
  for (int round = 1; round < h; ++round) {
    std::vector<bool> next(static_cast<std::size_t>(limit), false);
    for (Int s = 0; s < limit; ++s) {
      if (!cur[static_cast<std::size_t>(s)]) continue;
      for (Int a : pool) {
        if (s + a >= 0 && s + a < limit) next[static_cast<std::size_t>(s + a)] = true;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

/// Random raw description: possibly redundant, possibly with negatives.
inline RawDescription random_raw(std::mt19937_64& rng, Int max_modulus = 24) {
  auto pick = [&](Int lo, Int hi) {
    return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  RawDescription raw;
  raw.modulus = pick(1, max_modulus);
  const Int e = pick(0, 6);
  for (Int i = 0; i < e; ++i) raw.exceptional.push_back(pick(-6, 3 * raw.modulus + 6));
  const Int mode = pick(0, 4);
  for (Int r = 0; r < raw.modulus; ++r) {
    if (mode != 0 && pick(0, 2) == 0) raw.residues.push_back(r);
  }
  raw.threshold = pick(-4, 3 * raw.modulus);
  return raw;
}

}  // namespace addbase::testing
