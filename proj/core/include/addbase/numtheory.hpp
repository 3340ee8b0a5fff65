#pragma once

#include <cstdint>
#include <vector>

namespace addbase {

using Int = std::int64_t;

// Euclidean remainder in [0, m) for m > 0, also for negative n.
constexpr Int floor_mod(Int n, Int m) noexcept {
  Int r = n % m;
  return r < 0 ? r + m : r;
}

Int gcd(Int a, Int b) noexcept;
Int lcm(Int a, Int b);

/// Positive divisors of n >= 1, ascending.
std::vector<Int> divisors(Int n);

/// Distinct prime factors of |n|, ascending. Empty for |n| <= 1.
std::vector<Int> prime_factors(Int n);

bool is_prime(Int n) noexcept;

}  // namespace addbase
