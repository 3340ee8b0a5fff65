#include "addbase/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "addbase/error.hpp"

namespace addbase {

Int gcd(Int a, Int b) noexcept { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = std::gcd(a, b);
  Int q = (a < 0 ? -a : a) / g;
  Int r = b < 0 ? -b : b;
  Int out = 0;
  if (__builtin_mul_overflow(q, r, &out)) {
    throw Error(Errc::InvalidRange, "lcm overflows 64 bits");
  }
  return out;
}

std::vector<Int> divisors(Int n) {
  if (n < 1) throw Error(Errc::InvalidInput, "divisors of a non-positive integer");
  std::vector<Int> low, high;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<Int> prime_factors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(Int n) noexcept {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace addbase
