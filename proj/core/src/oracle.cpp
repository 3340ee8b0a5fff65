#include "addbase/oracle.hpp"

#include <algorithm>
#include <bit>

#include "addbase/basis.hpp"
#include "addbase/error.hpp"

namespace addbase {
namespace {

struct Bits {
  std::size_t size = 0;
  std::vector<std::uint64_t> words;

  explicit Bits(std::size_t n) : size(n), words((n + 63) / 64, 0) {}

  bool test(std::size_t i) const { return i < size && ((words[i / 64] >> (i % 64)) & 1U); }
  void set(std::size_t i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // this |= src << shift, truncated to size.
  void or_shifted(const Bits& src, std::size_t shift) {
    if (shift >= size) return;
    const std::size_t ws = shift / 64;
    const unsigned bs = static_cast<unsigned>(shift % 64);
    const std::size_t n = words.size();
    for (std::size_t i = 0; i + ws < n && i < src.words.size(); ++i) {
      words[i + ws] |= src.words[i] << bs;
      if (bs != 0 && i + ws + 1 < n) words[i + ws + 1] |= src.words[i] >> (64 - bs);
    }
    if (size % 64 != 0) words.back() &= (std::uint64_t{1} << (size % 64)) - 1;
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t bits = words[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }
};

// Level k holds every sum of k pool elements in [k·min, upper_k), stored at
// offset sum - k·min. upper_k is the largest partial sum that can still end
// below hi for some h <= h_max.
struct Ladder {
  Int min = 0;
  std::vector<Int> pool;
  std::vector<Bits> levels;

  bool has(Int k, Int sum) const {
    const Int idx = sum - k * min;
    return idx >= 0 && levels[static_cast<std::size_t>(k)].test(static_cast<std::size_t>(idx));
  }
};

Ladder build_ladder(const PeriodicSet& s, Int h_max, Int hi) {
  Ladder ladder;
  ladder.min = *s.min();
  const Int neg = std::min<Int>(ladder.min, 0);
  auto upper = [&](Int k) { return hi - (h_max - k) * neg; };
  const Int pool_hi = hi - (h_max - 1) * neg;
  ladder.pool = s.enumerate(ladder.min, std::max(ladder.min, pool_hi));

  Bits pool_bits(static_cast<std::size_t>(std::max<Int>(0, pool_hi - ladder.min)));
  for (Int a : ladder.pool) pool_bits.set(static_cast<std::size_t>(a - ladder.min));
  const std::size_t pool_count = ladder.pool.size();

  auto level_size = [&](Int k) {
    return static_cast<std::size_t>(std::max<Int>(0, upper(k) - k * ladder.min));
  };
  Bits base(level_size(0));
  if (base.size > 0) base.set(0);
  ladder.levels.push_back(std::move(base));

  for (Int k = 1; k <= h_max; ++k) {
    const Bits& cur = ladder.levels.back();
    Bits next(level_size(k));
    if (cur.count() < pool_count) {
      cur.for_each_set([&](std::size_t j) { next.or_shifted(pool_bits, j); });
    } else {
      for (Int a : ladder.pool) next.or_shifted(cur, static_cast<std::size_t>(a - ladder.min));
    }
    ladder.levels.push_back(std::move(next));
  }
  return ladder;
}

void check_window_args(const PeriodicSet& s, Int h, Int lo, Int hi) {
  if (h < 1) throw Error(Errc::InvalidInput, "number of summands must be >= 1");
  if (lo > hi) throw Error(Errc::InvalidRange, "window lo > hi");
  if (s.empty()) throw Error(Errc::EmptySet, "sumset of the empty set");
}

}  // namespace

SumsetWindow::SumsetWindow(Int h, Int lo, Int hi)
    : h_(h), lo_(lo), hi_(hi), words_(static_cast<std::size_t>((hi - lo + 63) / 64), 0) {
  if (lo > hi) throw Error(Errc::InvalidRange, "window lo > hi");
}

bool SumsetWindow::test(Int n) const noexcept {
  if (n < lo_ || n >= hi_) return false;
  const auto i = static_cast<std::size_t>(n - lo_);
  return (words_[i / 64] >> (i % 64)) & 1U;
}

void SumsetWindow::set(Int n) noexcept {
  if (n < lo_ || n >= hi_) return;
  const auto i = static_cast<std::size_t>(n - lo_);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t SumsetWindow::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Int> SumsetWindow::members() const {
  std::vector<Int> out;
  for (Int n = lo_; n < hi_; ++n) {
    if (test(n)) out.push_back(n);
  }
  return out;
}

std::vector<Int> SumsetWindow::missing() const {
  std::vector<Int> out;
  for (Int n = lo_; n < hi_; ++n) {
    if (!test(n)) out.push_back(n);
  }
  return out;
}

std::string SumsetWindow::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  const auto bytes = static_cast<std::size_t>((hi_ - lo_ + 7) / 8);
  std::string out;
  out.reserve(2 * bytes);
  for (std::size_t b = 0; b < bytes; ++b) {
    const auto byte = static_cast<unsigned>((words_[b / 8] >> (8 * (b % 8))) & 0xFFU);
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0xFU]);
  }
  return out;
}

std::vector<SumsetWindow> sumset_ladder(const PeriodicSet& s, Int h_max, Int lo, Int hi) {
  check_window_args(s, h_max, lo, hi);
  const Ladder ladder = build_ladder(s, h_max, hi);
  std::vector<SumsetWindow> out;
  for (Int h = 1; h <= h_max; ++h) {
    SumsetWindow window(h, lo, hi);
    for (Int n = lo; n < hi; ++n) {
      if (ladder.has(h, n)) window.set(n);
    }
    out.push_back(std::move(window));
  }
  return out;
}

SumsetWindow sumset_window(const PeriodicSet& s, Int h, Int lo, Int hi) {
  return std::move(sumset_ladder(s, h, lo, hi).back());
}

std::optional<std::vector<Int>> sumset_witness(const PeriodicSet& s, Int h, Int n) {
  check_window_args(s, h, n, n + 1);
  const Ladder ladder = build_ladder(s, h, n + 1);
  if (!ladder.has(h, n)) return std::nullopt;
  std::vector<Int> parts;
  Int rest = n;
  for (Int k = h; k >= 1; --k) {
    auto it = std::find_if(ladder.pool.begin(), ladder.pool.end(),
                           [&](Int a) { return ladder.has(k - 1, rest - a); });
    if (it == ladder.pool.end()) throw LawViolation("sumset ladder lost a decomposition");
    parts.push_back(*it);
    rest -= *it;
  }
  return parts;
}

std::string EmpiricalOrder::to_string() const {
  return order ? std::to_string(*order) : "NoneUpTo(" + std::to_string(h_max) + ")";
}

EmpiricalOrder empirical_order(const PeriodicSet& s, Int h_max, Int lo, Int hi) {
  if (lo > hi) throw Error(Errc::InvalidRange, "window lo > hi");
  if (h_max < 1) throw Error(Errc::InvalidInput, "h_max must be >= 1");
  if (hi - lo < 3 * s.modulus() * h_max) {
    throw Error(Errc::InvalidRange, "window must span at least 3·m·h_max integers");
  }
  EmpiricalOrder result{std::nullopt, h_max};
  if (s.empty()) return result;
  const auto windows = sumset_ladder(s, h_max, lo, hi);
  for (const auto& w : windows) {
    if (w.full()) {
      result.order = w.h();
      break;
    }
  }
  return result;
}

WindowBasisVerdict windowed_basis_verdict(const PeriodicSet& s, Int lo, Int hi) {
  if (lo > hi) throw Error(Errc::InvalidRange, "window lo > hi");
  WindowBasisVerdict verdict;
  if (s.empty()) return verdict;
  // Slide the window past every exceptional element so that members found in
  // it can only come from the periodic part.
  const Int shift = std::max<Int>(0, s.max_exceptional().value_or(lo) + 1 - lo);
  const Int top = hi + shift;
  if (*s.min() >= top) return verdict;
  const auto elements = s.enumerate(*s.min(), top);
  for (Int x : elements) verdict.window_gcd = gcd(verdict.window_gcd, x - elements.front());
  const Int mid = lo + shift + (hi - lo) / 2;
  verdict.upper_nonempty = std::any_of(elements.begin(), elements.end(),
                                       [&](Int x) { return x >= mid && x < top; });
  return verdict;
}

std::vector<std::vector<Int>> brute_essential_subsets(const PeriodicSet& s, std::span<const Int> pool) {
  if (!is_basis(s).is_basis) throw Error(Errc::NotABasis, "set is not a basis");
  std::vector<Int> items(pool.begin(), pool.end());
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  for (Int x : items) {
    if (!s.contains(x)) throw Error(Errc::NotASubset, std::to_string(x) + " is not in the set");
  }
  if (items.size() > 20) throw Error(Errc::InvalidInput, "pool too large for exhaustive search");

  std::vector<std::vector<Int>> found;
  const std::size_t n = items.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<Int> candidate;
      for (auto i : idx) candidate.push_back(items[i]);
      const bool pruned = std::any_of(found.begin(), found.end(), [&](const auto& p) {
        return std::includes(candidate.begin(), candidate.end(), p.begin(), p.end());
      });
      if (!pruned && !remove_ok(s, candidate)) {
        bool minimal = true;
        for (std::size_t drop = 0; drop < k && minimal; ++drop) {
          std::vector<Int> smaller;
          for (std::size_t i = 0; i < k; ++i) {
            if (i != drop) smaller.push_back(candidate[i]);
          }
          minimal = remove_ok(s, smaller);
        }
        if (minimal) found.push_back(std::move(candidate));
      }
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return found;
}

}  // namespace addbase
