#include "addbase/intset.hpp"

#include <algorithm>

#include "addbase/error.hpp"

namespace addbase {
namespace {

void sort_unique(std::vector<Int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool has(const std::vector<Int>& sorted, Int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

PeriodicSet PeriodicSet::canonicalize(RawDescription raw) {
  if (raw.modulus < 1) {
    throw Error(Errc::InvalidDescription, "modulus must be >= 1, got " + std::to_string(raw.modulus));
  }
  for (Int r : raw.residues) {
    if (r < 0 || r >= raw.modulus) {
      throw Error(Errc::InvalidDescription, "residue " + std::to_string(r) + " outside [0, " +
                                                std::to_string(raw.modulus) + ")");
    }
  }
  sort_unique(raw.exceptional);
  sort_unique(raw.residues);

  PeriodicSet out;
  if (raw.residues.empty()) {
    out.exceptional_ = std::move(raw.exceptional);
    return out;
  }

  // Least period of the residue pattern; it divides the given modulus.
  const Int m = raw.modulus;
  std::vector<bool> mask(static_cast<std::size_t>(m), false);
  for (Int r : raw.residues) mask[static_cast<std::size_t>(r)] = true;
  Int period = m;
  for (Int d : divisors(m)) {
    bool invariant = true;
    for (Int r = 0; r < m && invariant; ++r) {
      invariant = mask[static_cast<std::size_t>(r)] == mask[static_cast<std::size_t>((r + d) % m)];
    }
    if (invariant) {
      period = d;
      break;
    }
  }
  std::vector<Int> residues;
  for (Int r : raw.residues) residues.push_back(r % period);
  sort_unique(residues);

  auto in_class = [&](Int n) { return has(residues, floor_mod(n, period)); };

  // Walk down from the raw threshold to the last tail-class integer that is
  // missing; everything in the tail classes above it belongs to the set.
  Int missing = raw.threshold - 1;
  while (!in_class(missing) || has(raw.exceptional, missing)) --missing;
  Int start = missing + 1;
  while (!in_class(start)) ++start;

  out.modulus_ = period;
  out.residues_ = std::move(residues);
  out.threshold_ = start;
  for (Int e : raw.exceptional) {
    if (!out.in_tail_class(e) || e < start) out.exceptional_.push_back(e);
  }
  return out;
}

PeriodicSet PeriodicSet::finite(std::vector<Int> elements) {
  return canonicalize({std::move(elements), 1, {}, 0});
}

PeriodicSet PeriodicSet::naturals() { return canonicalize({{}, 1, {0}, 0}); }

PeriodicSet PeriodicSet::progression(Int modulus, Int residue, Int start) {
  if (modulus < 1) throw Error(Errc::InvalidDescription, "modulus must be >= 1");
  return canonicalize({{}, modulus, {floor_mod(residue, modulus)}, start});
}

std::optional<Int> PeriodicSet::min() const noexcept {
  if (empty()) return std::nullopt;
  if (exceptional_.empty()) return threshold_;
  if (residues_.empty()) return exceptional_.front();
  return std::min(exceptional_.front(), threshold_);
}

std::optional<Int> PeriodicSet::max_exceptional() const noexcept {
  if (exceptional_.empty()) return std::nullopt;
  return exceptional_.back();
}

bool PeriodicSet::in_tail_class(Int n) const noexcept {
  return !residues_.empty() && has(residues_, floor_mod(n, modulus_));
}

bool PeriodicSet::contains(Int n) const noexcept {
  return has(exceptional_, n) || (n >= threshold_ && in_tail_class(n));
}

std::vector<Int> PeriodicSet::enumerate(Int lo, Int hi) const {
  if (lo > hi) {
    throw Error(Errc::InvalidRange, "lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
  }
  std::vector<Int> out;
  auto first = std::lower_bound(exceptional_.begin(), exceptional_.end(), lo);
  auto last = std::lower_bound(exceptional_.begin(), exceptional_.end(), hi);
  if (residues_.empty()) return {first, last};

  std::vector<bool> mask(static_cast<std::size_t>(modulus_), false);
  for (Int r : residues_) mask[static_cast<std::size_t>(r)] = true;
  for (Int n = std::max(lo, threshold_); n < hi; ++n) {
    if (mask[static_cast<std::size_t>(floor_mod(n, modulus_))]) out.push_back(n);
  }
  std::vector<Int> merged;
  merged.reserve(out.size() + static_cast<std::size_t>(last - first));
  std::merge(first, last, out.begin(), out.end(), std::back_inserter(merged));
  return merged;
}

Int PeriodicSet::tail_representative(Int r) const noexcept {
  return threshold_ + floor_mod(r - threshold_, modulus_);
}

RawDescription PeriodicSet::raw() const { return {exceptional_, modulus_, residues_, threshold_}; }

PeriodicSet canonicalize(RawDescription raw) { return PeriodicSet::canonicalize(std::move(raw)); }

bool contains(const PeriodicSet& s, Int n) noexcept { return s.contains(n); }

std::vector<Int> enumerate(const PeriodicSet& s, Int lo, Int hi) { return s.enumerate(lo, hi); }

PeriodicSet remove_finite(const PeriodicSet& s, std::span<const Int> f) {
  if (f.empty()) return s;
  for (Int x : f) {
    if (!s.contains(x)) throw Error(Errc::NotASubset, std::to_string(x) + " is not in the set");
  }
  std::vector<Int> removed(f.begin(), f.end());
  sort_unique(removed);

  RawDescription raw = s.raw();
  std::vector<Int> kept;
  for (Int e : raw.exceptional) {
    if (!has(removed, e)) kept.push_back(e);
  }
  if (!s.is_finite()) {
    // Raise the threshold past the removed elements; the displaced tail
    // elements move into the exceptional part.
    const Int raised = std::max(s.threshold(), removed.back() + 1);
    for (Int n = s.threshold(); n < raised; ++n) {
      if (s.in_tail_class(n) && !has(removed, n)) kept.push_back(n);
    }
    raw.threshold = raised;
  }
  raw.exceptional = std::move(kept);
  return canonicalize(std::move(raw));
}

PeriodicSet insert_element(const PeriodicSet& s, Int x) {
  if (s.contains(x)) return s;
  RawDescription raw = s.raw();
  raw.exceptional.push_back(x);
  return canonicalize(std::move(raw));
}

Int diff_gcd(const PeriodicSet& s) {
  auto lowest = s.min();
  if (!lowest) return 0;
  const Int a0 = *lowest;
  Int g = 0;
  for (Int e : s.exceptional()) g = gcd(g, e - a0);
  if (!s.is_finite()) {
    g = gcd(g, s.modulus());
    for (Int r : s.residues()) g = gcd(g, s.tail_representative(r) - a0);
  }
  return g;
}

PeriodicSet set_difference(const PeriodicSet& a, const PeriodicSet& b) {
  if (a.is_finite()) {
    std::vector<Int> kept;
    for (Int e : a.exceptional()) {
      if (!b.contains(e)) kept.push_back(e);
    }
    return PeriodicSet::finite(std::move(kept));
  }
  // Past `start` both sets repeat with period lcm(m_a, m_b).
  const Int period = lcm(a.modulus(), b.modulus());
  Int start = a.threshold();
  if (auto e = a.max_exceptional()) start = std::max(start, *e + 1);
  if (!b.is_finite()) start = std::max(start, b.threshold());
  if (auto e = b.max_exceptional()) start = std::max(start, *e + 1);

  RawDescription raw;
  raw.modulus = period;
  raw.threshold = start;
  for (Int n = start; n < start + period; ++n) {
    if (a.contains(n) && !b.contains(n)) raw.residues.push_back(floor_mod(n, period));
  }
  for (Int n : a.enumerate(*a.min(), start)) {
    if (!b.contains(n)) raw.exceptional.push_back(n);
  }
  return canonicalize(std::move(raw));
}

bool is_subset(const PeriodicSet& a, const PeriodicSet& b) { return set_difference(a, b).empty(); }

}  // namespace addbase
