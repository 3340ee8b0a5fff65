#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addbase/numtheory.hpp"

namespace addbase {

/// Unvalidated description E ∪ { n >= threshold : n mod modulus ∈ residues }.
struct RawDescription {
  std::vector<Int> exceptional;
  Int modulus = 1;
  std::vector<Int> residues;
  Int threshold = 0;
};

/// An eventually periodic integer set in canonical form.
///
/// The set is `exceptional ∪ { n >= threshold : n mod modulus ∈ residues }`.
/// Canonical form makes set equality field-wise equality:
///   - `modulus` is the least period of the tail pattern;
///   - `threshold` is the least element of the tail, and the integer one
///     period below it in the same class is absent from the set;
///   - no exceptional element lies in the tail;
///   - a finite set has `modulus == 1`, no residues and `threshold == 0`.
///
/// Values are immutable; every operation below returns a new set.
class PeriodicSet {
 public:
  /// The empty set.
  PeriodicSet() = default;

  static PeriodicSet canonicalize(RawDescription raw);
  static PeriodicSet finite(std::vector<Int> elements);
  static PeriodicSet naturals();
  /// { n >= start : n ≡ residue (mod modulus) }.
  static PeriodicSet progression(Int modulus, Int residue, Int start = 0);

  const std::vector<Int>& exceptional() const noexcept { return exceptional_; }
  Int modulus() const noexcept { return modulus_; }
  const std::vector<Int>& residues() const noexcept { return residues_; }
  Int threshold() const noexcept { return threshold_; }

  bool is_finite() const noexcept { return residues_.empty(); }
  bool empty() const noexcept { return residues_.empty() && exceptional_.empty(); }
  std::optional<Int> min() const noexcept;
  /// Largest exceptional element, if any.
  std::optional<Int> max_exceptional() const noexcept;

  bool in_tail_class(Int n) const noexcept;
  bool contains(Int n) const noexcept;
  /// Sorted elements in [lo, hi). Throws InvalidRange when lo > hi.
  std::vector<Int> enumerate(Int lo, Int hi) const;
  /// Least tail element congruent to r modulo the period.
  Int tail_representative(Int r) const noexcept;

  RawDescription raw() const;

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

 private:
  std::vector<Int> exceptional_;
  Int modulus_ = 1;
  std::vector<Int> residues_;
  Int threshold_ = 0;
};

PeriodicSet canonicalize(RawDescription raw);

bool contains(const PeriodicSet& s, Int n) noexcept;
std::vector<Int> enumerate(const PeriodicSet& s, Int lo, Int hi);

/// s \ f for a finite f ⊆ s. Throws NotASubset otherwise.
PeriodicSet remove_finite(const PeriodicSet& s, std::span<const Int> f);
PeriodicSet insert_element(const PeriodicSet& s, Int x);

/// gcd of all pairwise differences; 0 when the set has at most one element.
Int diff_gcd(const PeriodicSet& s);

/// a \ b for two eventually periodic sets.
PeriodicSet set_difference(const PeriodicSet& a, const PeriodicSet& b);
bool is_subset(const PeriodicSet& a, const PeriodicSet& b);

}  // namespace addbase
