#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addbase/intset.hpp"

namespace addbase {

enum class BasisFailure { None, FiniteSet, GcdExceedsOne };

struct BasisReport {
  bool is_basis = false;
  Int diff_gcd = 0;
  std::optional<Int> order;  // filled by analyze(), never by is_basis()
  BasisFailure failure = BasisFailure::None;

  /// "FiniteSet", "GcdExceedsOne(d)" or empty when the set is a basis.
  std::string failure_reason() const;

  friend bool operator==(const BasisReport&, const BasisReport&) = default;
};

/// An eventually periodic set is a basis iff it is infinite and the gcd of
/// its differences is 1 (see docs/derivations.md).
BasisReport is_basis(const PeriodicSet& s);

/// is_basis() plus the order when the set is a basis.
BasisReport analyze(const PeriodicSet& s);

/// Least h such that every large integer is a sum of exactly h elements,
/// repetition allowed. Throws NotABasis.
Int order(const PeriodicSet& s);

/// Whether s \ f is still a basis, decided by the gcd of differences.
bool remove_ok(const PeriodicSet& s, std::span<const Int> f);

bool essential_element(const PeriodicSet& s, Int x);

/// Essential elements, ascending. Only the exceptional part can contain any.
std::vector<Int> essential_elements(const PeriodicSet& s);

}  // namespace addbase
