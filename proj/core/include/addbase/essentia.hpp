#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addbase/intset.hpp"

namespace addbase {

/// A finite essential subset P of a basis A.
struct EssentialSubset {
  std::vector<Int> members;         // sorted, nonempty
  Int d_value = 0;                  // gcd of the differences of A \ P, >= 2
  std::vector<Int> witness_primes;  // primes p | m with A \ P inside one class mod p

  friend bool operator==(const EssentialSubset&, const EssentialSubset&) = default;
};

using Family = std::vector<EssentialSubset>;
/// Indices into a Family are 1-based, matching the index set I = {1..n}.
using IndexSet = std::vector<std::size_t>;

Int d_of(const PeriodicSet& s, std::span<const Int> p);

/// Number of distinct prime factors. Throws InvalidInput for n < 1.
Int omega(Int n);

/// All essential subsets of a basis, ordered by min element then
/// lexicographically.
///
/// Each comes from a prime p | m for which the tail residues share a class
/// c mod p: the candidate is the exceptional elements outside that class.
/// The essential subsets are exactly the inclusion-minimal candidates.
Family essential_subsets(const PeriodicSet& s);

enum class EssentialityOutcome {
  Essentiality,
  ComplementFinite,
  ComplementIsBasis,
  NotMinimal,
};

struct EssentialityVerdict {
  EssentialityOutcome outcome = EssentialityOutcome::Essentiality;
  std::optional<Int> witness;  // an x in P with (A \ P) ∪ {x} not a basis

  bool holds() const noexcept { return outcome == EssentialityOutcome::Essentiality; }
  std::string reason() const;
};

/// Checks that A \ P is not a basis and that putting back any single x ∈ P
/// yields a basis. P may be infinite.
EssentialityVerdict explain_essentiality(const PeriodicSet& s, const PeriodicSet& p);
bool verify_essentiality(const PeriodicSet& s, const PeriodicSet& p);

/// J_x = { i : x ∉ P_i }.
IndexSet j_set(const PeriodicSet& s, const Family& family, Int x);
/// J_{x,y} = { i : x ∉ P_i and y ∉ P_i }, for distinct x, y ∈ s.
IndexSet j_set(const PeriodicSet& s, const Family& family, Int x, Int y);

struct CoprimeReport {
  Int d_first = 0;
  Int d_second = 0;
  Int gcd = 0;
};

/// d-values of two distinct essential subsets are >= 2 and coprime.
/// Throws IdenticalSubsets for equal members, LawViolation if the law fails.
CoprimeReport coprime_check(const PeriodicSet& s, const EssentialSubset& first,
                          const EssentialSubset& second);

struct ChoiceEntry {
  Int x = 0;
  std::size_t index = 0;  // i(x)
  friend bool operator==(const ChoiceEntry&, const ChoiceEntry&) = default;
};

struct PairIndexSet {
  Int x = 0;
  Int y = 0;
  IndexSet indices;
  friend bool operator==(const PairIndexSet&, const PairIndexSet&) = default;
};

/// The finiteness argument replayed on a concrete family: fix alpha, collect
/// Lambda = { x ∈ P_alpha : J_x ≠ ∅ }, choose i(x) ∈ J_x, and check that
/// {alpha} ∪ { i(x) } ∪ ⋃ J_{x,y} (y ∈ P_{i(x)}) is the whole index set.
struct ProofTrace {
  Family family;
  std::optional<std::size_t> alpha;  // none for an empty family
  std::vector<Int> lambda_set;
  std::vector<ChoiceEntry> choice;
  std::vector<PairIndexSet> j_sets;
  IndexSet i_tilde;

  bool degenerate() const noexcept { return family.size() <= 1; }
  IndexSet index_set() const;
};

/// Trace over essential_subsets(s), with alpha = 1 and i(x) = min J_x.
ProofTrace proof_trace(const PeriodicSet& s);
/// Same over a caller-chosen labelling of the family.
ProofTrace proof_trace(const PeriodicSet& s, Family family);

}  // namespace addbase
