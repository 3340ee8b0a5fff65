#include "addbase/essentia.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "addbase/basis.hpp"
#include "addbase/error.hpp"

namespace addbase {
namespace {

void require_basis(const PeriodicSet& s) {
  auto report = is_basis(s);
  if (!report.is_basis) throw Error(Errc::NotABasis, "set is not a basis: " + report.failure_reason());
}

void require_member(const PeriodicSet& s, Int x) {
  if (!s.contains(x)) throw Error(Errc::NotAMember, std::to_string(x) + " is not in the set");
}

bool excludes(const EssentialSubset& p, Int x) {
  return !std::binary_search(p.members.begin(), p.members.end(), x);
}

}  // namespace

Int d_of(const PeriodicSet& s, std::span<const Int> p) { return diff_gcd(remove_finite(s, p)); }

Int omega(Int n) {
  if (n < 1) throw Error(Errc::InvalidInput, "omega needs n >= 1, got " + std::to_string(n));
  return static_cast<Int>(prime_factors(n).size());
}

Family essential_subsets(const PeriodicSet& s) {
  require_basis(s);

  std::map<std::vector<Int>, std::vector<Int>> candidates;
  const auto& residues = s.residues();
  for (Int p : prime_factors(s.modulus())) {
    const Int c = residues.front() % p;
    bool concentrated = std::all_of(residues.begin(), residues.end(),
                                    [&](Int r) { return r % p == c; });
    if (!concentrated) continue;
    std::vector<Int> outside;
    for (Int e : s.exceptional()) {
      if (floor_mod(e, p) != c) outside.push_back(e);
    }
    if (outside.empty()) {
      throw LawViolation("basis lies in a single class mod " + std::to_string(p));
    }
    candidates[std::move(outside)].push_back(p);
  }

  Family out;
  for (const auto& [members, primes] : candidates) {
    bool minimal = true;
    for (const auto& [other, unused] : candidates) {
      if (other.size() < members.size() &&
          std::includes(members.begin(), members.end(), other.begin(), other.end())) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    EssentialSubset subset{members, d_of(s, members), primes};
    if (subset.d_value < 2) throw LawViolation("essential subset with d < 2");
    out.push_back(std::move(subset));
  }
  return out;
}

std::string EssentialityVerdict::reason() const {
  switch (outcome) {
    case EssentialityOutcome::Essentiality: return "essentiality";
    case EssentialityOutcome::ComplementFinite: return "complement is finite";
    case EssentialityOutcome::ComplementIsBasis: return "complement is a basis";
    case EssentialityOutcome::NotMinimal:
      return "not minimal: adding back " + std::to_string(witness.value_or(0)) +
             " does not give a basis";
  }
  return {};
}

EssentialityVerdict explain_essentiality(const PeriodicSet& s, const PeriodicSet& p) {
  require_basis(s);
  if (!is_subset(p, s)) throw Error(Errc::NotASubset, "candidate is not contained in the basis");

  const PeriodicSet rest = set_difference(s, p);
  if (rest.is_finite()) return {EssentialityOutcome::ComplementFinite, std::nullopt};
  const Int d0 = diff_gcd(rest);
  if (d0 == 1) return {EssentialityOutcome::ComplementIsBasis, std::nullopt};
  const Int a0 = *rest.min();

  // (A \ P) ∪ {x} has difference gcd gcd(d0, x - a0).
  for (Int x : p.exceptional()) {
    if (gcd(d0, x - a0) != 1) return {EssentialityOutcome::NotMinimal, x};
  }
  // A tail class of P meets only the residues rep + gcd(m_P, d0)·k mod d0.
  if (!p.is_finite()) {
    const Int step = p.modulus();
    const Int span = d0 / gcd(step, d0);
    for (Int r : p.residues()) {
      const Int rep = p.tail_representative(r);
      for (Int k = 0; k < span; ++k) {
        const Int x = rep + k * step;
        if (gcd(d0, x - a0) != 1) return {EssentialityOutcome::NotMinimal, x};
      }
    }
  }
  return {EssentialityOutcome::Essentiality, std::nullopt};
}

bool verify_essentiality(const PeriodicSet& s, const PeriodicSet& p) {
  return explain_essentiality(s, p).holds();
}

IndexSet j_set(const PeriodicSet& s, const Family& family, Int x) {
  require_member(s, x);
  IndexSet out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (excludes(family[i], x)) out.push_back(i + 1);
  }
  return out;
}

IndexSet j_set(const PeriodicSet& s, const Family& family, Int x, Int y) {
  if (x == y) throw Error(Errc::EqualElements, "J_{x,y} needs x != y");
  require_member(s, x);
  require_member(s, y);
  IndexSet out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (excludes(family[i], x) && excludes(family[i], y)) out.push_back(i + 1);
  }
  return out;
}

CoprimeReport coprime_check(const PeriodicSet& s, const EssentialSubset& first,
                          const EssentialSubset& second) {
  if (first.members == second.members) {
    throw Error(Errc::IdenticalSubsets, "check needs two distinct essential subsets");
  }
  CoprimeReport report;
  report.d_first = d_of(s, first.members);
  report.d_second = d_of(s, second.members);
  report.gcd = gcd(report.d_first, report.d_second);
  if (report.d_first < 2 || report.d_second < 2 || report.gcd != 1) {
    throw LawViolation("d-values " + std::to_string(report.d_first) + ", " +
                       std::to_string(report.d_second) + " are not >= 2 and coprime");
  }
  return report;
}

IndexSet ProofTrace::index_set() const {
  IndexSet all(family.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i + 1;
  return all;
}

ProofTrace proof_trace(const PeriodicSet& s) { return proof_trace(s, essential_subsets(s)); }

ProofTrace proof_trace(const PeriodicSet& s, Family family) {
  require_basis(s);
  std::set<std::vector<Int>> distinct;
  for (const auto& p : family) {
    if (p.members.empty()) throw Error(Errc::InvalidInput, "family member is empty");
    for (Int x : p.members) require_member(s, x);
    if (!distinct.insert(p.members).second) {
      throw Error(Errc::InvalidInput, "family members must be pairwise distinct");
    }
  }
  // Essentialities are pairwise incomparable; the closing step relies on it.
  for (const auto& p : family) {
    for (const auto& q : family) {
      if (p.members.size() < q.members.size() &&
          std::includes(q.members.begin(), q.members.end(), p.members.begin(), p.members.end())) {
        throw Error(Errc::InvalidInput, "family members must be pairwise incomparable");
      }
    }
  }

  ProofTrace trace;
  trace.family = std::move(family);
  if (trace.family.empty()) return trace;

  const std::size_t alpha = 1;
  trace.alpha = alpha;
  std::set<std::size_t> tilde{alpha};
  for (Int x : trace.family[alpha - 1].members) {
    IndexSet jx = j_set(s, trace.family, x);
    if (jx.empty()) continue;
    trace.lambda_set.push_back(x);
    trace.choice.push_back({x, jx.front()});
    tilde.insert(jx.front());
  }
  for (const auto& [x, chosen] : trace.choice) {
    for (Int y : trace.family[chosen - 1].members) {
      IndexSet jxy = j_set(s, trace.family, x, y);
      tilde.insert(jxy.begin(), jxy.end());
      trace.j_sets.push_back({x, y, std::move(jxy)});
    }
  }
  trace.i_tilde.assign(tilde.begin(), tilde.end());
  if (trace.i_tilde != trace.index_set()) {
    throw LawViolation("trace index set differs from the full family");
  }
  return trace;
}

}  // namespace addbase
