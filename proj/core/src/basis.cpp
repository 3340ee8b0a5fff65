#include "addbase/basis.hpp"

#include <algorithm>
#include <set>

#include "addbase/error.hpp"

namespace addbase {
namespace {

void require_basis(const PeriodicSet& s) {
  auto report = is_basis(s);
  if (!report.is_basis) throw Error(Errc::NotABasis, "set is not a basis: " + report.failure_reason());
}

}  // namespace

std::string BasisReport::failure_reason() const {
  switch (failure) {
    case BasisFailure::None: return {};
    case BasisFailure::FiniteSet: return "FiniteSet";
    case BasisFailure::GcdExceedsOne: return "GcdExceedsOne(" + std::to_string(diff_gcd) + ")";
  }
  return {};
}

BasisReport is_basis(const PeriodicSet& s) {
  BasisReport report;
  report.diff_gcd = diff_gcd(s);
  if (s.is_finite()) {
    report.failure = BasisFailure::FiniteSet;
  } else if (report.diff_gcd != 1) {
    report.failure = BasisFailure::GcdExceedsOne;
  } else {
    report.is_basis = true;
  }
  return report;
}

BasisReport analyze(const PeriodicSet& s) {
  auto report = is_basis(s);
  if (report.is_basis) report.order = order(s);
  return report;
}

Int order(const PeriodicSet& s) {
  require_basis(s);

  // Walk over (residue mod m, used-a-tail-summand) states. A tail summand
  // sweeps an entire residue class, so the h-fold sumset is cofinite iff
  // every residue is reachable in exactly h steps with the flag set.
  const Int m = s.modulus();
  const auto states = static_cast<std::size_t>(2 * m);
  auto index = [](Int r, bool flag) { return static_cast<std::size_t>(2 * r + (flag ? 1 : 0)); };

  std::vector<Int> point_steps;
  for (Int e : s.exceptional()) point_steps.push_back(floor_mod(e, m));
  std::sort(point_steps.begin(), point_steps.end());
  point_steps.erase(std::unique(point_steps.begin(), point_steps.end()), point_steps.end());
  const std::vector<Int>& tail_steps = s.residues();

  std::vector<char> layer(states, 0);
  layer[index(0, false)] = 1;
  std::set<std::vector<char>> seen{layer};

  for (Int h = 1;; ++h) {
    std::vector<char> next(states, 0);
    for (Int r = 0; r < m; ++r) {
      for (bool flag : {false, true}) {
        if (!layer[index(r, flag)]) continue;
        for (Int step : point_steps) next[index((r + step) % m, flag)] = 1;
        for (Int step : tail_steps) next[index((r + step) % m, true)] = 1;
      }
    }
    bool covered = true;
    for (Int r = 0; r < m && covered; ++r) covered = next[index(r, true)] != 0;
    if (covered) return h;
    if (!seen.insert(next).second) {
      throw LawViolation("residue walk cycles without covering although the set is a basis");
    }
    layer = std::move(next);
  }
}

bool remove_ok(const PeriodicSet& s, std::span<const Int> f) {
  require_basis(s);
  return diff_gcd(remove_finite(s, f)) == 1;
}

bool essential_element(const PeriodicSet& s, Int x) {
  require_basis(s);
  if (!s.contains(x)) throw Error(Errc::NotAMember, std::to_string(x) + " is not in the set");
  const Int single[] = {x};
  return diff_gcd(remove_finite(s, single)) != 1;
}

std::vector<Int> essential_elements(const PeriodicSet& s) {
  require_basis(s);
  std::vector<Int> out;
  for (Int e : s.exceptional()) {
    if (essential_element(s, e)) out.push_back(e);
  }
  return out;
}

}  // namespace addbase
