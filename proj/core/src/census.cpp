#include "addbase/census.hpp"

#include <algorithm>
#include <functional>

#include "addbase/basis.hpp"
#include "addbase/error.hpp"
#include "addbase/essentia.hpp"
#include "addbase/oracle.hpp"
#include "addbase/serialize.hpp"
#include "addbase/text.hpp"

namespace addbase {
namespace {

// splitmix64: small, portable and fully specified, so corpora reproduce
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi].
  Int uniform(Int lo, Int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(next() % span);
  }

  bool bernoulli(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

 private:
  std::uint64_t state_;
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  Rng r(a ^ (b * 0xD1B54A32D192ED03ULL) ^ (c * 0x8CB92BA72F3D8DD7ULL));
  r.next();
  return r.next();
}

constexpr std::uint64_t kRemovalSalt = 0x5eed;

}  // namespace

void CensusConfig::validate() const {
  if (trials < 1) throw Error(Errc::InvalidInput, "trials must be >= 1");
  if (modulus_max < 2) throw Error(Errc::InvalidInput, "modulus_max must be >= 2");
  if (exceptional_max < 0) throw Error(Errc::InvalidInput, "exceptional_max must be >= 0");
  if (!(residue_density > 0.0 && residue_density <= 1.0)) {
    throw Error(Errc::InvalidInput, "residue density must lie in (0, 1]");
  }
  if (window_lo > window_hi) throw Error(Errc::InvalidRange, "census window lo > hi");
}

PeriodicSet random_set(const CensusConfig& config, std::uint64_t trial, std::uint64_t attempt) {
  config.validate();
  Rng rng(mix(config.seed, trial, attempt));

  RawDescription raw;
  const Int m = rng.uniform(1, config.modulus_max);
  raw.modulus = m;

  const Int e_count = rng.uniform(0, config.exceptional_max);
  for (Int i = 0; i < e_count; ++i) raw.exceptional.push_back(rng.uniform(0, 3 * m + 9));
  raw.threshold = rng.uniform(0, 2 * m);

  if (rng.uniform(0, 9) == 0) {  // finite set
    raw.modulus = 1;
    return canonicalize(std::move(raw));
  }

  Int step = 1;
  Int cls = 0;
  const auto primes = prime_factors(m);
  if (!primes.empty() && rng.bernoulli(0.5)) {
    for (Int p : primes) {
      if (rng.bernoulli(0.5)) step *= p;
    }
    if (step == 1) step = primes[static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(primes.size()) - 1))];
    cls = rng.uniform(0, step - 1);
  }
  for (Int r = cls; r < m; r += step) {
    if (rng.bernoulli(config.residue_density)) raw.residues.push_back(r);
  }
  if (raw.residues.empty()) raw.residues.push_back(cls + step * rng.uniform(0, m / step - 1));
  return canonicalize(std::move(raw));
}

PeriodicSet random_basis(const CensusConfig& config, std::uint64_t trial) {
  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    PeriodicSet s = random_set(config, trial, static_cast<std::uint64_t>(attempt));
    if (is_basis(s).is_basis) return s;
  }
  throw Error(Errc::GenerationExhausted,
              "no basis after " + std::to_string(kGenerationRetries) + " draws for trial " +
                  std::to_string(trial));
}

void census_check(const CensusConfig& config, std::uint64_t trial, const PeriodicSet& s,
                  CensusReport& report) {
  const std::string text = format_set(s);
  auto record = [&](const std::string& law, bool ok, nlohmann::json detail) {
    auto& tally = report.laws[law];
    ++tally.checks;
    if (ok) return;
    ++tally.violations;
    report.violations.push_back({law, trial, text, std::move(detail)});
  };
  // A law that throws LawViolation is a failed law, not a crash.
  auto guarded = [&](const std::string& law, const std::function<void()>& body) {
    try {
      body();
    } catch (const LawViolation& e) {
      record(law, false, {{"error", e.what()}});
    }
  };

  Family family;
  guarded("family_bound", [&] {
    family = essential_subsets(s);
    const Int bound = omega(s.modulus());
    record("family_bound", static_cast<Int>(family.size()) <= bound,
           {{"observed", family.size()}, {"expected_bound", bound}});
  });
  ++report.family_sizes[family.size()];

  for (const auto& p : family) {
    const bool ok = p.witness_primes == prime_factors(p.d_value) &&
                    std::all_of(p.witness_primes.begin(), p.witness_primes.end(),
                                [&](Int q) { return s.modulus() % q == 0; });
    record("witness_primes", ok, {{"subset", p}});
  }

  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t k = i + 1; k < family.size(); ++k) {
      guarded("coprime_d", [&] {
        auto r = coprime_check(s, family[i], family[k]);
        record("coprime_d", true, {{"pair", {i + 1, k + 1}}, {"report", r}});
      });
    }
  }

  const auto window = s.enumerate(config.window_lo, config.window_hi);
  {
    std::uint64_t bad = 0;
    nlohmann::json first_bad;
    for (std::size_t a = 0; a < window.size(); ++a) {
      for (std::size_t b = a + 1; b < window.size(); ++b) {
        const Int x = window[a], y = window[b];
        const auto size = static_cast<Int>(j_set(s, family, x, y).size());
        const Int bound = omega(y - x);
        ++report.pairs_checked;
        if (size > bound) {
          if (bad++ == 0) first_bad = {{"x", x}, {"y", y}, {"expected_bound", bound}, {"observed", size}};
        } else if (size == bound && size >= 1) {
          ++report.bound_equalities;
          report.max_bound_equality = std::max<std::uint64_t>(report.max_bound_equality,
                                                              static_cast<std::uint64_t>(size));
        }
      }
    }
    record("pair_bound", bad == 0, {{"bad_pairs", bad}, {"first", first_bad}});
  }

  if (family.size() >= 2) {
    guarded("trace", [&] {
      auto trace = proof_trace(s, family);
      record("trace", trace.i_tilde == trace.index_set(), {{"trace", trace}});
    });
  }

  for (const auto& p : family) {
    bool ok = !remove_ok(s, p.members);
    for (std::size_t drop = 0; drop < p.members.size() && ok; ++drop) {
      std::vector<Int> smaller = p.members;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
      ok = remove_ok(s, smaller);
    }
    ok = ok && verify_essentiality(s, PeriodicSet::finite(p.members));
    record("minimality", ok, {{"subset", p}});
  }

  {
    auto brute = brute_essential_subsets(s, s.exceptional());
    std::sort(brute.begin(), brute.end());
    std::vector<std::vector<Int>> structural;
    for (const auto& p : family) structural.push_back(p.members);
    std::sort(structural.begin(), structural.end());
    record("oracle_subsets", brute == structural, {{"brute", brute}, {"structural", structural}});
  }

  {
    std::vector<Int> singles;
    for (const auto& p : family) {
      if (p.members.size() == 1) singles.push_back(p.members.front());
    }
    std::sort(singles.begin(), singles.end());
    const auto elements = essential_elements(s);
    record("singleton", singles == elements, {{"singletons", singles}, {"essential_elements", elements}});
  }

  // Past every exceptional element the window sees the pure tail.
  const Int top = std::max(s.threshold(), s.max_exceptional().value_or(s.threshold())) + 1;
  const Int m = s.modulus();
  {
    auto verdict = windowed_basis_verdict(s, top, top + 6 * m);
    record("basis_oracle", verdict.basis(), {{"window_gcd", verdict.window_gcd}});
  }

  {
    Rng rng(mix(config.seed ^ kRemovalSalt, trial, 0));
    const auto pool = s.enumerate(*s.min(), top + 2 * m);
    std::vector<Int> removal;
    const Int size = rng.uniform(0, 4);
    for (Int i = 0; i < size; ++i) {
      removal.push_back(pool[static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(pool.size()) - 1))]);
    }
    std::sort(removal.begin(), removal.end());
    removal.erase(std::unique(removal.begin(), removal.end()), removal.end());

    const PeriodicSet rest = remove_finite(s, removal);
    const bool ok = remove_ok(s, removal);
    const Int rest_top = std::max(top, removal.empty() ? top : removal.back() + 1);
    const bool windowed = windowed_basis_verdict(rest, rest_top, rest_top + 6 * m).basis();
    record("cofinite_removal", ok == is_basis(rest).is_basis && ok == windowed,
           {{"removed", removal}, {"remove_ok", ok}, {"windowed", windowed}});

    std::vector<Int> larger = removal;
    larger.push_back(pool[static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(pool.size()) - 1))]);
    std::sort(larger.begin(), larger.end());
    larger.erase(std::unique(larger.begin(), larger.end()), larger.end());
    record("monotonicity", ok || !remove_ok(s, larger), {{"removed", removal}, {"superset", larger}});
  }

  if (config.order_oracle) {
    const Int h = order(s);
    if (h <= 5) {
      auto empirical = empirical_order(s, 5, 10 * m * 5, 10 * m * 5 + 6 * m * 5);
      record("order_oracle", empirical.order == h, {{"order", h}, {"empirical", empirical}});
    }
  }
}

CensusReport run_census(const CensusConfig& config) {
  config.validate();
  CensusReport report;
  report.config = config;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    census_check(config, t, random_basis(config, t), report);
  }
  return report;
}

void to_json(nlohmann::json& j, const CensusConfig& c) {
  j = nlohmann::json{{"trials", c.trials},           {"seed", c.seed},
                     {"modulus_max", c.modulus_max}, {"exceptional_max", c.exceptional_max},
                     {"density", c.residue_density}, {"window", {c.window_lo, c.window_hi}},
                     {"order_oracle", c.order_oracle}};
}

void to_json(nlohmann::json& j, const CensusReport& r) {
  nlohmann::json laws = nlohmann::json::object();
  for (const auto& [name, tally] : r.laws) {
    laws[name] = {{"checks", tally.checks}, {"violations", tally.violations}};
  }
  nlohmann::json sizes = nlohmann::json::object();
  for (const auto& [size, count] : r.family_sizes) sizes[std::to_string(size)] = count;
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"law", v.law}, {"trial", v.trial}, {"set", v.set}, {"detail", v.detail}});
  }
  j = nlohmann::json{{"config", r.config},
                     {"laws", laws},
                     {"violation_count", r.violation_count()},
                     {"violations", violations},
                     {"stats",
                      {{"essential_subset_counts", sizes},
                       {"pairs_checked", r.pairs_checked},
                       {"bound_equalities", r.bound_equalities},
                       {"max_bound_equality", r.max_bound_equality}}}};
}

}  // namespace addbase
