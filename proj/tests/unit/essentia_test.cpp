#include <gtest/gtest.h>

#include "addbase/basis.hpp"
#include "addbase/error.hpp"
#include "addbase/essentia.hpp"
#include "oracle_helpers.hpp"

namespace addbase {
namespace {

PeriodicSet one_five() { return canonicalize({{1, 5}, 6, {0}, 0}); }
PeriodicSet two_three() { return canonicalize({{2, 3}, 6, {0}, 0}); }
PeriodicSet three_five() { return canonicalize({{3, 5}, 6, {0}, 0}); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an addbase::Error";
  return Errc::InvalidInput;
}

std::vector<std::vector<Int>> members_of(const Family& family) {
  std::vector<std::vector<Int>> out;
  for (const auto& p : family) out.push_back(p.members);
  return out;
}

// Definition chasing with raw membership and quadratic gcds: P ⊆ E is
// essential when the window of A \ P has gcd > 1 and every P \ {x} has gcd 1.
std::vector<std::vector<Int>> definitional_subsets(const RawDescription& raw, Int window) {
  const auto elements = testing::raw_window(raw, -10, window);
  auto gcd_without = [&](const std::vector<Int>& removed) {
    std::vector<Int> kept;
    for (Int x : elements) {
      if (std::find(removed.begin(), removed.end(), x) == removed.end()) kept.push_back(x);
    }
    return testing::pairwise_gcd(kept);
  };
  std::vector<Int> pool = raw.exceptional;
  std::sort(pool.begin(), pool.end());
  std::vector<std::vector<Int>> out;
  for (unsigned mask = 1; mask < (1U << pool.size()); ++mask) {
    std::vector<Int> p;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1U << i)) p.push_back(pool[i]);
    }
    if (gcd_without(p) == 1) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < p.size() && minimal; ++drop) {
      auto q = p;
      q.erase(q.begin() + static_cast<std::ptrdiff_t>(drop));
      minimal = gcd_without(q) == 1;
    }
    if (minimal) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(DOf, Examples) {
  const Int both[] = {1, 5};
  EXPECT_EQ(d_of(one_five(), both), 6);
  EXPECT_EQ(d_of(one_five(), {}), 1);
  const Int three[] = {3};
  EXPECT_EQ(d_of(two_three(), three), 2);
  EXPECT_EQ(testing::pairwise_gcd(testing::raw_window({{2}, 6, {0}, 0}, 0, 200)), 2);
  const Int stray[] = {4};
  EXPECT_EQ(code_of([&] { d_of(one_five(), stray); }), Errc::NotASubset);
}

TEST(EssentialSubsets, OneFiveModSix) {
  const auto family = essential_subsets(one_five());
  ASSERT_EQ(family.size(), 1u);
  EXPECT_EQ(family[0].members, (std::vector<Int>{1, 5}));
  EXPECT_EQ(family[0].d_value, 6);
  EXPECT_EQ(family[0].witness_primes, (std::vector<Int>{2, 3}));
}

TEST(EssentialSubsets, NaturalsHaveNone) {
  EXPECT_TRUE(essential_subsets(PeriodicSet::naturals()).empty());
}

TEST(EssentialSubsets, NonMinimalCandidateDiscarded) {
  const auto family = essential_subsets(three_five());
  ASSERT_EQ(family.size(), 1u);
  EXPECT_EQ(family[0], (EssentialSubset{{5}, 3, {3}}));
  EXPECT_EQ(definitional_subsets({{3, 5}, 6, {0}, 0}, 200),
            (std::vector<std::vector<Int>>{{5}}));
}

TEST(EssentialSubsets, OrderedByMinElement) {
  const auto family = essential_subsets(two_three());
  EXPECT_EQ(members_of(family), (std::vector<std::vector<Int>>{{2}, {3}}));
  EXPECT_EQ(family[0].d_value, 3);
  EXPECT_EQ(family[1].d_value, 2);
}

TEST(EssentialSubsets, MatchesDefinitionOnStructuredBases) {
  const std::vector<RawDescription> cases = {
      {{1, 5}, 6, {0}, 0},        {{2, 3}, 6, {0}, 0},          {{3, 5}, 6, {0}, 0},
      {{6, 10, 15}, 30, {0}, 0},  {{105, 70, 42, 30}, 210, {0}, 0},
      {{1, 2, 4}, 12, {0, 6}, 3}, {{3, 4, 9, 10}, 6, {0}, 0},   {{1}, 4, {0, 2}, 0},
      {{7, 2}, 10, {5}, 0},       {{1, 7}, 2, {0}, 4},
  };
  for (const auto& raw : cases) {
    const auto s = canonicalize(raw);
    ASSERT_TRUE(is_basis(s).is_basis);
    auto got = members_of(essential_subsets(s));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, definitional_subsets(raw, 400)) << "m=" << raw.modulus;
  }
}

TEST(EssentialSubsets, RequiresBasis) {
  EXPECT_EQ(code_of([] { essential_subsets(PeriodicSet::progression(6, 0)); }), Errc::NotABasis);
}

TEST(VerifyEssentiality, InfiniteEssentialitiesOfNaturals) {
  const auto n = PeriodicSet::naturals();
  EXPECT_TRUE(verify_essentiality(n, PeriodicSet::progression(2, 0)));
  EXPECT_TRUE(verify_essentiality(n, PeriodicSet::progression(2, 1)));
  for (Int p : {2, 3, 5, 7, 11, 13}) {
    const auto complement = set_difference(n, PeriodicSet::progression(p, 0));
    EXPECT_TRUE(verify_essentiality(n, complement)) << p;
  }
}

TEST(VerifyEssentiality, Failures) {
  const auto n = PeriodicSet::naturals();
  auto v = explain_essentiality(one_five(), PeriodicSet::finite({1}));
  EXPECT_FALSE(v.holds());
  EXPECT_EQ(v.outcome, EssentialityOutcome::ComplementIsBasis);

  v = explain_essentiality(n, set_difference(n, PeriodicSet::finite({0})));
  EXPECT_EQ(v.outcome, EssentialityOutcome::ComplementFinite);
  EXPECT_FALSE(verify_essentiality(n, PeriodicSet::finite({0})));

  // N \ 4N is not minimal: putting back 2 leaves only even numbers.
  v = explain_essentiality(n, set_difference(n, PeriodicSet::progression(4, 0)));
  EXPECT_EQ(v.outcome, EssentialityOutcome::NotMinimal);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness % 2, 0);

  const Int four[] = {4};
  const auto evens_minus_one = remove_finite(PeriodicSet::progression(2, 0), four);
  EXPECT_FALSE(verify_essentiality(n, evens_minus_one));
}

TEST(VerifyEssentiality, FiniteSubsetsAgreeWithEnumeration) {
  EXPECT_TRUE(verify_essentiality(one_five(), PeriodicSet::finite({1, 5})));
  EXPECT_TRUE(verify_essentiality(three_five(), PeriodicSet::finite({5})));
  EXPECT_FALSE(verify_essentiality(three_five(), PeriodicSet::finite({3, 5})));
}

TEST(VerifyEssentiality, Errors) {
  EXPECT_EQ(code_of([] { verify_essentiality(one_five(), PeriodicSet::finite({7})); }),
            Errc::NotASubset);
  EXPECT_EQ(code_of([] {
              verify_essentiality(PeriodicSet::progression(2, 0), PeriodicSet::finite({2}));
            }),
            Errc::NotABasis);
}

TEST(JSet, Examples) {
  const Family family = {{{3}, 2, {2}}, {{2}, 3, {3}}};
  EXPECT_EQ(j_set(two_three(), family, 0, 6), (IndexSet{1, 2}));
  EXPECT_EQ(omega(6), 2);
  EXPECT_TRUE(j_set(two_three(), family, 3, 2).empty());
  const auto one_five_family = essential_subsets(one_five());
  EXPECT_EQ(j_set(one_five(), one_five_family, 0, 6), (IndexSet{1}));
  EXPECT_LE(1, omega(6));
}

TEST(JSet, Errors) {
  const auto family = essential_subsets(two_three());
  EXPECT_EQ(code_of([&] { j_set(two_three(), family, 6, 6); }), Errc::EqualElements);
  EXPECT_EQ(code_of([&] { j_set(two_three(), family, 1, 6); }), Errc::NotAMember);
}

TEST(CoprimeCheck, Examples) {
  const auto s = two_three();
  auto r = coprime_check(s, {{3}, 2, {2}}, {{2}, 3, {3}});
  EXPECT_EQ(r.d_first, 2);
  EXPECT_EQ(r.d_second, 3);
  EXPECT_EQ(r.gcd, 1);

  const auto big = canonicalize({{105, 70, 42, 30}, 210, {0}, 0});
  r = coprime_check(big, {{105}, 2, {2}}, {{70}, 3, {3}});
  EXPECT_EQ(r.d_first, 2);
  EXPECT_EQ(r.d_second, 3);
  const Int a[] = {105}, b[] = {70};
  EXPECT_EQ(testing::pairwise_gcd(remove_finite(big, a).enumerate(0, 1000)), 2);
  EXPECT_EQ(testing::pairwise_gcd(remove_finite(big, b).enumerate(0, 1000)), 3);
}

TEST(CoprimeCheck, IdenticalSubsetsRejected) {
  const EssentialSubset p{{3}, 2, {2}};
  EXPECT_EQ(code_of([&] { coprime_check(two_three(), p, p); }), Errc::IdenticalSubsets);
}

TEST(CoprimeCheck, NonEssentialPairFailsLoudly) {
  // {3} and {2,3} are not both essential; d-values 2 and 6 share a factor.
  EXPECT_THROW(coprime_check(two_three(), {{3}, 2, {2}}, {{2, 3}, 6, {2, 3}}), LawViolation);
}

TEST(ProofTrace, TwoThreeWithPrimeLabelling) {
  const Family family = {{{3}, 2, {2}}, {{2}, 3, {3}}};
  const auto t = proof_trace(two_three(), family);
  EXPECT_EQ(t.alpha, 1u);
  EXPECT_EQ(t.lambda_set, (std::vector<Int>{3}));
  EXPECT_EQ(t.choice, (std::vector<ChoiceEntry>{{3, 2}}));
  EXPECT_EQ(t.j_sets, (std::vector<PairIndexSet>{{3, 2, {}}}));
  EXPECT_EQ(t.i_tilde, (IndexSet{1, 2}));
  EXPECT_EQ(t.i_tilde, t.index_set());
}

TEST(ProofTrace, TwoThreeCanonicalOrder) {
  const auto t = proof_trace(two_three());
  EXPECT_EQ(t.family[0].members, (std::vector<Int>{2}));
  EXPECT_EQ(t.lambda_set, (std::vector<Int>{2}));
  EXPECT_EQ(t.choice, (std::vector<ChoiceEntry>{{2, 2}}));
  EXPECT_EQ(t.j_sets, (std::vector<PairIndexSet>{{2, 3, {}}}));
  EXPECT_EQ(t.i_tilde, (IndexSet{1, 2}));
}

TEST(ProofTrace, DegenerateSingleFamily) {
  const auto t = proof_trace(one_five());
  EXPECT_TRUE(t.degenerate());
  EXPECT_EQ(t.index_set(), (IndexSet{1}));
  EXPECT_EQ(t.i_tilde, (IndexSet{1}));
  EXPECT_TRUE(t.lambda_set.empty());

  const auto empty = proof_trace(PeriodicSet::naturals());
  EXPECT_TRUE(empty.degenerate());
  EXPECT_FALSE(empty.alpha.has_value());
  EXPECT_TRUE(empty.i_tilde.empty());
}

TEST(ProofTrace, ThreeSubsets) {
  const auto s = canonicalize({{6, 10, 15}, 30, {0}, 0});
  const auto t = proof_trace(s);
  EXPECT_EQ(members_of(t.family), (std::vector<std::vector<Int>>{{6}, {10}, {15}}));
  EXPECT_EQ(t.i_tilde, (IndexSet{1, 2, 3}));
  EXPECT_EQ(t.lambda_set, (std::vector<Int>{6}));
  EXPECT_EQ(t.choice, (std::vector<ChoiceEntry>{{6, 2}}));
  // J_{6,10}: subsets missing both 6 and 10, i.e. {15} only.
  EXPECT_EQ(t.j_sets, (std::vector<PairIndexSet>{{6, 10, {3}}}));
}

TEST(ProofTrace, RejectsComparableFamily) {
  const Family family = {{{3}, 2, {2}}, {{2, 3}, 6, {2, 3}}};
  EXPECT_EQ(code_of([&] { proof_trace(two_three(), family); }), Errc::InvalidInput);
  const Family dup = {{{3}, 2, {2}}, {{3}, 2, {2}}};
  EXPECT_EQ(code_of([&] { proof_trace(two_three(), dup); }), Errc::InvalidInput);
}

}  // namespace
}  // namespace addbase
