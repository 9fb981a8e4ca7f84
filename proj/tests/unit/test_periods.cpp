#include <gtest/gtest.h>

#include <algorithm>

#include "bouquet/error.hpp"
#include "bouquet/homology.hpp"
#include "bouquet/periods.hpp"
#include "bouquet/pl_oracle.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/realizable.hpp"

using namespace bouquet;
using fixtures::make;

namespace {

const PeriodCertificate* find_rule(const std::vector<PeriodCertificate>& certs, Rule rule) {
  auto it = std::find_if(certs.begin(), certs.end(),
                         [&](const PeriodCertificate& c) { return c.rule == rule; });
  return it == certs.end() ? nullptr : &*it;
}

}  // namespace

TEST(Periods, FixCountFreeBranch) {
  const MapAction f = fixtures::reversing_doubling();
  EXPECT_EQ(fix_count(f, 1), 3);
  EXPECT_EQ(fix_count(f, 2), 3);
  for (std::uint64_t m = 1; m <= 10; ++m)
    EXPECT_EQ(fix_count(fixtures::doubling(), m), oracle::circle_power_fixed_points(2, m));
  EXPECT_THROW(fix_count(f, 0), InputError);
}

TEST(Periods, FixCountFixedBranch) {
  EXPECT_EQ(fix_count(make({"a1"}, BranchClass::period(1)), 1), 1);
  EXPECT_EQ(fix_count(make({"a1 a1 a1"}, BranchClass::period(1)), 1), 2);
}

TEST(Periods, FixCountReversingFixedBranch) {
  const MapAction f = make({"a1' a1' a1'"}, BranchClass::period(1));
  EXPECT_EQ(fix_count(f, 1), 4);
  EXPECT_EQ(fix_count(f, 2), 8);
  EXPECT_EQ(fix_count(f, 3), 28);
  const PLLift lift = build_lift(f);
  for (std::uint64_t m = 1; m <= 5; ++m) EXPECT_EQ(count_fixed(lift, m), fix_count(f, m)) << m;
}

TEST(Periods, CensusReversingDoubling) {
  const FixCountTable t = per_census(fixtures::reversing_doubling(), 2);
  EXPECT_EQ(t.per_count(1), 3);
  EXPECT_EQ(t.per_count(2), 0);
  const FixCountTable one = per_census(fixtures::lowgrow(), 1);
  EXPECT_EQ(one.per_count(1), one.fix_count(1));
}

TEST(Periods, CensusDoublingMatchesNecklaceCount) {
  const FixCountTable t = per_census(fixtures::doubling(), 12);
  for (std::uint64_t m = 1; m <= 12; ++m) {
    BigInt necklaces = 0;
    for (std::uint64_t r = 1; r <= m; ++r)
      if (m % r == 0) necklaces += oracle::mobius(m / r) * oracle::circle_power_fixed_points(2, r);
    EXPECT_EQ(t.per_count(m), necklaces);
  }
}

TEST(Periods, LefschetzPerCount) {
  const MapAction f = fixtures::reversing_doubling();
  EXPECT_FALSE(lefschetz_per_count(f, 2).has_value());
  ASSERT_TRUE(lefschetz_per_count(f, 3).has_value());
  EXPECT_EQ(*lefschetz_per_count(f, 3), 6);
  EXPECT_EQ(per_census(f, 3).per_count(3), 6);
  EXPECT_EQ(*lefschetz_per_count(fixtures::lowgrow(), 1), 1);
  EXPECT_EQ(per_census(fixtures::lowgrow(), 1).per_count(1), 1);
  EXPECT_THROW(lefschetz_per_count(make({"a1 a1"}, BranchClass::period(1)), 1), PreconditionError);
}

TEST(Periods, LefschetzFixCheck) {
  const MapAction f = fixtures::reversing_doubling();
  const FixCheck one = lefschetz_fix_check(f, 1);
  EXPECT_TRUE(one.passed);
  EXPECT_EQ(one.kind, FixCheck::Kind::Equality);
  EXPECT_EQ(one.lefschetz, 3);
  const FixCheck two = lefschetz_fix_check(f, 2);
  EXPECT_TRUE(two.passed);
  EXPECT_EQ(two.lefschetz, -3);
  EXPECT_EQ(two.fix, 3);
  const FixCheck bound = lefschetz_fix_check(make({"a1 a1 a1"}, BranchClass::period(1)), 1);
  EXPECT_TRUE(bound.passed);
  EXPECT_EQ(bound.kind, FixCheck::Kind::Bound);
  EXPECT_EQ(bound.lefschetz, -2);
  EXPECT_EQ(bound.fix, 2);
}

TEST(Periods, DoublingCases) {
  auto b = criteria_doubling(fixtures::doubling());
  ASSERT_TRUE(b);
  EXPECT_EQ(b->rule, Rule::DoublingB);
  EXPECT_EQ(b->conclusion.kind, ConclusionKind::AllPeriods);
  auto e = criteria_doubling(fixtures::reversing_doubling());
  ASSERT_TRUE(e);
  EXPECT_EQ(e->rule, Rule::DoublingE);
  EXPECT_EQ(e->conclusion.to_string(), "Per contains N \\ {2}");
  auto d = criteria_doubling(make({"a1' a1'"}, BranchClass::period(1)));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->rule, Rule::DoublingD);
  auto c = criteria_doubling(make({"a1' a1' a1'"}));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->rule, Rule::DoublingC);
  auto a = criteria_doubling(make({"a1", "a1 a2 a2"}));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->rule, Rule::DoublingA);
  EXPECT_EQ(a->witness.j, 2u);
  EXPECT_FALSE(criteria_doubling(make({"a1", "a2"})));
}

TEST(Periods, LowgrowCases) {
  auto b = criteria_lowgrow(make({"a1 a2", "a1"}));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->rule, Rule::LowgrowB);
  EXPECT_EQ(b->conclusion.kind, ConclusionKind::AllButOne);
  EXPECT_FALSE(criteria_lowgrow(make({"a1", "a1"})));
  auto c = criteria_lowgrow(make({"a1' a2'", "a1'"}));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->rule, Rule::LowgrowC);
  EXPECT_EQ(c->conclusion.kind, ConclusionKind::AdjacentPair);
  auto a = criteria_lowgrow(make({"a1", "a1 a3", "a2 a3"}));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->rule, Rule::LowgrowA);
  auto d = criteria_lowgrow(make({"a1 a2", "a1"}, BranchClass::period(1)));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->rule, Rule::LowgrowD);
}

TEST(Periods, LowgrowFixtureUsesCaseB) {
  const MapAction f = fixtures::lowgrow();
  auto cert = criteria_lowgrow(f);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->rule, Rule::LowgrowB);
  EXPECT_EQ(cert->witness.i, 3u);
  const auto pair = broader_lowgrow_pair(f);
  ASSERT_TRUE(pair);
  EXPECT_EQ(*pair, std::make_pair(std::size_t{1}, std::size_t{3}));
}

TEST(Periods, DelayLowgrow) {
  auto cert = criteria_delaylowgrow(fixtures::delaylowgrow(), 6);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->witness.power, 3u);
  EXPECT_EQ(cert->conclusion.kind, ConclusionKind::AllPeriods);
  EXPECT_EQ(cert->conclusion.scale, 3u);
  EXPECT_EQ(cert->conclusion.to_string(), "Per contains 3N");
  EXPECT_FALSE(criteria_delaylowgrow(make({"a1", "a2", "a3"}), 6));
  auto early = criteria_delaylowgrow(fixtures::lowgrow(), 6);
  ASSERT_TRUE(early);
  EXPECT_EQ(early->witness.power, 2u);
}

TEST(Periods, FixGrowth) {
  const FixCountTable t = per_census(fixtures::doubling(), 4);
  auto cert = fix_growth_test(t, 4);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->conclusion.kind, ConclusionKind::PeriodPresent);
  EXPECT_EQ(cert->conclusion.value, 4u);
  EXPECT_EQ(t.per_count(4), 12);
  const FixCountTable r = per_census(fixtures::reversing_doubling(), 3);
  EXPECT_EQ(r.fix_count(3), 9);
  EXPECT_TRUE(fix_growth_test(r, 3));
  EXPECT_FALSE(fix_growth_test(r, 2));
}

TEST(Periods, DominantPeriods) {
  const MapAction d = fixtures::doubling();
  const auto dp = dominant_periods(d, eigenvalues(abelianize(d)), per_census(d, 12));
  ASSERT_TRUE(dp);
  EXPECT_EQ(dp->analytic_m0, 6u);
  EXPECT_EQ(dp->empirical_m0, 1u);
  ASSERT_TRUE(dp->certificate);
  EXPECT_EQ(dp->certificate->conclusion.kind, ConclusionKind::Tail);

  const MapAction f = fixtures::m0_three();
  const auto three = dominant_periods(f, eigenvalues(abelianize(f)), per_census(f, 12));
  ASSERT_TRUE(three);
  EXPECT_EQ(three->empirical_m0, 3u);
  EXPECT_EQ(three->analytic_m0, 24u);

  const MapAction g = fixtures::delaylowgrow();
  EXPECT_FALSE(dominant_periods(g, eigenvalues(abelianize(g)), per_census(g, 12)));
}

TEST(Periods, ConclusionCertifies) {
  const Conclusion all{ConclusionKind::AllPeriods, 3, 0};
  EXPECT_TRUE(all.certifies(6));
  EXPECT_FALSE(all.certifies(4));
  const Conclusion but_two{ConclusionKind::AllButTwo, 1, 0};
  EXPECT_FALSE(but_two.certifies(2));
  EXPECT_TRUE(but_two.certifies(3));
  const Conclusion tail{ConclusionKind::Tail, 1, 5};
  EXPECT_TRUE(tail.certifies(7));
  EXPECT_FALSE(tail.certifies(4));
}

TEST(Periods, RecheckDetectsTampering) {
  const MapAction f = fixtures::reversing_doubling();
  auto cert = criteria_doubling(f);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(recheck(*cert, f));
  EXPECT_FALSE(recheck(*cert, fixtures::doubling()));
}

TEST(Periods, CertifyLowgrowCompletesToAllPeriods) {
  const MapAction f = fixtures::lowgrow();
  const auto certs = certify(f, per_census(f, 12), eigenvalues(abelianize(f)));
  const PeriodCertificate* completion = find_rule(certs, Rule::Completion);
  ASSERT_NE(completion, nullptr);
  EXPECT_EQ(completion->conclusion.kind, ConclusionKind::AllPeriods);
  EXPECT_EQ(completion->conclusion.scale, 1u);
  for (const auto& c : certs) EXPECT_TRUE(recheck(c, f)) << c.to_string();
}

TEST(Periods, CertifyNeverContradictsCensusThroughCompletion) {
  for (const MapAction& f : fixtures::worked_examples()) {
    const FixCountTable t = per_census(f, 12);
    for (const auto& c : certify(f, t, eigenvalues(abelianize(f)))) {
      EXPECT_TRUE(recheck(c, f)) << c.to_string();
      if (c.rule == Rule::Completion || c.witness.power == 1) {
        EXPECT_TRUE(consistent_with_census(c, t)) << c.to_string();
      }
    }
  }
}

TEST(PeriodsProperty, CensusNonnegative) {
  oracle::Generator gen(101);
  for (int trial = 0; trial < 100; ++trial) {
    const MapAction f = oracle::realizable_action(gen, 3, 4);
    const FixCountTable t = per_census(f, 12);
    for (std::uint64_t m = 1; m <= 12; ++m) EXPECT_GE(t.per_count(m), 0);
  }
}

TEST(PeriodsProperty, LefschetzEqualsCensusWhenApplicable) {
  oracle::Generator gen(103);
  for (int trial = 0; trial < 100; ++trial) {
    const MapAction f = oracle::realizable_action(gen, 3, 4);
    const FixCountTable t = per_census(f, 12);
    for (std::uint64_t m = 1; m <= 12; ++m) {
      const auto l = lefschetz_per_count(f, m);
      if (l) {
        EXPECT_EQ(*l, t.per_count(m));
      }
    }
  }
}

TEST(PeriodsProperty, EvenIdentityForReversingMaps) {
  oracle::Generator gen(107);
  int tested = 0;
  while (tested < 100) {
    const MapAction f = oracle::realizable_action(gen, 3, 4);
    if (orientation(f) != Orientation::Reversing) continue;
    ++tested;
    const HomologyMatrix m = abelianize(f);
    const FixCountTable t = per_census(f, 10);
    for (std::uint64_t p : {3u, 5u})
      EXPECT_EQ(periodic_lefschetz(m, 2 * p), -t.per_count(2 * p) - 2 * t.per_count(p));
  }
}

TEST(PeriodsProperty, FixCountsAgreeWithLiteralWords) {
  oracle::Generator gen(109);
  for (int trial = 0; trial < 100; ++trial) {
    const MapAction f = gen.action(3, 3, true, BranchClass::period(1));
    const auto images = oracle::raw_images(f);
    for (std::uint64_t m = 1; m <= 4; ++m) {
      BigInt chi_sum = 0, gamma_sum = 0;
      for (int j = 1; j <= static_cast<int>(f.n()); ++j) {
        const auto w = oracle::expand(images, m, j);
        chi_sum += oracle::chi(w, j);
        gamma_sum += oracle::gamma(w, j);
      }
      const bool preserving = orientation_of_iterate(f, m) == Orientation::Preserving;
      const BigInt expected = 1 + abs(preserving ? gamma_sum : chi_sum);
      EXPECT_EQ(fix_count(f, m), expected);
    }
  }
}
