#include <random>

#include <gtest/gtest.h>

#include "ennms/error.hpp"
#include "ennms/value_model.hpp"
#include "oracles.hpp"

using namespace ennms;

namespace {

Money usd(std::int64_t d) { return Money::from_dollars(d); }

ReputationProfile profile_of(const std::vector<CaseTriple>& rows) {
  std::vector<TechnologyClass> entries;
  double t = 1e-6;
  for (std::size_t i = 0; i < rows.size(); ++i, t *= 10) {
    entries.push_back({"rung" + std::to_string(i), TimeScale(t), rows[i]});
  }
  return ReputationProfile(std::move(entries));
}

}  // namespace

TEST(TotalValue, EnterpriseRows) {
  EXPECT_EQ(total_value(usd(17532), usd(10000), usd(0)).total, usd(27532));
  EXPECT_EQ(total_value(usd(8766), usd(-200000), usd(0)).total, usd(-191234));
  EXPECT_EQ(total_value(usd(0), usd(0)).total, usd(0));
}

TEST(TotalValue, SubtractsExtraCosts) {
  const auto b = total_value(usd(17532), usd(10000), usd(2000));
  EXPECT_EQ(b.total, usd(25532));
  EXPECT_EQ(b.energy_component + b.reputation_component - b.extra_costs, b.total);
}

TEST(TotalValue, OverflowIsReported) {
  const Money big = Money::from_cents(std::numeric_limits<std::int64_t>::max() - 1);
  EXPECT_THROW(total_value(big, big, Money{}), OverflowError);
}

TEST(TotalValue, ExactAgainstBigIntegerOracle) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> cents(-(1LL << 60), 1LL << 60);
  for (int i = 0; i < 1000; ++i) {
    const auto e = cents(rng);
    const auto r = cents(rng);
    const auto total = total_value(Money::from_cents(e), Money::from_cents(r), Money{}).total;
    ASSERT_EQ(std::to_string(total.cents()), oracle::add_decimal(e, r));
  }
}

TEST(Catalog, LoadsRowsVerbatim) {
  const auto& cat = sample_reputation_catalog();
  ASSERT_EQ(cat.entries().size(), 8u);
  EXPECT_EQ(cat.entries().front().name, "realtime");
  EXPECT_EQ(cat.entries().back().name, "TE /node");
  EXPECT_EQ(reputation_value(cat, "TE /node", Case::kWorst), usd(-50'000'000));
  EXPECT_EQ(reputation_value(cat, "realtime", Case::kBest), usd(0));
  EXPECT_EQ(reputation_value(cat, "TE /card", Case::kWorst), usd(-10'000'000));
  EXPECT_DOUBLE_EQ(cat.find("TE /PIC").time_scale.seconds(), 50.0);
}

TEST(Catalog, UnknownTechnologyNamesTheKey) {
  try {
    reputation_value(sample_reputation_catalog(), "nosuch", Case::kAverage);
    FAIL() << "expected LookupError";
  } catch (const LookupError& e) {
    EXPECT_EQ(e.key(), "nosuch");
    EXPECT_NE(std::string(e.what()).find("nosuch"), std::string::npos);
  }
}

TEST(Catalog, CaseOrderingHoldsExceptEnergyTe) {
  const auto& cat = sample_reputation_catalog();
  EXPECT_EQ(case_ordering_violations(cat), std::vector<std::string>{"Energy TE"});
  for (const auto& e : cat.entries()) {
    if (e.name == "Energy TE") continue;
    EXPECT_LE(reputation_value(cat, e.name, Case::kWorst), reputation_value(cat, e.name, Case::kAverage)) << e.name;
    EXPECT_LE(reputation_value(cat, e.name, Case::kAverage), reputation_value(cat, e.name, Case::kBest)) << e.name;
  }
}

TEST(ValidateProfile, CatalogWarnsOnTwoBestColumnIncreases) {
  const auto warnings = validate_reputation_profile(sample_reputation_catalog());
  ASSERT_EQ(warnings.size(), 2u);
  EXPECT_EQ(warnings[0].column, Case::kBest);
  EXPECT_EQ(warnings[0].later, "TE /PIC");
  EXPECT_EQ(warnings[0].later_value, usd(30000));
  EXPECT_EQ(warnings[0].earlier_value, usd(20000));
  EXPECT_EQ(warnings[1].column, Case::kBest);
  EXPECT_EQ(warnings[1].later, "TE /card");
  EXPECT_EQ(warnings[1].later_value, usd(50000));
}

TEST(ValidateProfile, TrivialProfiles) {
  EXPECT_TRUE(validate_reputation_profile(profile_of({{}})).empty());
  EXPECT_TRUE(validate_reputation_profile(profile_of({{}, {usd(30), usd(20), usd(10)}, {usd(20), usd(10), usd(0)},
                                                      {usd(10), usd(0), usd(-10)}}))
                  .empty());
}

TEST(ValidateProfile, SortedDescendingIsCleanAndOneBumpIsOneWarning) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::int64_t> step(0, 50'000);
  std::uniform_int_distribution<int> size(3, 10);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = size(rng);
    std::vector<CaseTriple> rows{{}};
    CaseTriple cur{usd(step(rng)), usd(step(rng)), usd(step(rng))};
    for (int i = 1; i < n; ++i) {
      rows.push_back(cur);
      cur.best -= usd(step(rng));
      cur.average -= usd(step(rng));
      cur.worst -= usd(step(rng));
    }
    ASSERT_TRUE(validate_reputation_profile(profile_of(rows)).empty());

    // Raise one comparable entry above its predecessor in one column,
    // keeping it at or below the following entry's predecessor.
    std::uniform_int_distribution<int> pick(2, n - 1);
    const int i = pick(rng);
    const Case c = static_cast<Case>(trial % 3);
    auto bumped = rows;
    bumped[i].at(c) = rows[i - 1].at(c) + usd(1);
    if (i + 1 < n) bumped[i + 1].at(c) = std::min(bumped[i + 1].at(c), bumped[i].at(c));
    const auto w = validate_reputation_profile(profile_of(bumped));
    ASSERT_EQ(w.size(), 1u) << "trial " << trial;
    EXPECT_EQ(w[0].column, c);
    EXPECT_EQ(w[0].later, "rung" + std::to_string(i));
  }
}

TEST(ReputationProfile, RejectsMalformedProfiles) {
  EXPECT_THROW(ReputationProfile({}), ValidationError);
  EXPECT_THROW(profile_of({{usd(1), usd(0), usd(0)}}), ValidationError);
  EXPECT_THROW(ReputationProfile({{"a", TimeScale(1), {}}, {"b", TimeScale(1), {}}}), ValidationError);
  EXPECT_THROW(TimeScale(0.0), ValidationError);
  EXPECT_THROW(TimeScale(-1.0), ValidationError);
}

TEST(Case, ParsesNames) {
  EXPECT_EQ(parse_case("average"), Case::kAverage);
  EXPECT_THROW(parse_case("median"), LookupError);
}
