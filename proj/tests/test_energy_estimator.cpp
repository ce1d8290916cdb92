#include <random>

#include <gtest/gtest.h>

#include "ennms/energy_estimator.hpp"
#include "ennms/error.hpp"

using namespace ennms;

TEST(AnnualEnergyCost, EnterpriseAndCarrierBaselines) {
  EXPECT_EQ(annual_energy_cost(DeviceInventory({{100, 300.0, "switch"}}), Tariff(0.10, 8766)),
            Money::from_dollars(26298));
  EXPECT_EQ(annual_energy_cost(DeviceInventory({{20, 4000.0, "router"}}), Tariff(0.10, 8760)),
            Money::from_dollars(70080));
  EXPECT_EQ(annual_energy_cost(DeviceInventory({{1, 1000.0, "unit"}}), Tariff(0.10, 1)), Money::from_cents(10));
}

TEST(AnnualEnergyCost, DefaultHoursPerYear) { EXPECT_DOUBLE_EQ(Tariff(0.1).hours_per_year(), 8760.0); }

TEST(Inventory, RejectsBadGroups) {
  EXPECT_THROW(DeviceInventory({{0, 300.0, "x"}}), ValidationError);
  EXPECT_THROW(DeviceInventory({{1, 0.0, "x"}}), ValidationError);
  EXPECT_THROW(DeviceInventory({{1, -5.0, "x"}}), ValidationError);
  EXPECT_DOUBLE_EQ(DeviceInventory({{100, 300.0, ""}, {2, 50.0, ""}}).total_watts(), 30100.0);
}

TEST(Tariff, RejectsBadValues) {
  EXPECT_THROW(Tariff(0.0), ValidationError);
  EXPECT_THROW(Tariff(-0.1), ValidationError);
  EXPECT_THROW(Tariff(0.1, 0.0), ValidationError);
  EXPECT_THROW(Tariff(0.1, 8785.0), ValidationError);
  EXPECT_NO_THROW(Tariff(0.1, 8784.0));
}

TEST(EeeSavings, StatedFractions) {
  EXPECT_NEAR(eee_savings_watts(160, 1.0, Medium::kOptical), 32.0, 1e-12);
  EXPECT_NEAR(eee_savings_watts(380, 1.0, Medium::kCopper), 281.2, 1e-12);
  EXPECT_EQ(eee_savings_watts(0, 1.0, Medium::kCopper), 0.0);
  EXPECT_THROW(eee_savings_watts(-1, 1.0, Medium::kCopper), ValidationError);
  EXPECT_THROW(eee_savings_watts(1, -1.0, Medium::kCopper), ValidationError);
  EXPECT_THROW(parse_medium("wireless"), ValidationError);
  EXPECT_EQ(parse_medium("optical"), Medium::kOptical);
}

TEST(EeeSavings, ScalesExactlyWithPortCount) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> ports(0, 100'000);
  std::uniform_real_distribution<double> watts(0.0, 25.0);
  for (int i = 0; i < 1000; ++i) {
    const auto n = ports(rng);
    const double w = watts(rng);
    for (Medium m : {Medium::kOptical, Medium::kCopper}) {
      ASSERT_EQ(eee_savings_watts(n, w, m), static_cast<double>(n) * eee_savings_watts(1, w, m));
    }
  }
}

TEST(Elasticity, OrganicRange) {
  EXPECT_DOUBLE_EQ(elasticity_savings_watts(80'000, 0.05), 4'000);
  EXPECT_DOUBLE_EQ(elasticity_savings_watts(80'000, 0.10), 8'000);
  EXPECT_EQ(elasticity_savings_watts(1234.0, 0.0), 0.0);
  EXPECT_THROW(elasticity_savings_watts(1000, 1.5), ValidationError);
  EXPECT_THROW(elasticity_savings_watts(1000, -0.1), ValidationError);
}

TEST(SavingsToMoney, UnitBridge) {
  EXPECT_EQ(savings_to_annual_money(30'000, Tariff(0.10, 8766)), Money::from_dollars(26298));
  EXPECT_EQ(savings_to_annual_money(0, Tariff(0.37, 100)), Money{});
  EXPECT_EQ(savings_to_annual_money(1'000, Tariff(0.10, 8760)), Money::from_dollars(876));
  EXPECT_THROW(savings_to_annual_money(-1, Tariff(0.1)), ValidationError);
}

TEST(SavingsModel, DispatchesEachKind) {
  const DeviceInventory inv({{10, 100.0, ""}});
  EXPECT_DOUBLE_EQ(savings_watts(FractionOfBaseline{0.25}, inv), 250.0);
  EXPECT_NEAR(savings_watts(EeePerPort{10, 1.0, Medium::kCopper}, inv), 7.4, 1e-12);
  EXPECT_DOUBLE_EQ(savings_watts(FixedWatts{42.0}, inv), 42.0);
  EXPECT_THROW(savings_watts(FractionOfBaseline{1.5}, inv), ValidationError);
  EXPECT_THROW(savings_watts(FixedWatts{-1.0}, inv), ValidationError);
}

TEST(AnnualEnergyCost, LinearOverInventoryUnion) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> count(1, 500);
  std::uniform_real_distribution<double> draw(1.0, 5000.0);
  std::uniform_real_distribution<double> rate(0.01, 0.5);
  std::uniform_real_distribution<double> hours(1.0, 8784.0);
  for (int i = 0; i < 1000; ++i) {
    const DeviceInventory a({{count(rng), draw(rng), "a"}});
    const DeviceInventory b({{count(rng), draw(rng), "b"}, {count(rng), draw(rng), "c"}});
    const Tariff t(rate(rng), hours(rng));
    const auto joint = annual_energy_cost(a.merged(b), t);
    const auto separate = annual_energy_cost(a, t) + annual_energy_cost(b, t);
    ASSERT_LE(std::abs(joint.cents() - separate.cents()), 1) << i;
  }
}

TEST(AnnualEnergyCost, MonotoneInEveryInput) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::int64_t> count(1, 500);
  std::uniform_real_distribution<double> draw(1.0, 5000.0);
  std::uniform_real_distribution<double> rate(0.01, 0.5);
  std::uniform_real_distribution<double> hours(1.0, 8000.0);
  std::uniform_real_distribution<double> bump(1.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const auto n = count(rng);
    const double w = draw(rng);
    const double r = rate(rng);
    const double h = hours(rng);
    const auto base = annual_energy_cost(DeviceInventory({{n, w, ""}}), Tariff(r, h));
    ASSERT_GE(annual_energy_cost(DeviceInventory({{n + 1, w, ""}}), Tariff(r, h)), base);
    ASSERT_GE(annual_energy_cost(DeviceInventory({{n, w * bump(rng), ""}}), Tariff(r, h)), base);
    ASSERT_GE(annual_energy_cost(DeviceInventory({{n, w, ""}}), Tariff(r * bump(rng), h)), base);
    ASSERT_GE(annual_energy_cost(DeviceInventory({{n, w, ""}}), Tariff(r, std::min(8784.0, h * bump(rng)))), base);
  }
}

TEST(DayNightTariff, SumOfTwoTariffs) {
  // An inventory billed 12 h/day at a day rate and 12 h/day at a night rate.
  const DeviceInventory inv({{100, 300.0, ""}});
  const auto day = annual_energy_cost(inv, Tariff(0.12, 4380));
  const auto night = annual_energy_cost(inv, Tariff(0.08, 4380));
  EXPECT_EQ(day + night, annual_energy_cost(inv, Tariff(0.10, 8760)));
}
