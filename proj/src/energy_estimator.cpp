#include "ennms/energy_estimator.hpp"

#include <cmath>

#include "ennms/error.hpp"

namespace ennms {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

DeviceInventory::DeviceInventory(std::vector<DeviceGroup> groups) : groups_(std::move(groups)) {
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    const std::string path = "inventory.group[" + std::to_string(i) + "]";
    if (groups_[i].count < 1) throw ValidationError("count must be >= 1", path + ".count");
    if (!positive_finite(groups_[i].draw_watts)) {
      throw ValidationError("draw must be > 0 watts", path + ".watts");
    }
  }
}

double DeviceInventory::total_watts() const {
  double total = 0.0;
  for (const auto& g : groups_) total += static_cast<double>(g.count) * g.draw_watts;
  return total;
}

DeviceInventory DeviceInventory::merged(const DeviceInventory& other) const {
  auto groups = groups_;
  groups.insert(groups.end(), other.groups_.begin(), other.groups_.end());
  return DeviceInventory(std::move(groups));
}

Tariff::Tariff(double rate_per_kwh, double hours_per_year) : rate_(rate_per_kwh), hours_(hours_per_year) {
  if (!positive_finite(rate_)) throw ValidationError("rate must be > 0", "tariff.rate_per_kwh");
  if (!positive_finite(hours_) || hours_ > kMaxHoursPerYear) {
    throw ValidationError("hours per year must be in (0, 8784]", "tariff.hours_per_year");
  }
}

Medium parse_medium(std::string_view name) {
  if (name == "optical") return Medium::kOptical;
  if (name == "copper") return Medium::kCopper;
  throw ValidationError("unknown medium '" + std::string(name) + "' (expected optical or copper)");
}

std::string_view to_string(Medium m) { return m == Medium::kOptical ? "optical" : "copper"; }

double eee_fraction(Medium m) { return m == Medium::kOptical ? kEeeOpticalFraction : kEeeCopperFraction; }

void validate(const SavingsModel& model) {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FractionOfBaseline>) {
          if (!(m.fraction >= 0.0 && m.fraction <= 1.0)) {
            throw ValidationError("fraction must be in [0, 1]", "savings.fraction");
          }
        } else if constexpr (std::is_same_v<T, EeePerPort>) {
          if (m.ports < 0) throw ValidationError("ports must be >= 0", "savings.ports");
          if (!(std::isfinite(m.per_port_watts) && m.per_port_watts >= 0.0)) {
            throw ValidationError("per-port watts must be >= 0", "savings.per_port_watts");
          }
        } else {
          if (!(std::isfinite(m.watts) && m.watts >= 0.0)) {
            throw ValidationError("watts must be >= 0", "savings.watts");
          }
        }
      },
      model);
}

double savings_watts(const SavingsModel& model, const DeviceInventory& inventory) {
  validate(model);
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FractionOfBaseline>) {
          return inventory.total_watts() * m.fraction;
        } else if constexpr (std::is_same_v<T, EeePerPort>) {
          return eee_savings_watts(m.ports, m.per_port_watts, m.medium);
        } else {
          return m.watts;
        }
      },
      model);
}

Money savings_to_annual_money(double watts, const Tariff& tariff) {
  if (!(std::isfinite(watts) && watts >= 0.0)) throw ValidationError("watts must be >= 0");
  const double kwh = watts / 1000.0 * tariff.hours_per_year();
  return Money::round_dollars(kwh * tariff.rate_per_kwh());
}

Money annual_energy_cost(const DeviceInventory& inventory, const Tariff& tariff) {
  return savings_to_annual_money(inventory.total_watts(), tariff);
}

double eee_savings_watts(std::int64_t ports, double per_port_watts, Medium medium) {
  validate(SavingsModel{EeePerPort{ports, per_port_watts, medium}});
  // Per-port product first so n ports is exactly n times one port.
  return static_cast<double>(ports) * (per_port_watts * eee_fraction(medium));
}

double elasticity_savings_watts(double baseline_watts, double elasticity_fraction) {
  if (!(elasticity_fraction >= 0.0 && elasticity_fraction <= 1.0)) {
    throw ValidationError("elasticity fraction must be in [0, 1]");
  }
  if (!(std::isfinite(baseline_watts) && baseline_watts >= 0.0)) {
    throw ValidationError("baseline watts must be >= 0");
  }
  return baseline_watts * elasticity_fraction;
}

}  // namespace ennms
