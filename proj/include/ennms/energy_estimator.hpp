#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ennms/money.hpp"

namespace ennms {

struct DeviceGroup {
  std::int64_t count = 1;
  double draw_watts = 0.0;
  std::string label;
  friend bool operator==(const DeviceGroup&, const DeviceGroup&) = default;
};

/// Static power inventory: groups of identical devices.
class DeviceInventory {
 public:
  DeviceInventory() = default;
  /// Throws ValidationError if a count < 1 or a draw is not positive.
  explicit DeviceInventory(std::vector<DeviceGroup> groups);

  const std::vector<DeviceGroup>& groups() const { return groups_; }
  double total_watts() const;
  /// Union of two inventories.
  DeviceInventory merged(const DeviceInventory& other) const;

  friend bool operator==(const DeviceInventory&, const DeviceInventory&) = default;

 private:
  std::vector<DeviceGroup> groups_;
};

inline constexpr double kHoursPerYear = 8760.0;
inline constexpr double kMaxHoursPerYear = 8784.0;

/// Flat electricity tariff.
class Tariff {
 public:
  /// rate in dollars per kWh (sub-cent rates allowed). Throws ValidationError
  /// unless rate > 0 and 0 < hours <= 8784.
  explicit Tariff(double rate_per_kwh, double hours_per_year = kHoursPerYear);

  double rate_per_kwh() const { return rate_; }
  double hours_per_year() const { return hours_; }

  friend bool operator==(const Tariff&, const Tariff&) = default;

 private:
  double rate_;
  double hours_;
};

enum class Medium { kOptical, kCopper };

/// Low-power-idle savings as a share of pluggable transceiver power.
inline constexpr double kEeeOpticalFraction = 0.20;
inline constexpr double kEeeCopperFraction = 0.74;
/// Typical draw of a compact 1G/10G transceiver.
inline constexpr double kDefaultTransceiverWatts = 1.0;

Medium parse_medium(std::string_view name);
std::string_view to_string(Medium m);
double eee_fraction(Medium m);

struct FractionOfBaseline {
  double fraction;
};
struct EeePerPort {
  std::int64_t ports;
  double per_port_watts;
  Medium medium;
};
struct FixedWatts {
  double watts;
};
/// How a policy turns an inventory into saved watts.
using SavingsModel = std::variant<FractionOfBaseline, EeePerPort, FixedWatts>;

/// Throws ValidationError if the model's parameters are out of range.
void validate(const SavingsModel& model);
double savings_watts(const SavingsModel& model, const DeviceInventory& inventory);

Money annual_energy_cost(const DeviceInventory& inventory, const Tariff& tariff);
double eee_savings_watts(std::int64_t ports, double per_port_watts, Medium medium);
double elasticity_savings_watts(double baseline_watts, double elasticity_fraction);
Money savings_to_annual_money(double watts, const Tariff& tariff);

}  // namespace ennms
