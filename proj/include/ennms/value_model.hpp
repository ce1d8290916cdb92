#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ennms/money.hpp"

namespace ennms {

/// Time-domain parameter of a control technology, in seconds.
class TimeScale {
 public:
  /// Throws ValidationError unless seconds is finite and > 0.
  explicit TimeScale(double seconds);
  double seconds() const { return seconds_; }
  friend bool operator==(TimeScale, TimeScale) = default;
  friend auto operator<=>(TimeScale, TimeScale) = default;

 private:
  double seconds_;
};

enum class Case { kBest, kAverage, kWorst };

std::string_view to_string(Case c);
/// "best" | "average" | "worst"; throws LookupError otherwise.
Case parse_case(std::string_view name);

/// Best/average/worst monetary triple for one quantity.
struct CaseTriple {
  Money best;
  Money average;
  Money worst;

  Money at(Case c) const;
  Money& at(Case c);
  friend bool operator==(const CaseTriple&, const CaseTriple&) = default;
};

/// One rung of the time-domain ladder with its reputation outcomes.
struct TechnologyClass {
  std::string name;
  TimeScale time_scale;
  CaseTriple reputation;
};

/// Step catalog of reputation value (f2) keyed by technology name.
///
/// Construction enforces ascending time scales, unique names and an
/// all-zero first (baseline) entry. Case ordering within a row and the
/// non-increasing-in-t property are reported, not enforced: the sample
/// catalog violates both and must still load unchanged.
class ReputationProfile {
 public:
  explicit ReputationProfile(std::vector<TechnologyClass> entries);

  const std::vector<TechnologyClass>& entries() const { return entries_; }
  /// Throws LookupError naming the key if absent.
  const TechnologyClass& find(std::string_view technology) const;
  bool contains(std::string_view technology) const;

 private:
  std::vector<TechnologyClass> entries_;
};

/// The eight-rung sample reputation catalog, realtime through TE /node.
const ReputationProfile& sample_reputation_catalog();

struct ValueBreakdown {
  Money energy_component;
  Money reputation_component;
  Money extra_costs;
  Money total;
};

/// V = energy + reputation - extra costs, exact in cents.
ValueBreakdown total_value(Money energy_savings, Money reputation, Money extra_costs = Money{});

Money reputation_value(const ReputationProfile& profile, std::string_view technology, Case which);

struct ProfileWarning {
  Case column;
  std::string earlier;
  std::string later;
  Money earlier_value;
  Money later_value;

  std::string message() const;
};

/// One warning per (column, adjacent pair) where the value increases with t.
/// The step from the zero baseline entry to the first active rung is the
/// initial reputation gain and is not compared.
std::vector<ProfileWarning> validate_reputation_profile(const ReputationProfile& profile);

/// Names of entries whose triple is not worst <= average <= best.
std::vector<std::string> case_ordering_violations(const ReputationProfile& profile);

}  // namespace ennms
