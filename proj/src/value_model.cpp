#include "ennms/value_model.hpp"

#include <array>
#include <cmath>

#include "ennms/error.hpp"

namespace ennms {

TimeScale::TimeScale(double seconds) : seconds_(seconds) {
  if (!std::isfinite(seconds) || seconds <= 0.0) {
    throw ValidationError("time scale must be a positive number of seconds");
  }
}

std::string_view to_string(Case c) {
  switch (c) {
    case Case::kBest: return "best";
    case Case::kAverage: return "average";
    case Case::kWorst: return "worst";
  }
  return "?";
}

Case parse_case(std::string_view name) {
  if (name == "best") return Case::kBest;
  if (name == "average") return Case::kAverage;
  if (name == "worst") return Case::kWorst;
  throw LookupError("unknown case '" + std::string(name) + "' (expected best, average or worst)",
                    std::string(name));
}

Money CaseTriple::at(Case c) const {
  switch (c) {
    case Case::kBest: return best;
    case Case::kAverage: return average;
    case Case::kWorst: return worst;
  }
  return worst;
}

Money& CaseTriple::at(Case c) {
  switch (c) {
    case Case::kBest: return best;
    case Case::kAverage: return average;
    case Case::kWorst: return worst;
  }
  return worst;
}

ReputationProfile::ReputationProfile(std::vector<TechnologyClass> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("reputation profile has no entries");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    const std::string path = "profile[" + e.name + "]";
    if (i > 0 && !(entries_[i - 1].time_scale < e.time_scale)) {
      throw ValidationError("time scales must be strictly increasing", path);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[j].name == e.name) throw ValidationError("duplicate technology name", path);
    }
  }
  if (entries_.front().reputation != CaseTriple{}) {
    throw ValidationError("the first (realtime) entry must be zero in every case",
                          "profile[" + entries_.front().name + "]");
  }
}

const TechnologyClass& ReputationProfile::find(std::string_view technology) const {
  for (const auto& e : entries_) {
    if (e.name == technology) return e;
  }
  throw LookupError("unknown technology '" + std::string(technology) + "'", std::string(technology));
}

bool ReputationProfile::contains(std::string_view technology) const {
  for (const auto& e : entries_) {
    if (e.name == technology) return true;
  }
  return false;
}

const ReputationProfile& sample_reputation_catalog() {
  static const ReputationProfile catalog = [] {
    auto row = [](const char* name, double t, std::int64_t best, std::int64_t avg, std::int64_t worst) {
      return TechnologyClass{name, TimeScale(t),
                             {Money::from_dollars(best), Money::from_dollars(avg), Money::from_dollars(worst)}};
    };
    return ReputationProfile({
        row("realtime", 1e-6, 0, 0, 0),
        row("802.3az", 1e-3, 50'000, 50'000, 50'000),
        // Worst exceeds average here; kept as given.
        row("Energy TE", 1e-1, 50'000, 40'000, 50'000),
        row("TE /link", 1e0, 40'000, 10'000, 0),
        row("TE /plane", 1e1, 20'000, -10'000, -50'000),
        row("TE /PIC", 5e1, 30'000, -10'000, -100'000),
        row("TE /card", 5e2, 50'000, -20'000, -10'000'000),
        row("TE /node", 1e3, -100'000, -100'000, -50'000'000),
    });
  }();
  return catalog;
}

ValueBreakdown total_value(Money energy_savings, Money reputation, Money extra_costs) {
  return {energy_savings, reputation, extra_costs, energy_savings + reputation - extra_costs};
}

Money reputation_value(const ReputationProfile& profile, std::string_view technology, Case which) {
  return profile.find(technology).reputation.at(which);
}

std::string ProfileWarning::message() const {
  return std::string(to_string(column)) + " column increases from " + earlier + " (" +
         earlier_value.display() + ") to " + later + " (" + later_value.display() + ")";
}

std::vector<ProfileWarning> validate_reputation_profile(const ReputationProfile& profile) {
  std::vector<ProfileWarning> out;
  const auto& e = profile.entries();
  for (Case c : {Case::kBest, Case::kAverage, Case::kWorst}) {
    for (std::size_t i = 2; i < e.size(); ++i) {
      const Money prev = e[i - 1].reputation.at(c);
      const Money cur = e[i].reputation.at(c);
      if (cur > prev) out.push_back({c, e[i - 1].name, e[i].name, prev, cur});
    }
  }
  return out;
}

}  // namespace ennms

namespace ennms {

std::vector<std::string> case_ordering_violations(const ReputationProfile& profile) {
  std::vector<std::string> out;
  for (const auto& e : profile.entries()) {
    const auto& r = e.reputation;
    if (!(r.worst <= r.average && r.average <= r.best)) out.push_back(e.name);
  }
  return out;
}

}  // namespace ennms
