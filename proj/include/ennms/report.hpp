#pragma once

#include <string>

#include <json.hpp>

#include "ennms/scenario.hpp"
#include "ennms/sensitivity.hpp"
#include "ennms/value_model.hpp"

namespace ennms {

using Json = nlohmann::ordered_json;

/// {"cents": 2753200, "display": "$27,532.00"}
Json money_json(Money m);

/// Value tables in the Cost/savings | Energy | Reputation | V-function |
/// Utility | Probability layout, then the rolled-back tree.
std::string render_text(const Report& report, bool color = false);
Json to_json(const Report& report);

std::string render_catalog_text(const ReputationProfile& profile);
Json catalog_json(const ReputationProfile& profile);

std::string render_sweep_text(const SweepResult& result);
std::string render_sweep_csv(const SweepResult& result);
Json sweep_json(const SweepResult& result);

/// Fixed 8-decimal rendering used for u-values, "%.8f" unless |u| >= 1
/// where 7 decimals are shown (the usual table precision).
std::string format_utility(double u);

}  // namespace ennms
