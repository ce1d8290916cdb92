#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ennms/decision_tree.hpp"
#include "ennms/energy_estimator.hpp"
#include "ennms/fraction.hpp"
#include "ennms/money.hpp"
#include "ennms/utility.hpp"
#include "ennms/value_model.hpp"

namespace ennms {

/// One outcome of a policy option. V is either given directly (`value`) or
/// built as energy savings + reputation - extra cost.
struct CaseSpec {
  std::string label;
  double probability = 0.0;
  std::optional<Fraction> savings;       ///< share of the option's energy base
  std::optional<double> savings_watts;   ///< alternative: saved watts, priced by the tariff
  std::optional<Money> reputation;       ///< overrides the catalog value for this case
  std::optional<Money> value;            ///< inline V

  friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

struct OptionSpec {
  std::string name;
  std::optional<std::string> technology;
  /// Addressable annual energy cost; defaults to the inventory's cost.
  std::optional<Money> energy_base;
  Money extra_cost;
  std::vector<CaseSpec> cases;

  friend bool operator==(const OptionSpec&, const OptionSpec&) = default;
};

struct BlackSwanSection {
  std::string option;
  Money catastrophe;
  double probability = 0.0;
  bool solve = false;

  friend bool operator==(const BlackSwanSection&, const BlackSwanSection&) = default;
};

struct Scenario {
  std::string name;
  DeviceInventory inventory;
  std::optional<Tariff> tariff;
  RiskPreference risk = RiskPreference::neutral();
  /// Adds a leading "no-ennms" option worth $0 (the status quo).
  bool include_baseline = true;
  std::vector<OptionSpec> options;
  std::optional<BlackSwanSection> black_swan;

  const OptionSpec& option(std::string_view name) const;
  OptionSpec& option(std::string_view name);

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline constexpr std::string_view kBaselineOptionName = "no-ennms";

/// Parses and fully validates a scenario document. Throws ParseError (with
/// line and column) on syntax problems and ValidationError / LookupError
/// (with field path) on semantic ones.
Scenario parse_scenario(std::string_view document);
/// Reads a file; throws Error if it cannot be opened.
Scenario load_scenario_file(const std::string& path);
/// Canonical text form; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& scenario);
/// Semantic checks shared by the parser and by programmatic construction.
void validate_scenario(const Scenario& scenario);

/// Built-in fixture text by name ("enterprise", "carrier"); empty if unknown.
std::string_view builtin_fixture(std::string_view name);
std::vector<std::string_view> builtin_fixture_names();

/// One row of an option's value table.
/// Energy and reputation are empty for inline-value cases.
struct OutcomeRow {
  std::string label;
  std::optional<Money> energy;
  std::optional<Money> reputation;
  Money value;
  double utility;
  double probability;
};

struct OptionReport {
  std::string name;
  std::optional<std::string> technology;
  std::optional<double> time_scale_seconds;
  std::optional<Money> energy_base;
  std::vector<OutcomeRow> rows;
  double expected_utility;
  double ce_dollars;
  Money ce;
  double expected_value_dollars;
};

struct BreakevenSummary {
  std::string option;
  double probability;     ///< bisection
  double closed_form;
};

struct Report {
  std::string scenario;
  std::string risk;
  std::optional<Money> inventory_energy_cost;
  std::vector<OptionReport> options;
  RollbackReport rollback;
  std::string chosen;
  Money ce;
  std::vector<std::string> warnings;
  std::optional<BreakevenSummary> breakeven;
};

/// Lottery of one option as parsed (no black-swan overlay).
OutcomeLottery option_lottery(const Scenario& scenario, const OptionSpec& option);
/// Same, with every OutcomeRow column.
std::vector<OutcomeRow> option_rows(const Scenario& scenario, const OptionSpec& option);
/// Decision tree: optional baseline terminal, then one chance node per option.
Node build_tree(const Scenario& scenario);

/// Full pipeline: lotteries, rollback, chosen option, warnings. Deterministic.
Report evaluate(const Scenario& scenario);

}  // namespace ennms
