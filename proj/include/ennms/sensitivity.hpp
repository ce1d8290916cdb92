#pragma once

#include <string>
#include <vector>

#include "ennms/decision_tree.hpp"
#include "ennms/money.hpp"
#include "ennms/scenario.hpp"
#include "ennms/utility.hpp"

namespace ennms {

/// Absolute width at which the probability bisection stops.
inline constexpr double kBisectionTolerance = 1e-15;

/// With probability p the catastrophe happens; otherwise the base lottery
/// plays out with its probabilities scaled by (1 - p).
struct BlackSwanSpec {
  OutcomeLottery base_lottery;
  Money catastrophe_value;

  OutcomeLottery composed(double p) const;
};

/// Largest p at which the composed lottery's CE is still >= 0, by bisection
/// on the composed e-value. Throws NoSolutionError (naming the side the CE
/// stays on) if there is no sign change on [0, 1].
double breakeven_probability(const BlackSwanSpec& spec, const RiskPreference& pref);
/// EU0 / (EU0 - U_cat).
double breakeven_closed_form(const BlackSwanSpec& spec, const RiskPreference& pref);

/// p at which the composed lottery's e-value falls to `rival`. Throws
/// NoSolutionError if rival is outside [U_cat, EU0].
double crossover_probability(const BlackSwanSpec& spec, const Utility& rival, const RiskPreference& pref);
/// (EU0 - EU_rival) / (EU0 - U_cat).
double crossover_closed_form(const BlackSwanSpec& spec, const Utility& rival, const RiskPreference& pref);

/// Black-swan spec for a scenario option, catastrophe from the scenario's
/// [blackswan] section unless given.
BlackSwanSpec black_swan_for(const Scenario& scenario, const std::string& option,
                             std::optional<Money> catastrophe = std::nullopt);

enum class SweepKind { kRho, kRate, kReputation, kProbability };

/// rho | rate_per_kwh | reputation(NAME,CASE) | probability(blackswan)
struct SweepParameter {
  SweepKind kind;
  std::string target;  ///< option or technology name (reputation)
  Case which = Case::kBest;

  static SweepParameter parse(const std::string& text);
  std::string to_string() const;
};

struct SweepSample {
  double parameter;
  double ce_dollars;
  Money ce;
  std::string chosen;
};

struct SweepResult {
  std::string parameter;
  std::vector<SweepSample> samples;
};

enum class Spacing { kLinear, kLog };
enum class Execution { kSerial, kParallel };

/// Scenario with one parameter replaced. Throws LookupError if the
/// parameter path does not exist in the scenario.
Scenario with_parameter(const Scenario& scenario, const SweepParameter& param, double value);

/// Evaluates the scenario at `steps` evenly spaced parameter values in
/// [lo, hi]. Throws RangeError on steps < 2, lo >= hi, or values outside the
/// parameter's domain.
SweepResult sweep(const Scenario& scenario, const SweepParameter& param, double lo, double hi, int steps,
                  Spacing spacing = Spacing::kLinear, Execution exec = Execution::kParallel);

}  // namespace ennms
