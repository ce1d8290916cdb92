#include "ennms/sensitivity.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "ennms/error.hpp"
#include "ennms/kernels.hpp"

namespace ennms {

namespace {

/// Root of a function that is non-increasing on [0, 1], given f(0) >= 0 >= f(1).
double bisect_decreasing(const std::function<double(double)>& f) {
  double lo = 0.0;
  double hi = 1.0;
  if (f(lo) == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double composed_utility(const BlackSwanSpec& spec, double p, const RiskPreference& pref) {
  return e_value(spec.composed(p), pref).value();
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

OutcomeLottery BlackSwanSpec::composed(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw RangeError("black-swan probability must be in [0, 1]");
  std::vector<LotteryBranch> branches;
  branches.reserve(base_lottery.branches().size() + 1);
  for (const auto& b : base_lottery.branches()) branches.push_back({b.label, (1.0 - p) * b.probability, b.value});
  branches.push_back({"black-swan", p, catastrophe_value});
  return OutcomeLottery(std::move(branches));
}

double breakeven_closed_form(const BlackSwanSpec& spec, const RiskPreference& pref) {
  const double eu0 = e_value(spec.base_lottery, pref).value();
  const double ucat = u_transform(spec.catastrophe_value, pref).value();
  return eu0 / (eu0 - ucat);
}

double breakeven_probability(const BlackSwanSpec& spec, const RiskPreference& pref) {
  const double eu0 = e_value(spec.base_lottery, pref).value();
  const double ucat = u_transform(spec.catastrophe_value, pref).value();
  if (eu0 < 0.0) {
    throw NoSolutionError("no breakeven: CE is negative already at p = 0 (base e-value " + format_value(eu0) + ")");
  }
  if (eu0 == 0.0) return 0.0;
  if (ucat >= 0.0) {
    throw NoSolutionError("no breakeven: CE stays positive for every p in [0, 1] (catastrophe " +
                          spec.catastrophe_value.display() + " is not a loss)");
  }
  return bisect_decreasing([&](double p) { return composed_utility(spec, p, pref); });
}

double crossover_closed_form(const BlackSwanSpec& spec, const Utility& rival, const RiskPreference& pref) {
  const double eu0 = e_value(spec.base_lottery, pref).value();
  const double ucat = u_transform(spec.catastrophe_value, pref).value();
  return (eu0 - rival.value()) / (eu0 - ucat);
}

double crossover_probability(const BlackSwanSpec& spec, const Utility& rival, const RiskPreference& pref) {
  const double eu0 = e_value(spec.base_lottery, pref).value();
  const double ucat = u_transform(spec.catastrophe_value, pref).value();
  const double target = rival.value();
  const double lo = std::min(eu0, ucat);
  const double hi = std::max(eu0, ucat);
  if (!(target >= lo && target <= hi)) {
    throw NoSolutionError("no crossover: rival e-value " + format_value(target) + " is outside [" +
                          format_value(lo) + ", " + format_value(hi) + "] reachable by the option");
  }
  if (target == eu0) return 0.0;
  if (target == ucat) return 1.0;
  if (ucat > eu0) {
    // Catastrophe is better than the base lottery; the curve increases.
    return bisect_decreasing([&](double p) { return target - composed_utility(spec, p, pref); });
  }
  return bisect_decreasing([&](double p) { return composed_utility(spec, p, pref) - target; });
}

BlackSwanSpec black_swan_for(const Scenario& scenario, const std::string& option, std::optional<Money> catastrophe) {
  const auto& spec = scenario.option(option);
  if (!catastrophe) {
    if (!scenario.black_swan) {
      throw ValidationError("scenario has no [blackswan] section and no catastrophe value was given", "blackswan");
    }
    catastrophe = scenario.black_swan->catastrophe;
  }
  return BlackSwanSpec{option_lottery(scenario, spec), *catastrophe};
}

SweepParameter SweepParameter::parse(const std::string& text) {
  auto args_of = [&](const std::string& prefix) -> std::optional<std::string> {
    if (text.rfind(prefix + "(", 0) != 0 || text.back() != ')') return std::nullopt;
    return text.substr(prefix.size() + 1, text.size() - prefix.size() - 2);
  };
  if (text == "rho") return {SweepKind::kRho, {}, Case::kBest};
  if (text == "rate_per_kwh") return {SweepKind::kRate, {}, Case::kBest};
  if (auto args = args_of("reputation")) {
    const auto comma = args->rfind(',');
    if (comma == std::string::npos) {
      throw LookupError("reputation parameter needs (NAME,CASE): '" + text + "'", text);
    }
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    return {SweepKind::kReputation, trim(args->substr(0, comma)), parse_case(trim(args->substr(comma + 1)))};
  }
  if (auto args = args_of("probability")) {
    if (*args != "blackswan") {
      throw LookupError("only probability(blackswan) can be swept, got '" + text + "'", text);
    }
    return {SweepKind::kProbability, "blackswan", Case::kBest};
  }
  throw LookupError("unknown sweep parameter '" + text + "'", text);
}

std::string SweepParameter::to_string() const {
  switch (kind) {
    case SweepKind::kRho: return "rho";
    case SweepKind::kRate: return "rate_per_kwh";
    case SweepKind::kReputation: return "reputation(" + target + "," + std::string(ennms::to_string(which)) + ")";
    case SweepKind::kProbability: return "probability(blackswan)";
  }
  return "?";
}

Scenario with_parameter(const Scenario& scenario, const SweepParameter& param, double value) {
  Scenario out = scenario;
  switch (param.kind) {
    case SweepKind::kRho:
      out.risk = RiskPreference::tolerance(Money::round_dollars(value));
      break;
    case SweepKind::kRate:
      if (!out.tariff) throw LookupError("scenario has no [tariff] to sweep", "tariff.rate_per_kwh");
      out.tariff = Tariff(value, out.tariff->hours_per_year());
      break;
    case SweepKind::kProbability:
      if (!out.black_swan) throw LookupError("scenario has no [blackswan] section", "blackswan.probability");
      out.black_swan->probability = value;
      break;
    case SweepKind::kReputation: {
      const std::string label(to_string(param.which));
      bool matched = false;
      for (auto& opt : out.options) {
        if (opt.name != param.target && opt.technology != param.target) continue;
        for (auto& c : opt.cases) {
          if (c.label != label) continue;
          if (c.value) throw LookupError("option '" + opt.name + "' case '" + label + "' has an inline value", param.to_string());
          c.reputation = Money::round_dollars(value);
          matched = true;
        }
      }
      if (!matched) throw LookupError("no option case matches " + param.to_string(), param.to_string());
      break;
    }
  }
  return out;
}

SweepResult sweep(const Scenario& scenario, const SweepParameter& param, double lo, double hi, int steps,
                  Spacing spacing, Execution exec) {
  if (steps < 2) throw RangeError("sweep needs at least 2 steps");
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw RangeError("sweep range must satisfy from < to");
  }
  switch (param.kind) {
    case SweepKind::kRho:
    case SweepKind::kRate:
      if (lo <= 0.0) throw RangeError(param.to_string() + " must stay > 0");
      break;
    case SweepKind::kProbability:
      if (lo < 0.0 || hi > 1.0) throw RangeError("probability sweep must stay within [0, 1]");
      break;
    case SweepKind::kReputation:
      break;
  }
  if (spacing == Spacing::kLog && lo <= 0.0) throw RangeError("log spacing needs from > 0");

  // Surface path errors once, before fanning out.
  (void)with_parameter(scenario, param, lo);

  const auto n = static_cast<std::size_t>(steps);
  auto value_at = [&](std::size_t i) {
    if (i == 0) return lo;
    if (i + 1 == n) return hi;
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    if (spacing == Spacing::kLog) return lo * std::pow(hi / lo, t);
    return lo + t * (hi - lo);
  };
  const std::function<SweepSample(std::size_t)> point = [&](std::size_t i) {
    const double v = value_at(i);
    const Report r = evaluate(with_parameter(scenario, param, v));
    return SweepSample{v, r.rollback.root.ce_dollars, r.ce, r.chosen};
  };
  SweepResult result{param.to_string(), {}};
  result.samples = exec == Execution::kParallel ? kernels::parallel::map_indices(n, point)
                                                : kernels::serial::map_indices(n, point);
  return result;
}

}  // namespace ennms
