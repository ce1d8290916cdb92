#include <cmath>

#include "ennms/error.hpp"
#include "ennms/scenario.hpp"
#include "ennms/sensitivity.hpp"

namespace ennms {

namespace {

Money energy_base_of(const Scenario& s, const OptionSpec& opt) {
  if (opt.energy_base) return *opt.energy_base;
  if (!s.tariff || s.inventory.groups().empty()) {
    throw ValidationError("no energy_base and no inventory/tariff to derive it", "option." + opt.name + ".energy_base");
  }
  return annual_energy_cost(s.inventory, *s.tariff);
}

bool uses_base(const OptionSpec& opt) {
  for (const auto& c : opt.cases) {
    if (c.savings) return true;
  }
  return false;
}

/// Rows including the black-swan overlay when it targets this option.
std::vector<OutcomeRow> effective_rows(const Scenario& s, const OptionSpec& opt) {
  auto rows = option_rows(s, opt);
  if (!s.black_swan || s.black_swan->option != opt.name) return rows;
  const double p = s.black_swan->probability;
  for (auto& r : rows) r.probability *= (1.0 - p);
  const Money cat = s.black_swan->catastrophe;
  rows.push_back({"black-swan", Money{}, cat, cat, u_transform(cat, s.risk).value(), p});
  return rows;
}

OutcomeLottery lottery_of(const std::vector<OutcomeRow>& rows) {
  std::vector<LotteryBranch> branches;
  branches.reserve(rows.size());
  for (const auto& r : rows) branches.push_back({r.label, r.probability, r.value});
  return OutcomeLottery(std::move(branches));
}

}  // namespace

std::vector<OutcomeRow> option_rows(const Scenario& s, const OptionSpec& opt) {
  const auto& catalog = sample_reputation_catalog();
  const std::optional<Money> base = uses_base(opt) ? std::optional<Money>(energy_base_of(s, opt)) : std::nullopt;
  std::vector<OutcomeRow> rows;
  rows.reserve(opt.cases.size());
  for (const auto& c : opt.cases) {
    OutcomeRow row{c.label, {}, {}, {}, 0.0, c.probability};
    if (c.value) {
      row.value = *c.value - opt.extra_cost;
    } else {
      Money energy;
      if (c.savings) {
        energy = c.savings->of(*base);
      } else if (c.savings_watts) {
        energy = savings_to_annual_money(*c.savings_watts, *s.tariff);
      }
      const Money reputation = c.reputation ? *c.reputation
                                            : reputation_value(catalog, *opt.technology, parse_case(c.label));
      row.energy = energy;
      row.reputation = reputation;
      row.value = total_value(energy, reputation, opt.extra_cost).total;
    }
    row.utility = u_transform(row.value, s.risk).value();
    rows.push_back(std::move(row));
  }
  return rows;
}

OutcomeLottery option_lottery(const Scenario& s, const OptionSpec& opt) { return lottery_of(option_rows(s, opt)); }

Node build_tree(const Scenario& s) {
  std::vector<DecisionOption> options;
  if (s.include_baseline) options.push_back({std::string(kBaselineOptionName), terminal(Money{})});
  for (const auto& opt : s.options) options.push_back({opt.name, to_chance(lottery_of(effective_rows(s, opt)))});
  return decision(std::move(options));
}

Report evaluate(const Scenario& s) {
  validate_scenario(s);
  Report report;
  report.scenario = s.name;
  report.risk = s.risk.to_string();
  std::optional<Money> inventory_cost;
  if (s.tariff && !s.inventory.groups().empty()) inventory_cost = annual_energy_cost(s.inventory, *s.tariff);
  report.inventory_energy_cost = inventory_cost;

  const auto& catalog = sample_reputation_catalog();
  const auto disordered = case_ordering_violations(catalog);
  for (const auto& opt : s.options) {
    OptionReport o;
    o.name = opt.name;
    o.technology = opt.technology;
    if (opt.technology) o.time_scale_seconds = catalog.find(*opt.technology).time_scale.seconds();
    if (uses_base(opt)) o.energy_base = energy_base_of(s, opt);
    o.rows = effective_rows(s, opt);
    const auto lottery = lottery_of(o.rows);
    const Utility eu = e_value(lottery, s.risk);
    o.expected_utility = eu.value();
    o.ce_dollars = certain_equivalent_dollars(eu, s.risk);
    o.ce = Money::round_dollars(o.ce_dollars);
    o.expected_value_dollars = lottery.expected_value_dollars();

    if (o.energy_base && inventory_cost && *o.energy_base != *inventory_cost) {
      report.warnings.push_back("option " + opt.name + ": energy_base " + o.energy_base->display() +
                                " differs from the inventory's annual cost " + inventory_cost->display());
    }
    if (opt.technology && std::find(disordered.begin(), disordered.end(), *opt.technology) != disordered.end()) {
      for (const auto& c : opt.cases) {
        if (!c.value && !c.reputation) {
          report.warnings.push_back("option " + opt.name + ": catalog row '" + *opt.technology +
                                    "' is not ordered worst <= average <= best");
          break;
        }
      }
    }
    report.options.push_back(std::move(o));
  }

  report.rollback = rollback(build_tree(s), s.risk);
  report.chosen = *report.rollback.root.chosen;
  report.ce = report.rollback.root.ce;
  if (report.chosen == kBaselineOptionName && report.ce == Money{}) {
    report.warnings.push_back("no option improves on the status quo; nothing to deploy");
  }

  if (s.black_swan && s.black_swan->solve) {
    const auto spec = black_swan_for(s, s.black_swan->option);
    try {
      report.breakeven = BreakevenSummary{s.black_swan->option, breakeven_probability(spec, s.risk),
                                          breakeven_closed_form(spec, s.risk)};
    } catch (const NoSolutionError& e) {
      report.warnings.push_back(std::string("blackswan: ") + e.what());
    }
  }
  return report;
}

}  // namespace ennms
