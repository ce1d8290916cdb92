// ennms-decide: decide whether, and at what time-domain depth, to deploy
// active energy control in a network, from a declarative scenario file.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ennms/error.hpp"
#include "ennms/report.hpp"
#include "ennms/scenario.hpp"
#include "ennms/sensitivity.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ennms::Scenario load(const std::string& path) {
  constexpr std::string_view kBuiltin = "builtin:";
  if (path.rfind(kBuiltin, 0) == 0) {
    const auto name = path.substr(kBuiltin.size());
    const auto text = ennms::builtin_fixture(name);
    if (text.empty()) throw ennms::LookupError("unknown built-in scenario '" + name + "'", name);
    return ennms::parse_scenario(text);
  }
  return ennms::load_scenario_file(path);
}

bool use_color() {
  const char* no_color = std::getenv("NO_COLOR");
  return (no_color == nullptr || *no_color == '\0') && isatty(STDOUT_FILENO);
}

std::string sci(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, v);
  return buf;
}

std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_json(const ennms::Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-control deployment decisions from scenario files"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::string file;
  auto* evaluate = app.add_subcommand("evaluate", "Roll back the scenario's decision tree");
  evaluate->add_option("file", file, "Scenario file (or builtin:NAME)")->required();

  auto* check = app.add_subcommand("check", "Parse and validate a scenario only");
  check->add_option("file", file, "Scenario file (or builtin:NAME)")->required();

  std::string option;
  std::string rival;
  std::optional<std::string> catastrophe_text;
  auto* breakeven = app.add_subcommand("breakeven", "Largest black-swan probability keeping CE >= 0");
  breakeven->add_option("file", file, "Scenario file (or builtin:NAME)")->required();
  breakeven->add_option("--option", option, "Option carrying the black-swan risk")->required();
  breakeven->add_option("--catastrophe", catastrophe_text, "Catastrophe value in dollars");

  auto* crossover = app.add_subcommand("crossover", "Black-swan probability where OPTION falls to RIVAL");
  crossover->add_option("file", file, "Scenario file (or builtin:NAME)")->required();
  crossover->add_option("--option", option, "Option carrying the black-swan risk")->required();
  crossover->add_option("--rival", rival, "Competing option (or no-ennms)")->required();
  crossover->add_option("--catastrophe", catastrophe_text, "Catastrophe value in dollars");

  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  bool log_spacing = false;
  bool serial = false;
  auto* sweep = app.add_subcommand("sweep", "One-parameter sensitivity sweep");
  sweep->add_option("file", file, "Scenario file (or builtin:NAME)")->required();
  sweep->add_option("--param", param, "rho | rate_per_kwh | reputation(NAME,CASE) | probability(blackswan)")
      ->required();
  sweep->add_option("--from", from, "First parameter value")->required();
  sweep->add_option("--to", to, "Last parameter value")->required();
  sweep->add_option("--steps", steps, "Number of samples (>= 2)")->required();
  sweep->add_flag("--log", log_spacing, "Geometric spacing");
  sweep->add_flag("--serial", serial, "Evaluate points on one thread");

  auto* catalog = app.add_subcommand("catalog", "Print the reputation catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const bool csv = format == "csv";
    if (csv && !sweep->parsed() && !catalog->parsed()) {
      throw UsageError("--format csv is only available for sweep and catalog");
    }

    if (catalog->parsed()) {
      const auto& profile = ennms::sample_reputation_catalog();
      if (format == "json") {
        print_json(ennms::catalog_json(profile));
      } else if (csv) {
        std::cout << "technology,seconds,best_cents,average_cents,worst_cents\n";
        for (const auto& e : profile.entries()) {
          std::cout << e.name << "," << full(e.time_scale.seconds()) << "," << e.reputation.best.cents() << ","
                    << e.reputation.average.cents() << "," << e.reputation.worst.cents() << "\n";
        }
      } else {
        std::cout << ennms::render_catalog_text(profile);
      }
      return kExitOk;
    }

    const ennms::Scenario scenario = load(file);

    if (check->parsed()) {
      const auto report = ennms::evaluate(scenario);
      if (format == "json") {
        ennms::Json j;
        j["scenario"] = scenario.name;
        j["valid"] = true;
        j["warnings"] = report.warnings;
        print_json(j);
      } else {
        std::cout << "ok: " << scenario.name << " (" << scenario.options.size() << " option(s))\n";
        for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
      }
      return kExitOk;
    }

    if (evaluate->parsed()) {
      const auto report = ennms::evaluate(scenario);
      if (format == "json") {
        print_json(ennms::to_json(report));
      } else {
        std::cout << ennms::render_text(report, use_color());
      }
      return kExitOk;
    }

    std::optional<ennms::Money> catastrophe;
    if (catastrophe_text) catastrophe = ennms::Money::parse(*catastrophe_text);

    if (breakeven->parsed()) {
      const auto spec = ennms::black_swan_for(scenario, option, catastrophe);
      const double p = ennms::breakeven_probability(spec, scenario.risk);
      const double closed = ennms::breakeven_closed_form(spec, scenario.risk);
      if (format == "json") {
        ennms::Json j;
        j["scenario"] = scenario.name;
        j["option"] = option;
        j["catastrophe"] = ennms::money_json(spec.catastrophe_value);
        j["probability"] = p;
        j["closed_form"] = closed;
        print_json(j);
      } else {
        std::cout << "option " << option << ", catastrophe " << spec.catastrophe_value.display() << ", "
                  << scenario.risk.to_string() << "\n";
        std::cout << "p* = " << sci(p, 4) << "   (bisection " << full(p) << ", closed form " << full(closed)
                  << ")\n";
      }
      return kExitOk;
    }

    if (crossover->parsed()) {
      const auto spec = ennms::black_swan_for(scenario, option, catastrophe);
      const ennms::Utility rival_eu =
          rival == ennms::kBaselineOptionName
              ? ennms::u_transform(ennms::Money{}, scenario.risk)
              : ennms::e_value(ennms::option_lottery(scenario, scenario.option(rival)), scenario.risk);
      const double p = ennms::crossover_probability(spec, rival_eu, scenario.risk);
      const double closed = ennms::crossover_closed_form(spec, rival_eu, scenario.risk);
      if (format == "json") {
        ennms::Json j;
        j["scenario"] = scenario.name;
        j["option"] = option;
        j["rival"] = rival;
        j["rival_expected_utility"] = rival_eu.value();
        j["probability"] = p;
        j["closed_form"] = closed;
        print_json(j);
      } else {
        std::cout << "option " << option << " vs " << rival << " (rival e-value "
                  << ennms::format_utility(rival_eu.value()) << ")\n";
        std::cout << "p_x = " << sci(p, 4) << "   (bisection " << full(p) << ", closed form " << full(closed)
                  << ")\n";
      }
      return kExitOk;
    }

    if (sweep->parsed()) {
      const auto parameter = ennms::SweepParameter::parse(param);
      const auto result = ennms::sweep(scenario, parameter, from, to, steps,
                                       log_spacing ? ennms::Spacing::kLog : ennms::Spacing::kLinear,
                                       serial ? ennms::Execution::kSerial : ennms::Execution::kParallel);
      if (format == "json") {
        print_json(ennms::sweep_json(result));
      } else if (csv) {
        std::cout << ennms::render_sweep_csv(result);
      } else {
        std::cout << ennms::render_sweep_text(result);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const ennms::RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
