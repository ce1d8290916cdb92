#include "ennms/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ennms {

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string general(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string money_or_dash(const std::optional<Money>& m) { return m ? m->display() : "-"; }

std::string_view kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::kTerminal: return "terminal";
    case NodeKind::kChance: return "chance";
    case NodeKind::kDecision: return "decision";
  }
  return "?";
}

void render_node(std::ostringstream& os, const NodeReport& n, int depth) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << n.label << " [" << kind_name(n.kind) << "]";
  if (depth > 0 && n.probability != 1.0) os << " p=" << general(n.probability);
  os << "  EU=" << format_utility(n.expected_utility.value()) << "  CE=" << n.ce.display();
  if (n.chosen) os << "  -> " << *n.chosen;
  os << "\n";
  for (const auto& c : n.children) render_node(os, c, depth + 1);
}

Json node_json(const NodeReport& n) {
  Json j;
  j["label"] = n.label;
  j["path"] = n.path;
  j["kind"] = std::string(kind_name(n.kind));
  j["probability"] = n.probability;
  j["expected_utility"] = n.expected_utility.value();
  j["ce"] = money_json(n.ce);
  if (n.chosen) j["chosen"] = *n.chosen;
  if (!n.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : n.children) kids.push_back(node_json(c));
    j["children"] = std::move(kids);
  }
  return j;
}

}  // namespace

std::string format_utility(double u) {
  if (u == 0.0) return "0";
  if (!std::isfinite(u)) return u < 0 ? "-inf" : "inf";
  return std::fabs(u) >= 1.0 ? fixed(u, 7) : fixed(u, 8);
}

Json money_json(Money m) {
  Json j;
  j["cents"] = m.cents();
  j["display"] = m.display();
  return j;
}

std::string render_text(const Report& r, bool color) {
  const std::string bold = color ? "\x1b[1m" : "";
  const std::string reset = color ? "\x1b[0m" : "";
  std::ostringstream os;
  os << bold << "Scenario " << r.scenario << reset << "  (" << r.risk << ")\n";
  if (r.inventory_energy_cost) os << "Inventory energy cost, per year: " << r.inventory_energy_cost->display() << "\n";

  for (const auto& o : r.options) {
    os << "\n" << bold << "Option " << o.name << reset;
    if (o.technology) {
      os << "  [" << *o.technology;
      if (o.time_scale_seconds) os << ", t=" << general(*o.time_scale_seconds, 6) << " s";
      os << "]";
    }
    os << "\n";
    os << pad("Cost / savings", 28) << pad("Energy", 16) << pad("Reputation", 18) << pad("V-function", 18)
       << pad("Utility", 14) << "Probability\n";
    if (o.energy_base) {
      os << pad("Energy used, per year", 28) << pad(o.energy_base->display(), 16) << pad("$0.00", 18)
         << pad("no EnNMS", 18) << pad("0", 14) << "1.0\n";
    }
    for (const auto& row : o.rows) {
      os << pad(row.label, 28) << pad(money_or_dash(row.energy), 16) << pad(money_or_dash(row.reputation), 18)
         << pad(row.value.display(), 18) << pad(format_utility(row.utility), 14) << general(row.probability)
         << "\n";
    }
    os << "e-value " << format_utility(o.expected_utility) << "   CE " << o.ce.display() << "   EV "
       << Money::round_dollars(o.expected_value_dollars).display() << "\n";
  }

  os << "\n" << bold << "Decision tree" << reset << "\n";
  render_node(os, r.rollback.root, 0);
  os << "\n" << bold << "Chosen: " << r.chosen << reset << "   CE " << r.ce.display() << "\n";
  if (r.breakeven) {
    os << "Breakeven black-swan probability for " << r.breakeven->option << ": p* = "
       << general(r.breakeven->probability) << " (closed form " << general(r.breakeven->closed_form) << ")\n";
  }
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

Json to_json(const Report& r) {
  Json j;
  j["scenario"] = r.scenario;
  j["risk"] = r.risk;
  j["inventory_energy_cost"] = r.inventory_energy_cost ? money_json(*r.inventory_energy_cost) : Json(nullptr);
  Json options = Json::array();
  for (const auto& o : r.options) {
    Json oj;
    oj["name"] = o.name;
    oj["technology"] = o.technology ? Json(*o.technology) : Json(nullptr);
    oj["time_scale_seconds"] = o.time_scale_seconds ? Json(*o.time_scale_seconds) : Json(nullptr);
    oj["energy_base"] = o.energy_base ? money_json(*o.energy_base) : Json(nullptr);
    Json rows = Json::array();
    for (const auto& row : o.rows) {
      Json rj;
      rj["label"] = row.label;
      rj["energy"] = row.energy ? money_json(*row.energy) : Json(nullptr);
      rj["reputation"] = row.reputation ? money_json(*row.reputation) : Json(nullptr);
      rj["value"] = money_json(row.value);
      rj["utility"] = row.utility;
      rj["probability"] = row.probability;
      rows.push_back(std::move(rj));
    }
    oj["rows"] = std::move(rows);
    oj["expected_utility"] = o.expected_utility;
    oj["ce"] = money_json(o.ce);
    oj["expected_value"] = money_json(Money::round_dollars(o.expected_value_dollars));
    options.push_back(std::move(oj));
  }
  j["options"] = std::move(options);
  j["chosen"] = r.chosen;
  j["ce"] = money_json(r.ce);
  j["tree"] = node_json(r.rollback.root);
  if (r.breakeven) {
    Json b;
    b["option"] = r.breakeven->option;
    b["probability"] = r.breakeven->probability;
    b["closed_form"] = r.breakeven->closed_form;
    j["breakeven"] = std::move(b);
  }
  j["warnings"] = r.warnings;
  return j;
}

std::string render_catalog_text(const ReputationProfile& profile) {
  std::ostringstream os;
  os << pad("technology", 14) << pad("t (seconds)", 14) << pad("best", 16) << pad("average", 16) << "worst\n";
  for (const auto& e : profile.entries()) {
    char t[32];
    std::snprintf(t, sizeof t, "%.2E", e.time_scale.seconds());
    os << pad(e.name, 14) << pad(t, 14) << pad(e.reputation.best.display(), 16)
       << pad(e.reputation.average.display(), 16) << e.reputation.worst.display() << "\n";
  }
  for (const auto& w : validate_reputation_profile(profile)) os << "warning: " << w.message() << "\n";
  for (const auto& name : case_ordering_violations(profile)) {
    os << "note: " << name << " is not ordered worst <= average <= best\n";
  }
  return os.str();
}

Json catalog_json(const ReputationProfile& profile) {
  Json j;
  Json rows = Json::array();
  for (const auto& e : profile.entries()) {
    Json r;
    r["technology"] = e.name;
    r["seconds"] = e.time_scale.seconds();
    r["best"] = money_json(e.reputation.best);
    r["average"] = money_json(e.reputation.average);
    r["worst"] = money_json(e.reputation.worst);
    rows.push_back(std::move(r));
  }
  j["entries"] = std::move(rows);
  Json warnings = Json::array();
  for (const auto& w : validate_reputation_profile(profile)) warnings.push_back(w.message());
  j["warnings"] = std::move(warnings);
  j["case_ordering_violations"] = case_ordering_violations(profile);
  return j;
}

std::string render_sweep_text(const SweepResult& r) {
  std::ostringstream os;
  os << pad(r.parameter, 24) << pad("CE", 20) << "chosen\n";
  for (const auto& s : r.samples) os << pad(general(s.parameter), 24) << pad(s.ce.display(), 20) << s.chosen << "\n";
  return os.str();
}

std::string render_sweep_csv(const SweepResult& r) {
  std::ostringstream os;
  os << "parameter,value,ce_cents,ce,chosen\n";
  for (const auto& s : r.samples) {
    os << csv_field(r.parameter) << "," << general(s.parameter, 17) << "," << s.ce.cents() << ","
       << s.ce.decimal() << "," << csv_field(s.chosen) << "\n";
  }
  return os.str();
}

Json sweep_json(const SweepResult& r) {
  Json j;
  j["parameter"] = r.parameter;
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json x;
    x["value"] = s.parameter;
    x["ce"] = money_json(s.ce);
    x["chosen"] = s.chosen;
    samples.push_back(std::move(x));
  }
  j["samples"] = std::move(samples);
  return j;
}

}  // namespace ennms
