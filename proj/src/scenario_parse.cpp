#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ennms/error.hpp"
#include "ennms/scenario.hpp"

namespace ennms {

namespace {

constexpr std::string_view kAbsent = "-";

struct Cursor {
  std::size_t line;
  std::size_t column;  ///< 1-based column of the text's first character
};

/// A piece of the document with its position, for error reporting.
struct Token {
  std::string text;
  Cursor at;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, at.line, at.column); }
};

Token trimmed(std::string_view raw, Cursor at) {
  std::size_t b = 0;
  while (b < raw.size() && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
  std::size_t e = raw.size();
  while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
  return {std::string(raw.substr(b, e - b)), {at.line, at.column + b}};
}

std::vector<Token> split_list(const Token& value) {
  std::vector<Token> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= value.text.size(); ++i) {
    if (i == value.text.size() || value.text[i] == ',') {
      out.push_back(trimmed(std::string_view(value.text).substr(start, i - start),
                            {value.at.line, value.at.column + start}));
      if (out.back().text.empty()) out.back().fail("empty list item");
      start = i + 1;
    }
  }
  return out;
}

double parse_double(const Token& t) {
  double v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (!t.text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) t.fail("expected a number, got '" + t.text + "'");
  return v;
}

std::int64_t parse_count(const Token& t) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
    t.fail("expected an integer, got '" + t.text + "'");
  }
  return v;
}

Money parse_money(const Token& t) {
  try {
    return Money::parse(t.text);
  } catch (const Error& e) {
    t.fail(e.what());
  }
}

Fraction parse_fraction(const Token& t) {
  try {
    return Fraction::parse(t.text);
  } catch (const Error& e) {
    t.fail(e.what());
  }
}

bool parse_bool(const Token& t) {
  if (t.text == "true" || t.text == "yes" || t.text == "1") return true;
  if (t.text == "false" || t.text == "no" || t.text == "0") return false;
  t.fail("expected true or false, got '" + t.text + "'");
}

enum class Section { kTop, kInventory, kTariff, kRisk, kOption, kBlackSwan };

struct OptionDraft {
  OptionSpec spec;
  Cursor header;
  std::map<std::string, Token> lists;
};

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

void check_name(const Token& t, std::string_view what) {
  if (t.text.empty()) t.fail(std::string(what) + " must not be empty");
  if (t.text.find_first_of(",#[]") != std::string::npos) {
    t.fail(std::string(what) + " '" + t.text + "' must not contain , # [ or ]");
  }
}

void finish_option(OptionDraft& d) {
  auto& opt = d.spec;
  std::vector<Token> labels;
  if (auto it = d.lists.find("cases"); it != d.lists.end()) {
    labels = split_list(it->second);
  } else {
    for (auto name : {"best", "average", "worst"}) labels.push_back({name, d.header});
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    check_name(l, "case label");
    if (!seen.insert(l.text).second) l.fail("duplicate case '" + l.text + "'");
    opt.cases.push_back(CaseSpec{l.text, 0.0, {}, {}, {}, {}});
  }

  auto column = [&](const std::string& key, auto&& assign) {
    auto it = d.lists.find(key);
    if (it == d.lists.end()) return false;
    auto items = split_list(it->second);
    if (items.size() != opt.cases.size()) {
      it->second.fail("'" + key + "' has " + std::to_string(items.size()) + " entries for " +
                      std::to_string(opt.cases.size()) + " cases");
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].text != kAbsent) assign(opt.cases[i], items[i]);
    }
    return true;
  };

  if (!column("probability", [](CaseSpec& c, const Token& t) { c.probability = parse_double(t); })) {
    throw ParseError("option '" + opt.name + "' needs a probability list", d.header.line, d.header.column);
  }
  column("savings", [](CaseSpec& c, const Token& t) { c.savings = parse_fraction(t); });
  column("savings_watts", [](CaseSpec& c, const Token& t) { c.savings_watts = parse_double(t); });
  column("reputation", [](CaseSpec& c, const Token& t) { c.reputation = parse_money(t); });
  column("value", [](CaseSpec& c, const Token& t) { c.value = parse_money(t); });
}

}  // namespace

const OptionSpec& Scenario::option(std::string_view name) const {
  for (const auto& o : options) {
    if (o.name == name) return o;
  }
  throw LookupError("unknown option '" + std::string(name) + "'", std::string(name));
}

OptionSpec& Scenario::option(std::string_view name) {
  return const_cast<OptionSpec&>(std::as_const(*this).option(name));
}

void validate_scenario(const Scenario& s) {
  if (s.options.empty()) throw ValidationError("scenario needs at least one [option]", "options");
  const auto& catalog = sample_reputation_catalog();
  std::set<std::string> names;
  for (const auto& opt : s.options) {
    const std::string path = "option." + opt.name;
    if (opt.name == kBaselineOptionName) throw ValidationError("name is reserved for the status quo", path);
    if (!names.insert(opt.name).second) throw ValidationError("duplicate option name", path);
    if (opt.technology && !catalog.contains(*opt.technology)) {
      throw LookupError(path + ".technology: unknown technology '" + *opt.technology + "'", *opt.technology);
    }
    if (opt.cases.empty()) throw ValidationError("option has no cases", path + ".cases");
    bool needs_base = false;
    for (std::size_t i = 0; i < opt.cases.size(); ++i) {
      const auto& c = opt.cases[i];
      const std::string cpath = path + "." + c.label;
      if (!(c.probability >= 0.0 && c.probability <= 1.0)) {
        throw ValidationError("probability must be in [0, 1]", cpath + ".probability");
      }
      if (c.value) {
        if (c.savings || c.savings_watts || c.reputation) {
          throw ValidationError("an inline value excludes savings and reputation", cpath + ".value");
        }
        continue;
      }
      if (c.savings && c.savings_watts) throw ValidationError("give savings or savings_watts, not both", cpath);
      if (c.savings) {
        if (c.savings->numerator() > c.savings->denominator()) {
          throw ValidationError("savings fraction must be in [0, 1]", cpath + ".savings");
        }
        if (!opt.energy_base) needs_base = true;
      }
      if (c.savings_watts) {
        if (!(*c.savings_watts >= 0.0)) throw ValidationError("saved watts must be >= 0", cpath + ".savings_watts");
        if (!s.tariff) throw ValidationError("savings_watts needs a [tariff]", cpath + ".savings_watts");
      }
      if (!c.reputation) {
        if (!opt.technology) {
          throw ValidationError("no reputation value and no technology to look it up", cpath + ".reputation");
        }
        (void)parse_case(c.label);
      }
    }
    if (needs_base && (s.inventory.groups().empty() || !s.tariff)) {
      throw ValidationError("savings fractions need energy_base or an [inventory] with a [tariff]", path + ".energy_base");
    }
    double sum = 0.0;
    for (const auto& c : opt.cases) sum += c.probability;
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
      std::ostringstream os;
      os << "probabilities sum to " << sum << " (residual " << (1.0 - sum) << ")";
      throw ValidationError(os.str(), path + ".probability");
    }
  }
  if (s.black_swan) {
    if (!names.count(s.black_swan->option)) {
      throw LookupError("blackswan.option: unknown option '" + s.black_swan->option + "'", s.black_swan->option);
    }
    if (!(s.black_swan->probability >= 0.0 && s.black_swan->probability <= 1.0)) {
      throw ValidationError("probability must be in [0, 1]", "blackswan.probability");
    }
  }
}

Scenario parse_scenario(std::string_view document) {
  Scenario s;
  std::vector<DeviceGroup> groups;
  std::optional<double> rate;
  std::optional<double> hours;
  std::optional<RiskPreference> risk;
  std::vector<OptionDraft> drafts;
  std::optional<BlackSwanSection> swan;
  std::optional<Cursor> swan_header;
  bool saw_name = false;
  bool saw_content = false;
  Section section = Section::kTop;
  std::set<std::string> keys_in_section;
  std::set<std::string> sections_seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= document.size()) {
    const std::size_t eol = std::min(document.find('\n', pos), document.size());
    std::string_view line = document.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const Token stmt = trimmed(line, {line_no, 1});
    if (stmt.text.empty()) {
      if (eol == document.size()) break;
      continue;
    }
    saw_content = true;

    if (stmt.text.front() == '[') {
      if (stmt.text.back() != ']') stmt.fail("section header must end with ']'");
      const Token inner = trimmed(std::string_view(stmt.text).substr(1, stmt.text.size() - 2),
                                  {line_no, stmt.at.column + 1});
      const auto space = inner.text.find_first_of(" \t");
      const std::string head = inner.text.substr(0, space);
      keys_in_section.clear();
      if (head == "option") {
        if (space == std::string::npos) inner.fail("[option] needs a name, e.g. [option deploy]");
        Token name = trimmed(std::string_view(inner.text).substr(space), {line_no, inner.at.column + space});
        check_name(name, "option name");
        for (const auto& d : drafts) {
          if (d.spec.name == name.text) name.fail("duplicate option '" + name.text + "'");
        }
        drafts.push_back({OptionSpec{name.text, {}, {}, {}, {}}, stmt.at, {}});
        section = Section::kOption;
        continue;
      }
      if (space != std::string::npos) inner.fail("section [" + head + "] takes no argument");
      if (!sections_seen.insert(head).second) inner.fail("duplicate section [" + head + "]");
      if (head == "inventory") section = Section::kInventory;
      else if (head == "tariff") section = Section::kTariff;
      else if (head == "risk") section = Section::kRisk;
      else if (head == "blackswan") {
        section = Section::kBlackSwan;
        swan.emplace();
        swan_header = stmt.at;
      } else {
        inner.fail("unknown section [" + head + "]");
      }
      continue;
    }

    const auto eq = stmt.text.find('=');
    if (eq == std::string::npos) stmt.fail("expected 'key = value' or a [section] header");
    const Token key = trimmed(std::string_view(stmt.text).substr(0, eq), stmt.at);
    const Token value = trimmed(std::string_view(stmt.text).substr(eq + 1), {line_no, stmt.at.column + eq + 1});
    if (key.text.empty()) key.fail("missing key before '='");
    if (value.text.empty()) value.fail("missing value for '" + key.text + "'");
    if (key.text != "group" && !keys_in_section.insert(key.text).second) {
      key.fail("duplicate key '" + key.text + "'");
    }
    auto unknown = [&] { key.fail("unknown key '" + key.text + "' here"); };

    switch (section) {
      case Section::kTop:
        if (key.text == "name") {
          check_name(value, "scenario name");
          s.name = value.text;
          saw_name = true;
        } else if (key.text == "include_baseline") {
          s.include_baseline = parse_bool(value);
        } else {
          unknown();
        }
        break;
      case Section::kInventory: {
        if (key.text != "group") unknown();
        const auto comma1 = value.text.find(',');
        if (comma1 == std::string::npos) value.fail("group needs 'count, watts[, label]'");
        const auto comma2 = value.text.find(',', comma1 + 1);
        const Token count = trimmed(std::string_view(value.text).substr(0, comma1), value.at);
        const std::size_t watts_end = comma2 == std::string::npos ? value.text.size() : comma2;
        const Token watts = trimmed(std::string_view(value.text).substr(comma1 + 1, watts_end - comma1 - 1),
                                    {line_no, value.at.column + comma1 + 1});
        std::string label;
        if (comma2 != std::string::npos) {
          label = trimmed(std::string_view(value.text).substr(comma2 + 1), value.at).text;
        }
        DeviceGroup g{parse_count(count), parse_double(watts), label};
        if (g.count < 1) count.fail("device count must be >= 1");
        if (!(g.draw_watts > 0.0)) watts.fail("device draw must be > 0 watts");
        groups.push_back(std::move(g));
        break;
      }
      case Section::kTariff:
        if (key.text == "rate_per_kwh") rate = parse_double(value);
        else if (key.text == "hours_per_year") hours = parse_double(value);
        else unknown();
        break;
      case Section::kRisk:
        if (key.text == "rho") {
          if (value.text == "neutral") {
            risk = RiskPreference::neutral();
          } else {
            const Money rho = parse_money(value);
            if (rho <= Money{}) value.fail("rho must be > 0 (or 'neutral')");
            risk = RiskPreference::tolerance(rho);
          }
        } else if (key.text == "stake") {
          const Money stake = parse_money(value);
          if (stake <= Money{}) value.fail("stake must be > 0");
          risk = RiskPreference::tolerance(stake_to_rho(stake));
        } else {
          unknown();
        }
        if (keys_in_section.count("rho") && keys_in_section.count("stake")) key.fail("give rho or stake, not both");
        break;
      case Section::kOption: {
        auto& d = drafts.back();
        if (key.text == "technology") {
          d.spec.technology = value.text;
        } else if (key.text == "energy_base") {
          d.spec.energy_base = parse_money(value);
        } else if (key.text == "extra_cost") {
          d.spec.extra_cost = parse_money(value);
        } else if (key.text == "cases" || key.text == "probability" || key.text == "savings" ||
                   key.text == "savings_watts" || key.text == "reputation" || key.text == "value") {
          d.lists.emplace(key.text, value);
        } else {
          unknown();
        }
        break;
      }
      case Section::kBlackSwan:
        if (key.text == "option") swan->option = value.text;
        else if (key.text == "catastrophe") swan->catastrophe = parse_money(value);
        else if (key.text == "probability") swan->probability = parse_double(value);
        else if (key.text == "solve") swan->solve = parse_bool(value);
        else unknown();
        break;
    }
    if (eol == document.size()) break;
  }

  if (!saw_content) throw ParseError("empty scenario document", 1, 1);
  if (!saw_name) throw ParseError("missing top-level 'name = ...'", 1, 1);
  if (swan && swan->option.empty()) {
    throw ParseError("[blackswan] needs 'option = NAME'", swan_header->line, swan_header->column);
  }

  s.inventory = DeviceInventory(std::move(groups));
  if (rate || hours) {
    if (!rate) throw ValidationError("missing rate_per_kwh", "tariff.rate_per_kwh");
    s.tariff = Tariff(*rate, hours.value_or(kHoursPerYear));
  }
  if (!risk) throw ParseError("missing [risk] section with 'rho = ...'", line_no, 1);
  s.risk = *risk;
  for (auto& d : drafts) {
    finish_option(d);
    s.options.push_back(std::move(d.spec));
  }
  s.black_swan = swan;
  validate_scenario(s);
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open scenario file '" + path + "': file not found or unreadable");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  os << "name = " << s.name << "\n";
  os << "include_baseline = " << (s.include_baseline ? "true" : "false") << "\n";
  if (!s.inventory.groups().empty()) {
    os << "\n[inventory]\n";
    for (const auto& g : s.inventory.groups()) {
      os << "group = " << g.count << ", " << format_double(g.draw_watts);
      if (!g.label.empty()) os << ", " << g.label;
      os << "\n";
    }
  }
  if (s.tariff) {
    os << "\n[tariff]\n";
    os << "rate_per_kwh = " << format_double(s.tariff->rate_per_kwh()) << "\n";
    os << "hours_per_year = " << format_double(s.tariff->hours_per_year()) << "\n";
  }
  os << "\n[risk]\n";
  os << "rho = " << (s.risk.is_neutral() ? std::string("neutral") : s.risk.rho().decimal()) << "\n";
  for (const auto& opt : s.options) {
    os << "\n[option " << opt.name << "]\n";
    if (opt.technology) os << "technology = " << *opt.technology << "\n";
    if (opt.energy_base) os << "energy_base = " << opt.energy_base->decimal() << "\n";
    if (opt.extra_cost != Money{}) os << "extra_cost = " << opt.extra_cost.decimal() << "\n";
    auto list = [&](const char* key, auto&& field) {
      bool any = false;
      for (const auto& c : opt.cases) any = any || field(c).has_value();
      if (!any) return;
      os << key << " =";
      for (std::size_t i = 0; i < opt.cases.size(); ++i) {
        auto v = field(opt.cases[i]);
        os << (i ? ", " : " ") << (v ? *v : std::string(kAbsent));
      }
      os << "\n";
    };
    os << "cases =";
    for (std::size_t i = 0; i < opt.cases.size(); ++i) os << (i ? ", " : " ") << opt.cases[i].label;
    os << "\n";
    list("probability", [](const CaseSpec& c) { return std::optional<std::string>(format_double(c.probability)); });
    list("savings", [](const CaseSpec& c) {
      return c.savings ? std::optional<std::string>(c.savings->to_string()) : std::nullopt;
    });
    list("savings_watts", [](const CaseSpec& c) {
      return c.savings_watts ? std::optional<std::string>(format_double(*c.savings_watts)) : std::nullopt;
    });
    list("reputation", [](const CaseSpec& c) {
      return c.reputation ? std::optional<std::string>(c.reputation->decimal()) : std::nullopt;
    });
    list("value", [](const CaseSpec& c) {
      return c.value ? std::optional<std::string>(c.value->decimal()) : std::nullopt;
    });
  }
  if (s.black_swan) {
    os << "\n[blackswan]\n";
    os << "option = " << s.black_swan->option << "\n";
    os << "catastrophe = " << s.black_swan->catastrophe.decimal() << "\n";
    os << "probability = " << format_double(s.black_swan->probability) << "\n";
    os << "solve = " << (s.black_swan->solve ? "true" : "false") << "\n";
  }
  return os.str();
}

}  // namespace ennms
