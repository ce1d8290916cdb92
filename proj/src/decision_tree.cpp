#include "ennms/decision_tree.hpp"

#include <cmath>
#include <sstream>

#include "ennms/error.hpp"

namespace ennms {

namespace {

std::string residual_text(double sum) {
  std::ostringstream os;
  os.precision(6);
  os << "probabilities sum to " << sum << " (residual " << (1.0 - sum) << ")";
  return os.str();
}

void validate_into(const Node& node, const std::string& path, std::vector<TreeError>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Terminal>) {
          // Money is integral; nothing can be non-finite here.
        } else if constexpr (std::is_same_v<T, Chance>) {
          if (n.branches.empty()) {
            out.push_back({path, "chance node has no branches"});
            return;
          }
          double sum = 0.0;
          for (const auto& b : n.branches) {
            const std::string child = path + "/" + b.label;
            if (!std::isfinite(b.probability)) {
              out.push_back({child, "probability is not finite"});
            } else if (b.probability < 0.0 || b.probability > 1.0) {
              out.push_back({child, "probability outside [0, 1]"});
            }
            sum += b.probability;
            validate_into(b.node, child, out);
          }
          if (std::isfinite(sum) && std::abs(sum - 1.0) > kProbabilityTolerance) {
            out.push_back({path, residual_text(sum)});
          }
        } else {
          if (n.options.empty()) {
            out.push_back({path, "decision node has no options"});
            return;
          }
          for (const auto& o : n.options) validate_into(o.node, path + "/" + o.name, out);
        }
      },
      node.content);
}

NodeReport roll(const Node& node, std::string label, std::string path, const RiskPreference& pref) {
  NodeReport r;
  r.label = std::move(label);
  r.path = std::move(path);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Terminal>) {
          r.kind = NodeKind::kTerminal;
          r.expected_utility = u_transform(n.value, pref);
        } else if constexpr (std::is_same_v<T, Chance>) {
          r.kind = NodeKind::kChance;
          std::vector<WeightedUtility> terms;
          terms.reserve(n.branches.size());
          for (const auto& b : n.branches) {
            auto child = roll(b.node, b.label, r.path + "/" + b.label, pref);
            child.probability = b.probability;
            terms.push_back({b.probability, child.expected_utility});
            r.children.push_back(std::move(child));
          }
          r.expected_utility = expectation(terms);
        } else {
          r.kind = NodeKind::kDecision;
          std::size_t best = 0;
          for (const auto& o : n.options) {
            r.children.push_back(roll(o.node, o.name, r.path + "/" + o.name, pref));
            const auto& cur = r.children.back();
            if (cur.ce_dollars > r.children[best].ce_dollars + kTieWindowDollars) {
              best = r.children.size() - 1;
            }
          }
          r.chosen = r.children[best].label;
          r.expected_utility = r.children[best].expected_utility;
        }
      },
      node.content);
  r.ce_dollars = certain_equivalent_dollars(r.expected_utility, pref);
  r.ce = Money::round_dollars(r.ce_dollars);
  return r;
}

}  // namespace

OutcomeLottery::OutcomeLottery(std::vector<LotteryBranch> branches) : branches_(std::move(branches)) {
  if (branches_.empty()) throw ValidationError("lottery has no branches");
  double sum = 0.0;
  for (const auto& b : branches_) {
    if (!std::isfinite(b.probability) || b.probability < 0.0 || b.probability > 1.0) {
      throw ValidationError("probability outside [0, 1]", "lottery." + b.label);
    }
    sum += b.probability;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance) throw ValidationError("lottery " + residual_text(sum));
}

double OutcomeLottery::expected_value_dollars() const {
  double ev = 0.0;
  for (const auto& b : branches_) ev += b.probability * b.value.dollars();
  return ev;
}

OutcomeLottery OutcomeLottery::shifted(Money delta) const {
  auto out = branches_;
  for (auto& b : out) b.value += delta;
  return OutcomeLottery(std::move(out));
}

Utility e_value(const OutcomeLottery& lottery, const RiskPreference& pref) {
  std::vector<WeightedUtility> terms;
  terms.reserve(lottery.branches().size());
  for (const auto& b : lottery.branches()) terms.push_back({b.probability, u_transform(b.value, pref)});
  return expectation(terms);
}

Node terminal(Money value) { return Node{Terminal{value}}; }
Node chance(std::vector<ChanceBranch> branches) { return Node{Chance{std::move(branches)}}; }
Node decision(std::vector<DecisionOption> options) { return Node{Decision{std::move(options)}}; }

Node to_chance(const OutcomeLottery& lottery) {
  std::vector<ChanceBranch> branches;
  branches.reserve(lottery.branches().size());
  for (const auto& b : lottery.branches()) branches.push_back({b.label, b.probability, terminal(b.value)});
  return chance(std::move(branches));
}

std::vector<TreeError> validate(const Node& tree) {
  std::vector<TreeError> out;
  validate_into(tree, "root", out);
  return out;
}

RollbackReport rollback(const Node& tree, const RiskPreference& pref) {
  if (auto errors = validate(tree); !errors.empty()) {
    throw ValidationError(errors.front().message, errors.front().path);
  }
  return RollbackReport{roll(tree, "root", "root", pref)};
}

}  // namespace ennms
