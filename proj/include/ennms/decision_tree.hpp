#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ennms/money.hpp"
#include "ennms/utility.hpp"

namespace ennms {

inline constexpr double kProbabilityTolerance = 1e-9;
/// Decision-node options within this CE window of the leader count as tied;
/// the first-listed option wins a tie.
inline constexpr double kTieWindowDollars = 0.005;

struct LotteryBranch {
  std::string label;
  double probability;
  Money value;
  friend bool operator==(const LotteryBranch&, const LotteryBranch&) = default;
};

/// Discrete outcome distribution for one policy option.
class OutcomeLottery {
 public:
  /// Throws ValidationError if empty, a probability is outside [0, 1], or
  /// the probabilities do not sum to 1 within kProbabilityTolerance (the
  /// message reports the residual).
  explicit OutcomeLottery(std::vector<LotteryBranch> branches);

  const std::vector<LotteryBranch>& branches() const { return branches_; }
  /// Probability-weighted value, unrounded dollars.
  double expected_value_dollars() const;
  /// Every value shifted by delta.
  OutcomeLottery shifted(Money delta) const;

 private:
  std::vector<LotteryBranch> branches_;
};

/// Expected utility sum p_i * U(V_i).
Utility e_value(const OutcomeLottery& lottery, const RiskPreference& pref);

struct Node;

struct Terminal {
  Money value;
};
struct ChanceBranch;
struct Chance {
  std::vector<ChanceBranch> branches;
};
struct DecisionOption;
struct Decision {
  std::vector<DecisionOption> options;
};

struct Node {
  std::variant<Terminal, Chance, Decision> content;
};

struct ChanceBranch {
  std::string label;
  double probability;
  Node node;
};
struct DecisionOption {
  std::string name;
  Node node;
};

/// Decision-tree helpers.
Node terminal(Money value);
Node chance(std::vector<ChanceBranch> branches);
Node decision(std::vector<DecisionOption> options);
/// A Chance node whose branches are the lottery's terminals.
Node to_chance(const OutcomeLottery& lottery);

struct TreeError {
  std::string path;
  std::string message;
  std::string to_string() const { return path + ": " + message; }
};

/// Every structural problem in the tree, each with its node path (e.g.
/// "root/deploy/best"). Empty iff the tree is well formed.
std::vector<TreeError> validate(const Node& tree);

enum class NodeKind { kTerminal, kChance, kDecision };

struct NodeReport {
  std::string label;
  std::string path;
  NodeKind kind;
  /// Branch probability for Chance children, 1 otherwise.
  double probability = 1.0;
  Utility expected_utility = Utility::linear(0.0);
  double ce_dollars = 0.0;
  Money ce;
  /// Decision nodes only.
  std::optional<std::string> chosen;
  std::vector<NodeReport> children;
};

struct RollbackReport {
  NodeReport root;
  Money root_ce() const { return root.ce; }
};

/// Rolls the tree back: terminals map through U, chance nodes take the
/// e-value of their children, decision nodes pick the max-CE option.
/// Throws ValidationError (with node path) if validate() reports anything.
RollbackReport rollback(const Node& tree, const RiskPreference& pref);

}  // namespace ennms
