#include "ennms/utility.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ennms/error.hpp"

namespace ennms {

RiskPreference RiskPreference::tolerance(Money rho) {
  if (rho <= Money{}) throw ValidationError("risk tolerance must be > 0", "risk.rho");
  return RiskPreference(rho);
}

std::string RiskPreference::to_string() const {
  return is_neutral() ? std::string("risk-neutral") : "rho=" + rho_->display();
}

Utility Utility::exponential(double u) {
  if (!(u < 1.0)) throw DomainError("utility " + std::to_string(u) + " is unreachable (u must be < 1)");
  return Utility(Kind::kExponential, std::log1p(-u));
}

double Utility::value() const {
  return kind_ == Kind::kLinear ? repr_ : -std::expm1(repr_);
}

Utility expectation(std::span<const WeightedUtility> terms) {
  if (terms.empty()) throw ValidationError("expectation over no outcomes");
  const Utility::Kind kind = terms.front().utility.kind();
  for (const auto& t : terms) {
    if (t.utility.kind() != kind) throw ValidationError("mixed utility kinds in one expectation");
  }
  // Probabilities are normalised so a sum that is 1 only to within rounding
  // does not leak into the result (it would scale with rho).
  double mass = 0.0;
  for (const auto& t : terms) mass += t.probability;
  if (kind == Utility::Kind::kLinear) {
    double sum = 0.0;
    for (const auto& t : terms) sum += t.probability * t.utility.value();
    return Utility::linear(sum / mass);
  }
  // 1 - E[u] = sum p_i * exp(z_i). Factor out the largest z and use
  // log1p/expm1, which stay exact to rounding when every z_i is tiny.
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) {
    if (t.probability > 0.0) peak = std::max(peak, t.utility.log_complement());
  }
  if (!std::isfinite(peak)) {
    // All weight on zero-probability branches; degenerate but well defined.
    return Utility::from_log_complement(peak);
  }
  double acc = 0.0;
  for (const auto& t : terms) {
    if (t.probability > 0.0) acc += t.probability * std::expm1(t.utility.log_complement() - peak);
  }
  return Utility::from_log_complement(peak + std::log1p(acc / mass));
}

Utility u_transform_dollars(double v, const RiskPreference& pref) {
  if (pref.is_neutral()) return Utility::linear(v / kRiskNeutralScale);
  return Utility::from_log_complement(-v / pref.rho_dollars());
}

Utility u_transform(Money v, const RiskPreference& pref) { return u_transform_dollars(v.dollars(), pref); }

double certain_equivalent_dollars(const Utility& u, const RiskPreference& pref) {
  if (pref.is_neutral()) {
    if (u.kind() != Utility::Kind::kLinear) throw ValidationError("exponential utility under risk-neutral preference");
    return u.value() * kRiskNeutralScale;
  }
  if (u.kind() != Utility::Kind::kExponential) throw ValidationError("linear utility under exponential preference");
  if (std::isinf(u.log_complement()) && u.log_complement() < 0) {
    throw DomainError("utility 1 is unreachable (certain equivalent is infinite)");
  }
  return -pref.rho_dollars() * u.log_complement();
}

Money certain_equivalent(const Utility& u, const RiskPreference& pref) {
  return Money::round_dollars(certain_equivalent_dollars(u, pref));
}

Money certain_equivalent(double u, const RiskPreference& pref) {
  if (pref.is_neutral()) return certain_equivalent(Utility::linear(u), pref);
  return certain_equivalent(Utility::exponential(u), pref);
}

Money stake_to_rho(Money stake) {
  if (stake <= Money{}) throw ValidationError("stake must be > 0");
  return Money::round_dollars(stake.dollars() / std::log(3.0));
}

}  // namespace ennms
