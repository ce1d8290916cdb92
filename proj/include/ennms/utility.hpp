#pragma once

#include <optional>
#include <span>
#include <string>

#include "ennms/money.hpp"

namespace ennms {

/// Scale applied to dollars in risk-neutral mode: u = V / scale.
inline constexpr double kRiskNeutralScale = 1e6;

/// Exponential risk tolerance rho (> 0) or risk-neutral.
class RiskPreference {
 public:
  static RiskPreference neutral() { return RiskPreference(); }
  /// Throws ValidationError unless rho > 0.
  static RiskPreference tolerance(Money rho);

  bool is_neutral() const { return !rho_.has_value(); }
  /// Precondition: !is_neutral().
  Money rho() const { return *rho_; }
  double rho_dollars() const { return rho_->dollars(); }

  std::string to_string() const;

  friend bool operator==(const RiskPreference&, const RiskPreference&) = default;

 private:
  RiskPreference() = default;
  explicit RiskPreference(Money rho) : rho_(rho) {}
  std::optional<Money> rho_;
};

/// u-value under a RiskPreference.
///
/// Exponential utilities keep z = ln(1 - u) = -V/rho rather than u itself,
/// so certain equivalents stay exact when u is within an ulp of 1 or when
/// e^(-V/rho) overflows. Linear (risk-neutral) utilities keep u directly.
class Utility {
 public:
  enum class Kind { kExponential, kLinear };

  /// From a plain exponential u-value; throws DomainError if u >= 1.
  static Utility exponential(double u);
  static Utility from_log_complement(double z) { return Utility(Kind::kExponential, z); }
  static Utility linear(double u) { return Utility(Kind::kLinear, u); }

  Kind kind() const { return kind_; }
  /// The u-value. May be -inf for exponential utilities far below zero.
  double value() const;
  /// ln(1 - u); exponential kind only.
  double log_complement() const { return repr_; }

 private:
  Utility(Kind kind, double repr) : kind_(kind), repr_(repr) {}
  Kind kind_;
  double repr_;
};

struct WeightedUtility {
  double probability;
  Utility utility;
};

/// sum p_i * u_i, evaluated in log space for exponential utilities.
/// Throws ValidationError on an empty span or mixed kinds.
Utility expectation(std::span<const WeightedUtility> terms);

/// U(V) = 1 - exp(-V / rho); risk-neutral: V / kRiskNeutralScale.
Utility u_transform(Money v, const RiskPreference& pref);
/// Same transform applied to an exact dollar value (no cent rounding).
Utility u_transform_dollars(double v, const RiskPreference& pref);

/// CE = -rho * ln(1 - u), in (unrounded) dollars.
double certain_equivalent_dollars(const Utility& u, const RiskPreference& pref);
Money certain_equivalent(const Utility& u, const RiskPreference& pref);
/// Plain u-value overload; throws DomainError if u >= 1 under exponential pref.
Money certain_equivalent(double u, const RiskPreference& pref);

/// Exponential parameter at which a 3:1 win/lose lottery on `stake` is
/// exactly as good as not playing: stake / ln 3. Throws ValidationError
/// for stake <= 0.
Money stake_to_rho(Money stake);

}  // namespace ennms
