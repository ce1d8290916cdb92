#include <cmath>
#include <limits>

#include "ennms/error.hpp"
#include "ennms/kernels.hpp"

namespace ennms::kernels {

void LotteryBatch::add(std::span<const double> probs, std::span<const double> vals) {
  if (probs.size() != vals.size() || probs.empty()) {
    throw ValidationError("lottery batch entry needs matching, non-empty probability and value lists");
  }
  probabilities.insert(probabilities.end(), probs.begin(), probs.end());
  values.insert(values.end(), vals.begin(), vals.end());
  offsets.push_back(probabilities.size());
}

double composed_expected_utility(const BlackSwanCurve& curve, double p, const RiskPreference& pref) {
  std::vector<WeightedUtility> terms;
  terms.reserve(curve.values.size() + 1);
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    terms.push_back({(1.0 - p) * curve.probabilities[i], u_transform_dollars(curve.values[i], pref)});
  }
  terms.push_back({p, u_transform_dollars(curve.catastrophe, pref)});
  return expectation(terms).value();
}

std::vector<Bracket> sign_changes(std::span<const double> scan) {
  std::vector<Bracket> out;
  if (scan.size() < 2) return out;
  const double denom = static_cast<double>(scan.size() - 1);
  auto sign = [](double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); };
  for (std::size_t k = 0; k < scan.size(); ++k) {
    const double pk = static_cast<double>(k) / denom;
    if (sign(scan[k]) == 0) {
      out.push_back({pk, pk});
    } else if (k + 1 < scan.size() && sign(scan[k]) * sign(scan[k + 1]) < 0) {
      out.push_back({pk, static_cast<double>(k + 1) / denom});
    }
  }
  return out;
}

namespace serial {

std::vector<double> certain_equivalents(const LotteryBatch& batch, const RiskPreference& pref) {
  std::vector<double> out(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    std::vector<WeightedUtility> terms;
    for (std::size_t j = batch.offsets[i]; j < batch.offsets[i + 1]; ++j) {
      terms.push_back({batch.probabilities[j], u_transform_dollars(batch.values[j], pref)});
    }
    out[i] = certain_equivalent_dollars(expectation(terms), pref);
  }
  return out;
}

std::vector<double> scan_expected_utility(const BlackSwanCurve& curve, double target, std::size_t points,
                                          const RiskPreference& pref) {
  if (points < 2) throw RangeError("scan needs at least 2 points");
  std::vector<double> out(points);
  const double denom = static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) {
    out[k] = composed_expected_utility(curve, static_cast<double>(k) / denom, pref) - target;
  }
  return out;
}

}  // namespace serial

}  // namespace ennms::kernels
