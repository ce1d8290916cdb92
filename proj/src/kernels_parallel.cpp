#include <exception>

#include "ennms/error.hpp"
#include "ennms/kernels.hpp"

#ifdef ENNMS_HAVE_OPENMP
#include <omp.h>
#endif

namespace ennms::kernels {

int max_threads() {
#ifdef ENNMS_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace parallel {

std::vector<double> certain_equivalents(const LotteryBatch& batch, const RiskPreference& pref) {
  const auto n = static_cast<long long>(batch.size());
  std::vector<double> out(batch.size());
  std::vector<std::exception_ptr> errors(batch.size());
#pragma omp parallel
  {
    std::vector<WeightedUtility> terms;
#pragma omp for schedule(static)
    for (long long i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      try {
        terms.clear();
        for (std::size_t j = batch.offsets[idx]; j < batch.offsets[idx + 1]; ++j) {
          terms.push_back({batch.probabilities[j], u_transform_dollars(batch.values[j], pref)});
        }
        out[idx] = certain_equivalent_dollars(expectation(terms), pref);
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<double> scan_expected_utility(const BlackSwanCurve& curve, double target, std::size_t points,
                                          const RiskPreference& pref) {
  if (points < 2) throw RangeError("scan needs at least 2 points");
  std::vector<double> out(points);
  const double denom = static_cast<double>(points - 1);
  const auto n = static_cast<long long>(points);
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = composed_expected_utility(curve, static_cast<double>(k) / denom, pref) - target;
  }
  return out;
}

}  // namespace parallel

}  // namespace ennms::kernels
