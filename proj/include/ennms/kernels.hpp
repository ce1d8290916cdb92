#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::parallel; both compute
// each output element independently in the same order of operations, so
// their results are bit-identical.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ennms/utility.hpp"

namespace ennms::kernels {

/// Many small lotteries packed contiguously. Lottery i owns entries
/// [offsets[i], offsets[i + 1]).
struct LotteryBatch {
  std::vector<std::size_t> offsets{0};
  std::vector<double> probabilities;
  std::vector<double> values;  ///< dollars

  std::size_t size() const { return offsets.size() - 1; }
  void add(std::span<const double> probs, std::span<const double> vals);
};

/// Base lottery plus a catastrophe branch taken with probability p.
struct BlackSwanCurve {
  std::vector<double> probabilities;
  std::vector<double> values;  ///< dollars
  double catastrophe = 0.0;    ///< dollars
};

/// Expected utility of the composed lottery at p.
double composed_expected_utility(const BlackSwanCurve& curve, double p, const RiskPreference& pref);

/// Closed probability interval [lo, hi] holding a root.
struct Bracket {
  double lo;
  double hi;
};

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

namespace serial {

/// Certain equivalent (dollars) of every lottery in the batch.
std::vector<double> certain_equivalents(const LotteryBatch& batch, const RiskPreference& pref);
/// EU(p_k) - target at p_k = k / (points - 1), k = 0..points-1.
std::vector<double> scan_expected_utility(const BlackSwanCurve& curve, double target, std::size_t points,
                                          const RiskPreference& pref);
/// fn(i) for i in [0, n), results in index order. The exception thrown by
/// the lowest failing index is rethrown.
template <class R>
std::vector<R> map_indices(std::size_t n, const std::function<R(std::size_t)>& fn);

}  // namespace serial

namespace parallel {

std::vector<double> certain_equivalents(const LotteryBatch& batch, const RiskPreference& pref);
std::vector<double> scan_expected_utility(const BlackSwanCurve& curve, double target, std::size_t points,
                                          const RiskPreference& pref);
template <class R>
std::vector<R> map_indices(std::size_t n, const std::function<R(std::size_t)>& fn);

}  // namespace parallel

/// Grid brackets of every root of a scan over p in [0, 1]: a zero-width
/// bracket at each exact zero, a one-step bracket at each strict sign change.
std::vector<Bracket> sign_changes(std::span<const double> scan);

}  // namespace ennms::kernels

#include "ennms/kernels_impl.hpp"
