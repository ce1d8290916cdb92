#pragma once

// Independent reference computations for tests. Nothing here calls into
// the library's utility, tree or solver code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline double u(double v, double rho) { return 1.0 - std::exp(-v / rho); }
inline double ce(double eu, double rho) { return -rho * std::log(1.0 - eu); }

struct Outcome {
  double probability;
  double value;
};

inline double expected_utility(const std::vector<Outcome>& lottery, double rho) {
  double s = 0.0;
  for (const auto& o : lottery) s += o.probability * u(o.value, rho);
  return s;
}

inline double expected_value(const std::vector<Outcome>& lottery) {
  double s = 0.0;
  for (const auto& o : lottery) s += o.probability * o.value;
  return s;
}

/// Plain bisection for the root of f on [lo, hi]; f(lo) and f(hi) of
/// opposite sign.
template <class F>
double bisect(F f, double lo, double hi, int iterations = 200) {
  const bool lo_positive = f(lo) > 0;
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0) == lo_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Exponential parameter at which the 3:1 lottery on `stake` has zero
/// expected utility, by bisection over rho.
inline double indifference_rho(double stake) {
  auto f = [&](double rho) { return 0.75 * u(stake, rho) + 0.25 * u(-stake, rho); };
  return bisect(f, stake * 1e-3, stake * 1e3, 400);
}

/// Brute-force scan of p on a uniform grid of `points` over [0, 1]; returns
/// the grid interval in which g(p) first changes sign.
template <class G>
std::pair<double, double> grid_bracket(G g, std::size_t points) {
  const double step = 1.0 / static_cast<double>(points - 1);
  double prev = g(0.0);
  for (std::size_t k = 1; k < points; ++k) {
    const double p = static_cast<double>(k) * step;
    const double cur = g(p);
    if ((prev > 0) != (cur > 0)) return {p - step, p};
    prev = cur;
  }
  return {-1.0, -1.0};
}

/// EU of a base lottery overlaid with a catastrophe taken with probability p.
inline double black_swan_eu(const std::vector<Outcome>& base, double catastrophe, double p, double rho) {
  double s = p * u(catastrophe, rho);
  for (const auto& o : base) s += (1.0 - p) * o.probability * u(o.value, rho);
  return s;
}

/// Decimal-string addition of signed integers, for checking exact cents.
inline std::string add_decimal(std::int64_t a, std::int64_t b) {
  auto digits = [](std::int64_t v) {
    std::string s;
    std::uint64_t m = v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    do {
      s.push_back(static_cast<char>('0' + m % 10));
      m /= 10;
    } while (m);
    return s;  // little-endian
  };
  auto cmp = [](const std::string& x, const std::string& y) {
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (std::size_t i = x.size(); i-- > 0;) {
      if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    }
    return 0;
  };
  auto add = [](const std::string& x, const std::string& y) {
    std::string r;
    int carry = 0;
    for (std::size_t i = 0; i < std::max(x.size(), y.size()) || carry; ++i) {
      int d = carry + (i < x.size() ? x[i] - '0' : 0) + (i < y.size() ? y[i] - '0' : 0);
      r.push_back(static_cast<char>('0' + d % 10));
      carry = d / 10;
    }
    return r;
  };
  auto sub = [](const std::string& x, const std::string& y) {  // x >= y
    std::string r;
    int borrow = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      int d = (x[i] - '0') - borrow - (i < y.size() ? y[i] - '0' : 0);
      borrow = d < 0;
      r.push_back(static_cast<char>('0' + (d + 10) % 10));
    }
    while (r.size() > 1 && r.back() == '0') r.pop_back();
    return r;
  };
  const bool na = a < 0;
  const bool nb = b < 0;
  const std::string da = digits(a);
  const std::string db = digits(b);
  std::string mag;
  bool negative = false;
  if (na == nb) {
    mag = add(da, db);
    negative = na;
  } else if (cmp(da, db) >= 0) {
    mag = sub(da, db);
    negative = na;
  } else {
    mag = sub(db, da);
    negative = nb;
  }
  std::string out(mag.rbegin(), mag.rend());
  if (out == "0") return out;
  return negative ? "-" + out : out;
}

}  // namespace oracle
