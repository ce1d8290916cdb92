#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "ennms/money.hpp"

namespace ennms {

namespace detail {
__extension__ typedef __int128 wide_int;
}  // namespace detail

/// Exact non-negative rational in lowest terms, used for savings fractions
/// so that "2/3 of $26,298" is exactly $17,532.
class Fraction {
 public:
  constexpr Fraction() = default;
  /// Throws ValidationError on a zero denominator or negative value.
  Fraction(std::int64_t numerator, std::int64_t denominator);

  /// Accepts "0.05", "1", "2/3".
  static Fraction parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Decimal when the denominator is a power of ten, otherwise "n/d".
  /// parse(to_string()) reproduces the fraction exactly.
  std::string to_string() const;

  /// base * this, rounded half-even to the cent using exact integer math.
  Money of(Money base) const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return static_cast<detail::wide_int>(a.num_) * b.den_ <=> static_cast<detail::wide_int>(b.num_) * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ennms
