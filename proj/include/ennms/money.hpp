#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ennms {

/// Signed currency amount held as integer cents.
///
/// Addition and subtraction are exact and throw OverflowError instead of
/// wrapping. Conversion to binary64 dollars happens only at the boundary of
/// the utility math; conversion back rounds half-to-even.
class Money {
 public:
  constexpr Money() = default;

  static constexpr Money from_cents(std::int64_t cents) { return Money(cents); }
  /// Whole dollars; throws OverflowError if out of range.
  static Money from_dollars(std::int64_t dollars);
  /// Rounds half-even to the nearest cent; throws OverflowError if the result
  /// is not representable or `dollars` is not finite.
  static Money round_dollars(double dollars);
  /// Parses "-1234.5", "$1,234.56", "1e6". More than two decimals is an error
  /// unless the value is written in exponent form.
  static Money parse(std::string_view text);

  constexpr std::int64_t cents() const { return cents_; }
  double dollars() const { return static_cast<double>(cents_) / 100.0; }

  /// "$1,234.56" / "-$191,234.00"
  std::string display() const;
  /// Plain "-191234.00", suitable for round-tripping through parse().
  std::string decimal() const;

  Money operator-() const;
  Money& operator+=(Money other);
  Money& operator-=(Money other);
  friend Money operator+(Money a, Money b) { return a += b; }
  friend Money operator-(Money a, Money b) { return a -= b; }

  friend constexpr bool operator==(Money, Money) = default;
  friend constexpr auto operator<=>(Money, Money) = default;

 private:
  constexpr explicit Money(std::int64_t cents) : cents_(cents) {}
  std::int64_t cents_ = 0;
};

std::ostream& operator<<(std::ostream& os, Money m);

}  // namespace ennms
