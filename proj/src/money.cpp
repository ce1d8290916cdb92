#include "ennms/money.hpp"

#include <cmath>
#include <cctype>
#include <charconv>
#include <limits>
#include <ostream>

#include "ennms/error.hpp"

namespace ennms {

namespace {

constexpr std::int64_t kMaxDollars = std::numeric_limits<std::int64_t>::max() / 100;

}  // namespace

Money Money::from_dollars(std::int64_t dollars) {
  if (dollars > kMaxDollars || dollars < -kMaxDollars) {
    throw OverflowError("money: $" + std::to_string(dollars) + " exceeds the cent range");
  }
  return Money(dollars * 100);
}

Money Money::round_dollars(double dollars) {
  if (!std::isfinite(dollars)) {
    throw OverflowError("money: non-finite dollar amount");
  }
  // nearbyint honours the default round-to-nearest-even mode.
  const double cents = std::nearbyint(dollars * 100.0);
  // 2^63 is exactly representable; anything at or beyond it does not fit.
  if (cents >= 9223372036854775808.0 || cents < -9223372036854775808.0) {
    throw OverflowError("money: dollar amount exceeds the cent range");
  }
  return Money(static_cast<std::int64_t>(cents));
}

Money Money::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '$' || c == ',' || c == '_') continue;
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    cleaned.push_back(c);
  }
  if (cleaned.empty()) throw ValidationError("empty money value");
  if (cleaned.find_first_of("eE") != std::string::npos) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(cleaned.data(), cleaned.data() + cleaned.size(), v);
    if (ec != std::errc{} || ptr != cleaned.data() + cleaned.size()) {
      throw ValidationError("malformed money value '" + std::string(text) + "'");
    }
    return round_dollars(v);
  }

  bool negative = false;
  std::size_t pos = 0;
  if (cleaned[pos] == '-' || cleaned[pos] == '+') {
    negative = cleaned[pos] == '-';
    ++pos;
  }
  // Allow "-$5" as well as "$-5": the '$' has already been stripped.
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < cleaned.size(); ++pos) {
    const char c = cleaned[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ValidationError("malformed money value '" + std::string(text) + "'");
    }
    any_digit = true;
    const int d = c - '0';
    if (seen_point) {
      if (++frac_digits > 2) {
        throw ValidationError("money value '" + std::string(text) + "' has sub-cent precision");
      }
      frac = frac * 10 + d;
    } else {
      if (whole > (kMaxDollars - d) / 10) {
        throw OverflowError("money value '" + std::string(text) + "' exceeds the cent range");
      }
      whole = whole * 10 + d;
    }
  }
  if (!any_digit) throw ValidationError("malformed money value '" + std::string(text) + "'");
  if (frac_digits == 1) frac *= 10;
  const std::int64_t cents = whole * 100 + frac;
  return Money(negative ? -cents : cents);
}

std::string Money::decimal() const {
  const bool negative = cents_ < 0;
  // Work in unsigned to cover INT64_MIN.
  const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(cents_)
                                     : static_cast<std::uint64_t>(cents_);
  const std::uint64_t frac = mag % 100;
  std::string out = negative ? "-" : "";
  out += std::to_string(mag / 100);
  out += '.';
  out += static_cast<char>('0' + frac / 10);
  out += static_cast<char>('0' + frac % 10);
  return out;
}

std::string Money::display() const {
  const bool negative = cents_ < 0;
  const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(cents_)
                                     : static_cast<std::uint64_t>(cents_);
  const std::string whole = std::to_string(mag / 100);
  std::string grouped;
  const std::size_t lead = whole.size() % 3 == 0 ? 3 : whole.size() % 3;
  grouped.append(whole, 0, lead);
  for (std::size_t i = lead; i < whole.size(); i += 3) {
    grouped += ',';
    grouped.append(whole, i, 3);
  }
  const std::uint64_t frac = mag % 100;
  std::string out = negative ? "-$" : "$";
  out += grouped;
  out += '.';
  out += static_cast<char>('0' + frac / 10);
  out += static_cast<char>('0' + frac % 10);
  return out;
}

Money Money::operator-() const {
  if (cents_ == std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("money: negation overflow");
  }
  return Money(-cents_);
}

Money& Money::operator+=(Money other) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(cents_, other.cents_, &out)) {
    throw OverflowError("money: addition overflow");
  }
  cents_ = out;
  return *this;
}

Money& Money::operator-=(Money other) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(cents_, other.cents_, &out)) {
    throw OverflowError("money: subtraction overflow");
  }
  cents_ = out;
  return *this;
}

std::ostream& operator<<(std::ostream& os, Money m) { return os << m.display(); }

}  // namespace ennms
