#include <algorithm>
#include "ennms/fraction.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "ennms/error.hpp"

namespace ennms {

namespace {

std::int64_t parse_unsigned(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ValidationError("malformed fraction '" + std::string(whole) + "'");
  std::int64_t v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ValidationError("malformed fraction '" + std::string(whole) + "'");
    }
    if (v > (std::numeric_limits<std::int64_t>::max() - (c - '0')) / 10) {
      throw OverflowError("fraction '" + std::string(whole) + "' is too large");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw ValidationError("fraction with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator < 0) throw ValidationError("fraction must be non-negative");
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / (g == 0 ? 1 : g);
  den_ = denominator / (g == 0 ? 1 : g);
}

Fraction Fraction::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ValidationError("empty fraction");
  if (text.front() == '-') throw ValidationError("fraction '" + std::string(text) + "' is negative");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Fraction(parse_unsigned(text.substr(0, slash), text),
                    parse_unsigned(text.substr(slash + 1), text));
  }
  const auto point = text.find('.');
  if (point == std::string_view::npos) return Fraction(parse_unsigned(text, text), 1);

  const std::string_view int_part = text.substr(0, point);
  const std::string_view frac_part = text.substr(point + 1);
  if (frac_part.size() > 18) throw ValidationError("fraction '" + std::string(text) + "' has too many digits");
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  const std::int64_t whole = int_part.empty() ? 0 : parse_unsigned(int_part, text);
  const std::int64_t frac = frac_part.empty() ? 0 : parse_unsigned(frac_part, text);
  detail::wide_int num = static_cast<detail::wide_int>(whole) * den + frac;
  if (num > std::numeric_limits<std::int64_t>::max()) {
    throw OverflowError("fraction '" + std::string(text) + "' is too large");
  }
  return Fraction(static_cast<std::int64_t>(num), den);
}

std::string Fraction::to_string() const {
  // Terminating decimals (denominator 2^a 5^b) print as decimals.
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  const int digits = std::max(twos, fives);
  if (d != 1 || digits > 18) return std::to_string(num_) + "/" + std::to_string(den_);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const auto scaled = static_cast<detail::wide_int>(num_) * (scale / den_);
  if (scaled > std::numeric_limits<std::int64_t>::max()) return std::to_string(num_) + "/" + std::to_string(den_);
  const auto n = static_cast<std::int64_t>(scaled);
  std::string out = std::to_string(n / scale);
  if (digits == 0) return out;
  std::string frac = std::to_string(n % scale);
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return out + "." + frac;
}

Money Fraction::of(Money base) const {
  const detail::wide_int product = static_cast<detail::wide_int>(base.cents()) * num_;
  detail::wide_int q = product / den_;
  detail::wide_int r = product % den_;
  // Truncation toward zero; fix up to half-even.
  const detail::wide_int twice = 2 * (r < 0 ? -r : r);
  if (twice > den_ || (twice == den_ && (q % 2 != 0))) {
    q += product < 0 ? -1 : 1;
  }
  if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("money: fraction product exceeds the cent range");
  }
  return Money::from_cents(static_cast<std::int64_t>(q));
}

}  // namespace ennms
