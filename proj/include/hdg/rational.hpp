#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "hdg/errors.hpp"

namespace hdg {

// Exact rational in [0, 1], kept in lowest terms. Ordering is by value via
// wide-integer cross multiplication; floating point is never involved, so
// comparisons are exact at any denominator the model can produce.
class Ratio {
 public:
  constexpr Ratio() = default;  // 0/1

  Ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw ValidationError("ratio denominator must be positive");
    if (num < 0 || num > den) throw ValidationError("ratio must lie in [0, 1]");
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  static Ratio zero() { return Ratio(); }
  static Ratio one() { return Ratio(1, 1); }
  static Ratio half() { return Ratio(1, 2); }

  // 1 - *this, the reflection between the red and blue ratio axes.
  Ratio complement() const { return Ratio(den_ - num_, den_); }

  // Reduced forms are unique, so fieldwise equality is value equality.
  friend bool operator==(const Ratio&, const Ratio&) = default;

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Strict parse of "num/den": reduced form only, value in [0, 1]. "2/4" is
  // rejected so that serialized ratios have exactly one spelling.
  static Ratio parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

namespace detail {

inline std::int64_t parseInt(std::string_view part, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = part.data();
  const char* last = part.data() + part.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || part.empty()) {
    throw ValidationError("malformed ratio: " + std::string(whole));
  }
  return value;
}

}  // namespace detail

inline Ratio Ratio::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw ValidationError("malformed ratio, expected num/den: " + std::string(text));
  }
  const std::int64_t num = detail::parseInt(text.substr(0, slash), text);
  const std::int64_t den = detail::parseInt(text.substr(slash + 1), text);
  if (den <= 0) throw ValidationError("ratio denominator must be positive: " + std::string(text));
  if (num < 0 || num > den) throw ValidationError("ratio out of [0, 1]: " + std::string(text));
  const Ratio result(num, den);
  if (result.num() != num || result.den() != den) {
    throw ValidationError("ratio not in reduced form: " + std::string(text));
  }
  return result;
}

}  // namespace hdg
