#ifndef STPATHS_WEIGHT_HPP
#define STPATHS_WEIGHT_HPP

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stpaths {

/// Exact rational arc weight.
///
/// Finite values are kept in canonical form (den > 0, gcd(|num|, den) = 1).
/// A single positive infinity is provided; it orders above every finite
/// value and is used both as the "unreachable" distance and as an unbounded
/// length budget. Arithmetic that leaves the 64-bit range throws
/// std::overflow_error instead of rounding.
class Weight {
 public:
  constexpr Weight() = default;
  constexpr Weight(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of literals

  Weight(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

  static constexpr Weight infinity() {
    Weight w;
    w.num_ = 1;
    w.den_ = 0;
    return w;
  }

  /// Parses "12", "-3", "0.25", "-1.5", "7/4" or "inf".
  static Weight parse(std::string_view text);

  constexpr bool is_finite() const { return den_ != 0; }
  constexpr bool is_integer() const { return den_ == 1; }
  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  /// Largest integer not above the value. Requires a finite value.
  std::int64_t floor() const {
    require_finite("floor");
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  double to_double() const {
    if (!is_finite()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    if (!is_finite()) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Weight operator-() const {
    require_finite("negation");
    if (num_ == std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("Weight: negation overflow");
    Weight w = *this;
    w.num_ = -num_;
    return w;
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    if (!a.is_finite() || !b.is_finite()) return infinity();
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t sum;
      if (__builtin_add_overflow(a.num_, b.num_, &sum))
        throw std::overflow_error("Weight: addition overflow");
      return Weight(sum);
    }
    using wide = __int128;
    return from_wide(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
                     static_cast<wide>(a.den_) * b.den_);
  }

  /// inf - finite = inf; subtracting infinity is undefined and throws.
  friend Weight operator-(const Weight& a, const Weight& b) {
    if (!b.is_finite()) throw std::domain_error("Weight: subtraction of infinity");
    return a + (-b);
  }

  Weight& operator+=(const Weight& other) { return *this = *this + other; }
  Weight& operator-=(const Weight& other) { return *this = *this - other; }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (!a.is_finite() || !b.is_finite()) {
      if (a.is_finite() == b.is_finite()) return std::strong_ordering::equal;
      return a.is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    using wide = __int128;
    const wide lhs = static_cast<wide>(a.num_) * b.den_;
    const wide rhs = static_cast<wide>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) {
    return os << w.to_string();
  }

 private:
  static Weight from_wide(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("Weight: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      const __int128 r = a % b;
      a = b;
      b = r;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    constexpr auto lo = std::numeric_limits<std::int64_t>::min();
    constexpr auto hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) throw std::overflow_error("Weight: value out of range");
    Weight w;
    w.num_ = static_cast<std::int64_t>(num);
    w.den_ = static_cast<std::int64_t>(den);
    return w;
  }

  void require_finite(const char* what) const {
    if (!is_finite()) throw std::domain_error(std::string("Weight: ") + what + " of infinity");
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Weight Weight::parse(std::string_view text) {
  auto fail = [&]() -> Weight {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  };
  if (text == "inf" || text == "+inf") return infinity();
  if (text.empty()) return fail();

  auto parse_int = [&](std::string_view digits, std::int64_t& out) {
    if (digits.empty()) return false;
    const auto* first = digits.data();
    if (*first == '+') {
      ++first;
      if (first == digits.data() + digits.size()) return false;
    }
    const auto [ptr, ec] = std::from_chars(first, digits.data() + digits.size(), out);
    return ec == std::errc() && ptr == digits.data() + digits.size();
  };

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = 0;
    std::int64_t den = 0;
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den) ||
        den <= 0)
      return fail();
    return Weight(num, den);
  }

  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    std::int64_t value = 0;
    if (!parse_int(text, value)) return fail();
    return Weight(value);
  }

  std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  bool negative = false;
  if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
    negative = whole.front() == '-';
    whole.remove_prefix(1);
  }
  if (whole.empty() && frac.empty()) return fail();
  for (char c : whole)
    if (c < '0' || c > '9') return fail();
  for (char c : frac)
    if (c < '0' || c > '9') return fail();
  if (frac.size() > 18) return fail();

  std::string digits(whole);
  digits += frac;
  std::int64_t scaled = 0;
  if (!digits.empty() && !parse_int(digits, scaled)) return fail();
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  return Weight(negative ? -scaled : scaled, den);
}

}  // namespace stpaths

#endif  // STPATHS_WEIGHT_HPP
