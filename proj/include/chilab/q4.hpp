#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "chilab/rational.hpp"

namespace chilab {

/// Exact quarter-integer: value = quarters / 4.
class Q4 {
 public:
  constexpr Q4() = default;

  static constexpr Q4 from_quarters(std::int64_t quarters) {
    Q4 q;
    q.quarters_ = quarters;
    return q;
  }
  static constexpr Q4 from_int(std::int64_t v) { return from_quarters(4 * v); }

  /// Accepts any rational whose reduced denominator divides 4.
  static Q4 from_rational(const Rational& r) {
    if (4 % r.denominator() != 0) throw std::domain_error("value " + to_string(r) + " is not a quarter-integer");
    return from_quarters(r.numerator() * (4 / r.denominator()));
  }

  constexpr std::int64_t quarters() const { return quarters_; }
  Rational to_rational() const { return Rational(quarters_, 4); }
  double to_double() const { return static_cast<double>(quarters_) / 4.0; }

  constexpr bool is_integer() const { return quarters_ % 4 == 0; }

  std::int64_t to_int() const {
    if (!is_integer()) throw std::domain_error("Q4 " + exact() + " is not an integer");
    return quarters_ / 4;
  }

  constexpr std::int64_t ceil() const {
    return quarters_ >= 0 ? (quarters_ + 3) / 4 : -((-quarters_) / 4);
  }

  /// "p/4"
  std::string exact() const { return std::to_string(quarters_) + "/4"; }

  /// Exact decimal rendering, e.g. "-2.25".
  std::string decimal() const {
    const std::int64_t mag = quarters_ < 0 ? -quarters_ : quarters_;
    static constexpr const char* kFrac[] = {"", ".25", ".5", ".75"};
    return (quarters_ < 0 ? "-" : "") + std::to_string(mag / 4) + kFrac[mag % 4];
  }

  constexpr Q4 operator+(Q4 o) const { return from_quarters(quarters_ + o.quarters_); }
  constexpr Q4 operator-(Q4 o) const { return from_quarters(quarters_ - o.quarters_); }
  constexpr Q4 operator-() const { return from_quarters(-quarters_); }
  constexpr Q4& operator+=(Q4 o) { quarters_ += o.quarters_; return *this; }

  constexpr bool operator==(const Q4&) const = default;
  constexpr auto operator<=>(const Q4&) const = default;

  friend constexpr bool operator>=(Q4 a, std::int64_t b) { return a.quarters_ >= 4 * b; }
  friend constexpr bool operator<(Q4 a, std::int64_t b) { return a.quarters_ < 4 * b; }

 private:
  std::int64_t quarters_ = 0;
};

}  // namespace chilab
