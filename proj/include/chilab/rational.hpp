#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chilab {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p", "p/q" or a finite decimal such as "0.25" into an exact value.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational { throw std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (s.empty()) fail();
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail();
    return v;
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15 || frac.front() == '-' || frac.front() == '+') fail();
    const bool negative = !whole.empty() && whole.front() == '-';
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t w = (whole.empty() || whole == "-") ? 0 : parse_int(whole);
    const std::int64_t f = parse_int(frac);
    const Rational magnitude = Rational(w < 0 ? -w : w) + Rational(f, scale);
    return negative ? -magnitude : magnitude;
  }
  return Rational(parse_int(text));
}

/// Comma-separated list of rationals, e.g. "1/10,1/4,1/2".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace chilab
