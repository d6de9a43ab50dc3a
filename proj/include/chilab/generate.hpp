#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "chilab/graph.hpp"
#include "chilab/rational.hpp"

namespace chilab {

/// SplitMix64 (Steele, Lea and Flood). Every random stream in this library
/// comes from this generator so runs reproduce across platforms and
/// implementations.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Erdos-Renyi G(n, p). Pairs are visited in graph6 order (column j = 1..n-1,
/// row i = 0..j-1); each consumes one SplitMix64 draw x and becomes an edge
/// iff x * den < num * 2^64, which realizes p = num/den exactly.
inline Graph gen_gnp(int n, const Rational& p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw std::invalid_argument("edge probability must lie in [0,1], got " + to_string(p));
  GraphBuilder builder(n);
  SplitMix64 rng(seed);
  const auto num = static_cast<unsigned __int128>(p.numerator());
  const auto den = static_cast<unsigned __int128>(p.denominator());
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const auto x = static_cast<unsigned __int128>(rng());
      if (x * den < (num << 64)) builder.add_edge(i, j);
    }
  }
  return builder.build();
}

/// Default order limit for labeled enumeration; 2^21 graphs at n = 7.
inline constexpr int kDefaultEnumerationGuard = 7;

/// All 2^(n(n-1)/2) labeled graphs on n vertices. Graph number `mask` has
/// edge k present iff bit k of mask is set, where edges are numbered in
/// graph6 order.
class LabeledEnumeration {
 public:
  explicit LabeledEnumeration(int n, int guard = kDefaultEnumerationGuard) : n_(n) {
    if (n < 1) throw DomainError("enumeration order must be at least 1");
    if (n > guard)
      throw DomainError("refusing to enumerate labeled graphs on " + std::to_string(n) + " vertices (guard is " +
                        std::to_string(guard) + "; raise it explicitly)");
    if (n > 11) throw DomainError("labeled enumeration beyond 11 vertices overflows a 64-bit index");
  }

  int order() const { return n_; }
  int pair_count() const { return n_ * (n_ - 1) / 2; }
  std::uint64_t size() const { return std::uint64_t{1} << pair_count(); }

  Graph at(std::uint64_t mask) const {
    GraphBuilder builder(n_);
    int bit = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if ((mask >> bit) & 1U) builder.add_edge(i, j);
    return builder.build();
  }

  /// Single-consumer forward stream.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t mask = 0; mask < size(); ++mask) fn(at(mask));
  }

 private:
  int n_;
};

}  // namespace chilab
