#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace chilab {

/// Largest supported vertex count. Keeps short-form graph6 and one-word
/// adjacency rows.
inline constexpr int kMaxVertices = 62;

/// A subset of vertex indices 0..63 stored as a single machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static VertexSet of(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  /// Ascending list of members.
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Iterates members in ascending order.
  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (auto b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls fn(VertexSet) for every subset of `universe` with exactly k members,
/// in increasing numeric order of the bit pattern (Gosper's hack on the
/// compacted index space).
template <typename Fn>
void for_each_subset_of_size(VertexSet universe, int k, Fn&& fn) {
  const std::vector<int> members = universe.to_vector();
  const int m = static_cast<int>(members.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(VertexSet{});
    return;
  }
  std::uint64_t combo = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = m >= 64 ? 0 : std::uint64_t{1} << m;
  while (limit == 0 || combo < limit) {
    VertexSet s;
    for (auto b = combo; b != 0; b &= b - 1) s.insert(members[std::countr_zero(b)]);
    fn(s);
    const std::uint64_t low = combo & -combo;
    const std::uint64_t ripple = combo + low;
    if (ripple == 0) break;
    combo = ripple | (((combo ^ ripple) >> 2) / low);
  }
}

}  // namespace chilab
