#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chilab/graph.hpp"

namespace chilab {

/// A graph6 line that could not be decoded. offset() is the byte position
/// of the offending character (or the line length for truncation).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace graph6_detail {

inline constexpr int kBias = 63;

inline std::string_view strip_trailing(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

inline std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace graph6_detail

/// Decodes the short (n <= 62) graph6 form. The upper triangle is read
/// column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...; six bits per
/// byte, most significant first, each byte offset by 63.
inline Graph parse_graph6(std::string_view line) {
  using namespace graph6_detail;
  line = strip_trailing(line);
  if (line.empty()) throw ParseError("empty graph6 line", 0);
  for (std::size_t i = 0; i < line.size(); ++i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside 63..126", i);
  }
  const int n = static_cast<unsigned char>(line[0]) - kBias;
  if (n == 63) throw ParseError("graphs with more than 62 vertices are unsupported", 0);
  if (n == 0) throw ParseError("graph6 encodes zero vertices", 0);

  const std::size_t expected = 1 + body_length(n);
  if (line.size() != expected)
    throw ParseError("length " + std::to_string(line.size()) + " does not match n=" + std::to_string(n) +
                         " (expected " + std::to_string(expected) + ")",
                     std::min(line.size(), expected));

  GraphBuilder builder(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = static_cast<unsigned char>(line[1 + bit / 6]) - kBias;
      if ((byte >> (5 - bit % 6)) & 1) builder.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const std::size_t last = 1 + bit / 6;
    const int byte = static_cast<unsigned char>(line[last]) - kBias;
    const int pad_mask = (1 << (6 - bit % 6)) - 1;
    if (byte & pad_mask) throw ParseError("nonzero padding bits", last);
  }
  return builder.build();
}

/// Inverse of parse_graph6.
inline std::string encode_graph6(const Graph& g) {
  using namespace graph6_detail;
  const int n = g.order();
  if (n > kMaxVertices) throw DomainError("graph6 short form supports at most 62 vertices");
  std::string out(1 + body_length(n), '\0');
  out[0] = static_cast<char>(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] | (1 << (5 - bit % 6)));
    }
  }
  for (char& c : out) c = static_cast<char>(c + kBias);
  return out;
}

}  // namespace chilab
