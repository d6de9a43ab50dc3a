#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "chilab/generate.hpp"
#include "chilab/graph.hpp"
#include "chilab/graph6.hpp"

namespace chilab::harness {

/// One graph of an input stream, tagged with its position.
struct SourceItem {
  std::uint64_t index;
  /// graph6 text as read (or as encoded, for generated streams).
  std::string graph6;
  Graph graph;
};

/// Single-consumer stream of graphs handed out in batches.
class GraphSource {
 public:
  virtual ~GraphSource() = default;
  /// Appends up to `limit` items to `out`; returns false once exhausted.
  virtual bool next_batch(std::vector<SourceItem>& out, std::size_t limit) = 0;
};

class EnumerationSource final : public GraphSource {
 public:
  explicit EnumerationSource(int n, int guard = kDefaultEnumerationGuard) : enumeration_(n, guard) {}

  bool next_batch(std::vector<SourceItem>& out, std::size_t limit) override {
    const std::uint64_t total = enumeration_.size();
    for (std::size_t i = 0; i < limit && next_ < total; ++i, ++next_) {
      Graph g = enumeration_.at(next_);
      std::string text = encode_graph6(g);
      out.push_back(SourceItem{next_, std::move(text), std::move(g)});
    }
    return next_ < total;
  }

 private:
  LabeledEnumeration enumeration_;
  std::uint64_t next_ = 0;
};

class VectorSource final : public GraphSource {
 public:
  explicit VectorSource(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}

  bool next_batch(std::vector<SourceItem>& out, std::size_t limit) override {
    for (std::size_t i = 0; i < limit && next_ < graphs_.size(); ++i, ++next_)
      out.push_back(SourceItem{next_, encode_graph6(graphs_[next_]), graphs_[next_]});
    return next_ < graphs_.size();
  }

 private:
  std::vector<Graph> graphs_;
  std::size_t next_ = 0;
};

/// graph6 text, one graph per line. Blank lines and lines starting with
/// ">>" are skipped, except that a ">>graph6<<" prefix is stripped from a
/// line that also carries a graph.
class StreamSource final : public GraphSource {
 public:
  explicit StreamSource(std::istream& in, std::string name = "<stream>") : in_(&in), name_(std::move(name)) {}

  static std::unique_ptr<StreamSource> open(const std::string& path) {
    auto file = std::make_unique<std::ifstream>(path);
    if (!*file) throw std::runtime_error("cannot open " + path);
    auto source = std::make_unique<StreamSource>(*file, path);
    source->owned_ = std::move(file);
    return source;
  }

  bool next_batch(std::vector<SourceItem>& out, std::size_t limit) override {
    std::string line;
    std::size_t taken = 0;
    while (taken < limit && std::getline(*in_, line)) {
      ++line_number_;
      static constexpr std::string_view kHeader = ">>graph6<<";
      if (line.rfind(kHeader, 0) == 0) line.erase(0, kHeader.size());
      else if (line.rfind(">>", 0) == 0) continue;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
      if (line.empty()) continue;
      try {
        Graph g = parse_graph6(line);
        out.push_back(SourceItem{next_index_++, line, std::move(g)});
        ++taken;
      } catch (const ParseError& e) {
        throw std::runtime_error(name_ + ":" + std::to_string(line_number_) + ": " + e.what());
      }
    }
    return static_cast<bool>(*in_);
  }

 private:
  std::istream* in_;
  std::unique_ptr<std::ifstream> owned_;
  std::string name_;
  std::uint64_t line_number_ = 0;
  std::uint64_t next_index_ = 0;
};

}  // namespace chilab::harness
