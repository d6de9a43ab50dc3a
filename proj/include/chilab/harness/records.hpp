#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "chilab/bounds.hpp"
#include "chilab/invariants.hpp"
#include "chilab/q4.hpp"
#include "chilab/rational.hpp"

namespace chilab::harness {

using Json = nlohmann::ordered_json;

struct EpsVerdict {
  Rational eps;
  bool bound_holds = false;
  double threshold = 0.0;
  bool threshold_holds = false;

  bool operator==(const EpsVerdict&) const = default;
};

/// One output row per input graph.
struct ScanRecord {
  std::uint64_t index = 0;
  std::string graph6;
  InvariantReport invariants;
  std::vector<BoundEvaluation> evaluations;
  bool reed_violation = false;
  /// kappa_bar / log2 n; absent for n = 1.
  std::optional<double> kappa_log_ratio;
  std::vector<EpsVerdict> eps_verdicts;

  bool operator==(const ScanRecord&) const = default;
};

enum class RecordFormat { jsonl, csv };

inline RecordFormat parse_format(std::string_view s) {
  if (s == "jsonl") return RecordFormat::jsonl;
  if (s == "csv") return RecordFormat::csv;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

/// Shortest round-trip decimal text for a double.
inline std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

/// Exact text: "p/4" for quarter-integer bounds, "p/q" otherwise.
inline std::string exact_value(BoundId id, const Rational& v) {
  if (id != BoundId::eps) return Q4::from_rational(v).exact();
  return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

inline std::string decimal_value(BoundId id, const Rational& v) {
  if (id != BoundId::eps) return Q4::from_rational(v).decimal();
  return format_double(to_double(v));
}

inline Rational parse_exact_value(std::string_view s) { return parse_rational(s); }

namespace records_detail {

inline Json vertex_list(VertexSet s) { return Json(s.to_vector()); }

inline VertexSet vertex_set(const Json& j) { return VertexSet::of(j.get<std::vector<int>>()); }

template <typename T, typename Fn>
Json optional_json(const std::optional<T>& v, Fn&& fn) {
  return v ? fn(*v) : Json(nullptr);
}

}  // namespace records_detail

inline Json to_json(const InvariantReport& r) {
  using namespace records_detail;
  const auto& w = r.witnesses;
  Json j;
  j["n"] = r.n;
  j["max_degree"] = r.max_degree;
  j["chromatic"] = r.chromatic;
  j["clique"] = r.clique;
  j["independence"] = r.independence;
  j["kappa_bar"] = r.kappa_bar;
  j["delta_bar"] = r.delta_bar;
  j["excess"] = optional_json(r.excess, [](int v) { return Json(v); });
  Json wj;
  wj["coloring"] = w.coloring;
  wj["clique"] = vertex_list(w.clique);
  wj["independent"] = vertex_list(w.independent);
  wj["complement_cut"] = optional_json(w.complement_cut, vertex_list);
  wj["excess"] = optional_json(w.excess, vertex_list);
  j["witnesses"] = std::move(wj);
  return j;
}

inline InvariantReport report_from_json(const Json& j) {
  using namespace records_detail;
  InvariantReport r;
  r.n = j.at("n");
  r.max_degree = j.at("max_degree");
  r.chromatic = j.at("chromatic");
  r.clique = j.at("clique");
  r.independence = j.at("independence");
  r.kappa_bar = j.at("kappa_bar");
  r.delta_bar = j.at("delta_bar");
  if (!j.at("excess").is_null()) r.excess = j.at("excess").get<int>();
  const Json& w = j.at("witnesses");
  r.witnesses.coloring = w.at("coloring").get<std::vector<int>>();
  r.witnesses.clique = vertex_set(w.at("clique"));
  r.witnesses.independent = vertex_set(w.at("independent"));
  if (!w.at("complement_cut").is_null()) r.witnesses.complement_cut = vertex_set(w.at("complement_cut"));
  if (!w.at("excess").is_null()) r.witnesses.excess = vertex_set(w.at("excess"));
  return r;
}

inline Json to_json(const BoundParams& p) {
  using namespace records_detail;
  Json j = Json::object();
  if (p.subgraph) j["H"] = vertex_list(*p.subgraph);
  if (p.cut) j["K"] = vertex_list(*p.cut);
  if (p.independent_sets) {
    Json sets = Json::array();
    for (VertexSet s : *p.independent_sets) sets.push_back(vertex_list(s));
    j["I"] = std::move(sets);
  }
  if (p.eps) j["eps"] = to_string(*p.eps);
  return j;
}

inline BoundParams params_from_json(const Json& j) {
  using namespace records_detail;
  BoundParams p;
  if (j.contains("H")) p.subgraph = vertex_set(j["H"]);
  if (j.contains("K")) p.cut = vertex_set(j["K"]);
  if (j.contains("I")) {
    std::vector<VertexSet> sets;
    for (const auto& s : j["I"]) sets.push_back(vertex_set(s));
    p.independent_sets = std::move(sets);
  }
  if (j.contains("eps")) p.eps = parse_rational(j["eps"].get<std::string>());
  return p;
}

inline Json to_json(const BoundEvaluation& e) {
  Json j;
  j["bound"] = std::string(to_string(e.id));
  j["params"] = to_json(e.params);
  j["value"] = exact_value(e.id, e.value);
  j["decimal"] = decimal_value(e.id, e.value);
  j["sound"] = e.sound;
  return j;
}

inline BoundEvaluation evaluation_from_json(const Json& j) {
  BoundEvaluation e;
  e.id = bound_id_from_string(j.at("bound").get<std::string>());
  e.params = params_from_json(j.at("params"));
  e.value = parse_exact_value(j.at("value").get<std::string>());
  e.sound = j.at("sound");
  return e;
}

inline Json to_json(const ScanRecord& rec) {
  Json j;
  j["index"] = rec.index;
  j["graph6"] = rec.graph6;
  j["invariants"] = to_json(rec.invariants);
  Json evals = Json::array();
  for (const auto& e : rec.evaluations) evals.push_back(to_json(e));
  j["evaluations"] = std::move(evals);
  j["reed_violation"] = rec.reed_violation;
  j["kappa_log_ratio"] = rec.kappa_log_ratio ? Json(*rec.kappa_log_ratio) : Json(nullptr);
  Json verdicts = Json::array();
  for (const auto& v : rec.eps_verdicts) {
    Json vj;
    vj["eps"] = to_string(v.eps);
    vj["bound_holds"] = v.bound_holds;
    vj["threshold"] = v.threshold;
    vj["threshold_holds"] = v.threshold_holds;
    verdicts.push_back(std::move(vj));
  }
  j["eps_verdicts"] = std::move(verdicts);
  return j;
}

inline ScanRecord record_from_json(const Json& j) {
  ScanRecord rec;
  rec.index = j.at("index");
  rec.graph6 = j.at("graph6");
  rec.invariants = report_from_json(j.at("invariants"));
  for (const auto& e : j.at("evaluations")) rec.evaluations.push_back(evaluation_from_json(e));
  rec.reed_violation = j.at("reed_violation");
  if (!j.at("kappa_log_ratio").is_null()) rec.kappa_log_ratio = j.at("kappa_log_ratio").get<double>();
  for (const auto& v : j.at("eps_verdicts"))
    rec.eps_verdicts.push_back(EpsVerdict{parse_rational(v.at("eps").get<std::string>()), v.at("bound_holds"),
                                          v.at("threshold"), v.at("threshold_holds")});
  return rec;
}

/// CSV columns, in order. Witnesses are omitted; evaluations and eps
/// verdicts are packed into one semicolon-separated cell each.
inline constexpr std::string_view kCsvHeader =
    "index,graph6,n,max_degree,chromatic,clique,independence,kappa_bar,delta_bar,excess,"
    "reed_bound,reed_violation,kappa_log_ratio,evaluations,eps_verdicts";

namespace records_detail {

inline std::string join_vertices(VertexSet s) {
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out += '.';
    out += std::to_string(v);
  });
  return out;
}

// bound[H=0.2|K=4|I=0.2/1.3|eps=1/4]=p/4
inline std::string csv_evaluation(const BoundEvaluation& e) {
  std::string params;
  auto add = [&](std::string_view key, const std::string& value) {
    if (!params.empty()) params += '|';
    params.append(key).append("=").append(value);
  };
  if (e.params.subgraph) add("H", join_vertices(*e.params.subgraph));
  if (e.params.cut) add("K", join_vertices(*e.params.cut));
  if (e.params.independent_sets) {
    std::string sets;
    for (VertexSet s : *e.params.independent_sets) {
      if (!sets.empty()) sets += '/';
      sets += join_vertices(s);
    }
    add("I", sets);
  }
  if (e.params.eps) add("eps", to_string(*e.params.eps));
  return std::string(to_string(e.id)) + "[" + params + "]=" + exact_value(e.id, e.value);
}

}  // namespace records_detail

inline std::string to_csv_row(const ScanRecord& rec) {
  using records_detail::csv_evaluation;
  const auto& r = rec.invariants;
  std::ostringstream out;
  out << rec.index << ',' << rec.graph6 << ',' << r.n << ',' << r.max_degree << ',' << r.chromatic << ','
      << r.clique << ',' << r.independence << ',' << r.kappa_bar << ',' << r.delta_bar << ','
      << (r.excess ? std::to_string(*r.excess) : "") << ',' << reed_bound(r) << ','
      << (rec.reed_violation ? "true" : "false") << ','
      << (rec.kappa_log_ratio ? format_double(*rec.kappa_log_ratio) : "") << ',';
  for (std::size_t i = 0; i < rec.evaluations.size(); ++i)
    out << (i ? ";" : "") << csv_evaluation(rec.evaluations[i]);
  out << ',';
  for (std::size_t i = 0; i < rec.eps_verdicts.size(); ++i) {
    const auto& v = rec.eps_verdicts[i];
    out << (i ? ";" : "") << to_string(v.eps) << ':' << (v.bound_holds ? "holds" : "fails") << ':'
        << format_double(v.threshold) << ':' << (v.threshold_holds ? "holds" : "fails");
  }
  return out.str();
}

/// Streams records to a file (or stdout for path "-"), one per line, in
/// the order written.
class RecordWriter {
 public:
  RecordWriter(const std::string& path, RecordFormat format) : path_(path), format_(format) {
    if (path == "-") {
      out_ = &std::cout;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
      out_ = file_.get();
    }
    if (format_ == RecordFormat::csv) *out_ << kCsvHeader << '\n';
    check();
  }

  void write(const ScanRecord& rec) {
    if (format_ == RecordFormat::jsonl) *out_ << to_json(rec).dump() << '\n';
    else *out_ << to_csv_row(rec) << '\n';
    check();
  }

  void close() {
    out_->flush();
    check();
    if (file_) file_->close();
  }

 private:
  void check() const {
    if (!*out_) throw std::runtime_error("write failed for " + path_);
  }

  std::string path_;
  RecordFormat format_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
};

inline void write_records(const std::vector<ScanRecord>& records, RecordFormat format, const std::string& path) {
  RecordWriter writer(path, format);
  for (const auto& rec : records) writer.write(rec);
  writer.close();
}

inline std::vector<ScanRecord> read_records_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<ScanRecord> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(record_from_json(Json::parse(line)));
  return out;
}

}  // namespace chilab::harness
