#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chilab/generate.hpp"
#include "chilab/harness/records.hpp"
#include "chilab/harness/scan.hpp"
#include "chilab/harness/source.hpp"
#include "chilab/harness/strategy.hpp"
#include "chilab/harness/verify.hpp"
#include "oracles.hpp"

namespace chilab::harness {
namespace {

namespace fs = std::filesystem;

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("chilab_test_" + std::to_string(::getpid()) + "_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Graph> cliques(int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) out.push_back(Graph::complete(n));
  return out;
}

TEST(SourceTest, StreamSkipsHeadersAndBlankLines) {
  std::istringstream in(">>graph6<<Dhc\n>>comment\n\nC~\r\n@\n");
  StreamSource source(in);
  std::vector<SourceItem> items;
  while (source.next_batch(items, 2)) {
  }
  ASSERT_EQ(items.size(), 3U);
  EXPECT_EQ(items[0].graph, Graph::cycle(5));
  EXPECT_EQ(items[1].graph6, "C~");
  EXPECT_EQ(items[2].index, 2U);
}

TEST(SourceTest, ParseErrorNamesTheLine) {
  std::istringstream in("Dhc\nA`\n");
  StreamSource source(in, "input.g6");
  std::vector<SourceItem> items;
  try {
    source.next_batch(items, 10);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("input.g6:2"), std::string::npos);
  }
}

TEST(SubgraphStrategyTest, HeuristicOnFiveCycle) {
  const Graph g = Graph::cycle(5);
  const InvariantReport r = invariant_report(g, true);
  const SubgraphPlan plan = subgraph_strategy(g, r, Strategy::heuristic);
  EXPECT_NE(std::find(plan.subgraphs.begin(), plan.subgraphs.end(), g.vertices()), plan.subgraphs.end());
  EXPECT_NE(std::find(plan.subgraphs.begin(), plan.subgraphs.end(), r.witnesses.independent), plan.subgraphs.end());
  EXPECT_NE(std::find(plan.subgraphs.begin(), plan.subgraphs.end(), *r.witnesses.excess), plan.subgraphs.end());
  for (VertexSet h : plan.subgraphs) EXPECT_TRUE(h == g.vertices() || (h.size() == 2 && g.is_independent(h)));
  ASSERT_EQ(plan.cuts.size(), 1U);
  EXPECT_EQ(plan.cuts[0].size(), 2);
  EXPECT_TRUE(is_vertex_cut(complement(g), plan.cuts[0]));
}

TEST(SubgraphStrategyTest, HeuristicOnCliqueHasNoCut) {
  const Graph g = Graph::complete(4);
  const SubgraphPlan plan = subgraph_strategy(g, invariant_report(g, true), Strategy::heuristic);
  EXPECT_TRUE(plan.cuts.empty());
}

TEST(SubgraphStrategyTest, ExhaustiveEnumeratesAllSubsets) {
  const Graph g = Graph::path(4);
  const SubgraphPlan plan = subgraph_strategy(g, invariant_report(g, true), Strategy::exhaustive);
  EXPECT_EQ(plan.subgraphs.size(), 15U);
  EXPECT_THROW(subgraph_strategy(Graph(9), invariant_report(Graph(9), false), Strategy::exhaustive), DomainError);
}

TEST(SubgraphStrategyTest, ExhaustiveCutsAreExactlyTheMinimalCuts) {
  for (int n = 2; n <= 5; ++n) {
    LabeledEnumeration(n).for_each([&](const Graph& g) {
      const Graph co = complement(g);
      const SubgraphPlan plan = subgraph_strategy(g, invariant_report(g, false), Strategy::exhaustive);
      std::vector<VertexSet> expected;
      for (std::uint64_t s = 1; s < (1U << n); ++s) {
        if (oracle::components_after_removal(co, s) < 2) continue;
        bool minimal = true;
        for (std::uint64_t t = (s - 1) & s; t != 0 && minimal; t = (t - 1) & s)
          minimal = oracle::components_after_removal(co, t) < 2;
        if (minimal) expected.push_back(VertexSet(s));
      }
      ASSERT_EQ(plan.cuts, expected) << encode_graph6(g);
    });
  }
}

TEST(BoundEvaluationTest, FastPathMatchesValidatedOperations) {
  SplitMix64 rng(31);
  for (int i = 0; i < 60; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = gen_gnp(n, Rational(1, 2), rng());
    const InvariantReport r = invariant_report(g, true);
    const SubgraphPlan plan = subgraph_strategy(g, r, Strategy::exhaustive);
    SubgraphChromatic chi(g, true);
    for_each_bound_evaluation(g, r, plan, chi, [&](const BoundEvaluation& e) {
      Q4 expected;
      switch (e.id) {
        case BoundId::prop1: expected = bound_prop1(g, *e.params.independent_sets); break;
        case BoundId::prop3:
          expected = bound_prop3(r, invariant_report(induced_subgraph(g, *e.params.subgraph), false));
          break;
        case BoundId::prop4: expected = bound_prop4(g, *e.params.cut, *e.params.subgraph); break;
        case BoundId::cor5:
          expected = bound_cor5(r, invariant_report(induced_subgraph(g, *e.params.subgraph), false));
          break;
        case BoundId::cor6: expected = bound_cor6(g, *e.params.cut); break;
        default: return;
      }
      ASSERT_EQ(e.value, expected.to_rational()) << to_string(e.id) << " " << encode_graph6(g);
    });
  }
}

TEST(VerifyTest, AllFiveVertexGraphsExhaustive) {
  EnumerationSource source(5);
  VerifyOptions opts;
  opts.with_excess = true;
  opts.strategy = Strategy::exhaustive;
  const VerificationSummary s = verify_all(source, opts);
  EXPECT_EQ(s.graphs_processed, 1024U);
  EXPECT_TRUE(s.passed());
  EXPECT_GT(s.bound_checks, 1024U * 10);
}

TEST(VerifyTest, CliquesAreTightForReed) {
  VectorSource source(cliques(2, 8));
  const std::string path = temp_path("cliques.jsonl");
  RecordWriter writer(path, RecordFormat::jsonl);
  VerifyOptions opts;
  opts.with_excess = true;
  opts.records = &writer;
  const VerificationSummary s = verify_all(source, opts);
  writer.close();
  EXPECT_TRUE(s.passed());
  const auto records = read_records_jsonl(path);
  ASSERT_EQ(records.size(), 7U);
  for (const auto& rec : records) {
    const auto& reed = rec.evaluations.back();
    ASSERT_EQ(reed.id, BoundId::reed);
    EXPECT_EQ(reed.value, Rational(rec.invariants.chromatic));
    EXPECT_FALSE(rec.reed_violation);
  }
  fs::remove(path);
}

TEST(VerifyTest, CorruptedBoundIsReported) {
  VectorSource source({Graph::cycle(5), Graph::complete(3)});
  VerifyOptions opts;
  opts.with_excess = true;
  opts.value_hook = [](BoundId id, const Rational& v) { return id == BoundId::prop3 ? v - 1 : v; };
  const VerificationSummary s = verify_all(source, opts);
  ASSERT_FALSE(s.passed());
  bool saw_c5 = false;
  for (const auto& v : s.violations) {
    EXPECT_EQ(v.check, "prop3");
    EXPECT_NE(v.params.find("\"H\""), std::string::npos);
    saw_c5 = saw_c5 || v.graph6 == "Dhc";
  }
  EXPECT_TRUE(saw_c5);
}

TEST(VerifyTest, FailFastStopsAtFirstViolatingGraph) {
  VectorSource source(cliques(1, 6));
  VerifyOptions opts;
  opts.fail_fast = true;
  opts.value_hook = [](BoundId id, const Rational& v) { return id == BoundId::prop2 ? v - 1 : v; };
  const VerificationSummary s = verify_all(source, opts);
  EXPECT_EQ(s.graphs_processed, 1U);
  EXPECT_EQ(s.violations.size(), 1U);
}

TEST(VerifyTest, OversizeGraphsAreSkippedOrAbort) {
  std::ostringstream log;
  VerifyOptions opts;
  opts.with_excess = true;
  opts.max_n = 5;
  opts.log = &log;
  VectorSource source({Graph::cycle(5), Graph::cycle(6)});
  const VerificationSummary s = verify_all(source, opts);
  EXPECT_EQ(s.graphs_processed, 1U);
  EXPECT_EQ(s.graphs_skipped, 1U);
  EXPECT_NE(log.str().find("skipping graph #1"), std::string::npos);

  opts.abort_on_oversize = true;
  VectorSource again({Graph::cycle(6)});
  EXPECT_THROW(verify_all(again, opts), std::runtime_error);
}

TEST(VerifyTest, DefaultGuards) {
  EXPECT_EQ(default_guard(true), 12);
  EXPECT_EQ(default_guard(false), 16);
}

TEST(ScanReedTest, NoViolatorsOnSmallGraphs) {
  EnumerationSource source(5);
  const ReedScanSummary s = scan_reed(source, ScanOptions{});
  EXPECT_EQ(s.graphs_processed, 1024U);
  EXPECT_TRUE(s.violators.empty());
  EXPECT_FALSE(s.min_violator_ratio.has_value());
  EXPECT_EQ(exit_status(s), 0);
}

TEST(ScanReedTest, FiveCycleAndCliquesAreNotViolators) {
  std::vector<Graph> graphs = cliques(1, 7);
  graphs.push_back(Graph::cycle(5));
  VectorSource source(graphs);
  std::vector<ScanRecord> records;
  const std::string path = temp_path("reed.jsonl");
  {
    RecordWriter writer(path, RecordFormat::jsonl);
    ScanOptions opts;
    opts.records = &writer;
    EXPECT_TRUE(scan_reed(source, opts).violators.empty());
    writer.close();
  }
  records = read_records_jsonl(path);
  ASSERT_EQ(records.size(), 8U);
  EXPECT_FALSE(records[0].kappa_log_ratio.has_value());
  for (std::size_t i = 1; i < records.size(); ++i) EXPECT_TRUE(records[i].kappa_log_ratio.has_value());
  for (const auto& rec : records) EXPECT_FALSE(rec.reed_violation);
  fs::remove(path);
}

TEST(ScanReedTest, ViolatorMapsToNotableExit) {
  ReedScanSummary s;
  s.violators.push_back(ReedViolator{"X", 5, 4, 1.0});
  EXPECT_EQ(exit_status(s), 3);
}

TEST(ScanEpsTest, IsolatedVerticesHoldTheBound) {
  const InvariantReport r = invariant_report(Graph(5), false);
  EXPECT_EQ(eps_bound(r, Rational(1, 4)), Rational(7, 4));
  const auto verdicts = eps_verdicts(r, {Rational(1, 4)});
  EXPECT_TRUE(verdicts[0].bound_holds);
}

TEST(ScanEpsTest, ExhaustiveSixHasNoDichotomyFailures) {
  EnumerationSource source(6);
  const EpsScanSummary s = scan_eps(source, {Rational(1, 10), Rational(1, 4), Rational(1, 2)}, ScanOptions{});
  EXPECT_EQ(s.graphs_processed, 32768U);
  EXPECT_TRUE(s.passed());
  for (std::size_t i = 1; i < s.tallies.size(); ++i) EXPECT_GE(s.tallies[i].bound_holds, s.tallies[i - 1].bound_holds);
}

TEST(ScanEpsTest, SmallerEpsNeverHoldsMoreOften) {
  SplitMix64 rng(41);
  const std::vector<Rational> grid{Rational(1, 100), Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(1)};
  for (int i = 0; i < 200; ++i) {
    const InvariantReport r = invariant_report(gen_gnp(1 + static_cast<int>(rng() % 12), Rational(1, 2), rng()), false);
    const auto v = eps_verdicts(r, grid);
    for (std::size_t j = 1; j < v.size(); ++j) EXPECT_LE(v[j - 1].bound_holds, v[j].bound_holds);
  }
}

TEST(ScanEpsTest, RejectsNonPositiveEps) {
  VectorSource source({Graph(2)});
  EXPECT_THROW(scan_eps(source, {Rational(0)}, ScanOptions{}), std::invalid_argument);
}

TEST(ScanEpsTest, ChainCheckOnSyntheticReport) {
  InvariantReport r;
  r.clique = 2;
  r.independence = 2;
  r.kappa_bar = 1;
  EXPECT_TRUE(eps_chain_holds(r, Rational(1, 4)));   // 1/2 + 1/2 < 3/2
  EXPECT_FALSE(eps_chain_holds(r, Rational(1, 2)));  // 1 + 1/2 = 3/2
}

ScanRecord sample_record(std::uint64_t index, const Graph& g) {
  SourceItem item{index, encode_graph6(g), g};
  ScanRecord rec = bounds_record(item, true, Strategy::heuristic);
  rec.eps_verdicts = eps_verdicts(rec.invariants, {Rational(1, 4), Rational(1, 2)});
  BoundEvaluation e{BoundId::eps, {}, eps_bound(rec.invariants, Rational(1, 4)), true};
  e.params.eps = Rational(1, 4);
  rec.evaluations.push_back(e);
  return rec;
}

TEST(RecordsTest, JsonlRoundTrip) {
  const std::vector<ScanRecord> records{sample_record(0, Graph::cycle(5)), sample_record(1, Graph(1)),
                                        sample_record(2, Graph::petersen())};
  const std::string path = temp_path("rt.jsonl");
  write_records(records, RecordFormat::jsonl, path);
  const std::string text = slurp(path);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) EXPECT_TRUE(Json::parse(line).is_object());
  EXPECT_EQ(read_records_jsonl(path), records);
  fs::remove(path);
}

TEST(RecordsTest, ValuesSerializeExactlyAndAsDecimals) {
  const ScanRecord rec = sample_record(0, Graph::cycle(5));
  const Json j = to_json(rec);
  bool saw_cor9 = false;
  for (const auto& e : j["evaluations"]) {
    if (e["bound"] == "cor9") {
      EXPECT_EQ(e["value"], "13/4");
      EXPECT_EQ(e["decimal"], "3.25");
      saw_cor9 = true;
    }
    if (e["bound"] == "eps") {
      EXPECT_EQ(e["value"], "7/2");
    }
  }
  EXPECT_TRUE(saw_cor9);
  const std::vector<std::string> keys{"index", "graph6", "invariants", "evaluations", "reed_violation",
                                      "kappa_log_ratio", "eps_verdicts"};
  std::vector<std::string> actual;
  for (auto it = j.begin(); it != j.end(); ++it) actual.push_back(it.key());
  EXPECT_EQ(actual, keys);
}

TEST(RecordsTest, CsvHeaderAndRows) {
  const std::string path = temp_path("rows.csv");
  write_records({sample_record(0, Graph::cycle(5)), sample_record(1, Graph::complete(3))}, RecordFormat::csv, path);
  std::istringstream lines(slurp(path));
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, kCsvHeader);
  std::getline(lines, row);
  EXPECT_EQ(row.rfind("0,Dhc,5,2,3,2,2,2,2,-1,3,false,", 0), 0U);
  EXPECT_NE(row.find("cor9[]=13/4"), std::string::npos);
  EXPECT_NE(row.find("1/4:holds:0:holds"), std::string::npos);
  fs::remove(path);
}

TEST(RecordsTest, UnwritablePathIsReported) {
  try {
    RecordWriter writer("/nonexistent-dir/x.jsonl", RecordFormat::jsonl);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x.jsonl"), std::string::npos);
  }
}

TEST(ParallelTest, OutputIsIndependentOfThreadCount) {
  auto run = [](unsigned threads) {
    const std::string path = temp_path("par" + std::to_string(threads) + ".jsonl");
    {
      RecordWriter writer(path, RecordFormat::jsonl);
      EnumerationSource source(5);
      VerifyOptions opts;
      opts.with_excess = true;
      opts.strategy = Strategy::exhaustive;
      opts.threads = threads;
      opts.records = &writer;
      EXPECT_TRUE(verify_all(source, opts).passed());
      writer.close();
    }
    std::string text = slurp(path);
    fs::remove(path);
    return text;
  };
  const std::string serial = run(1);
  EXPECT_FALSE(serial.empty());
  EXPECT_EQ(run(4), serial);
  EXPECT_EQ(run(8), serial);
}

TEST(ParallelTest, WorkerExceptionsPropagate) {
  VectorSource source({Graph(3), Graph(9)});
  ScanOptions opts;
  opts.strategy = Strategy::exhaustive;
  opts.threads = 2;
  std::ostringstream sink;
  opts.log = &sink;
  EXPECT_THROW(run_bounds(source, opts), DomainError);
}

TEST(ParallelTest, EnvironmentOverridesWorkerCount) {
  ::setenv("CHI_LAB_THREADS", "3", 1);
  EXPECT_EQ(worker_count_from_env(), 3U);
  ::setenv("CHI_LAB_THREADS", "junk", 1);
  EXPECT_GE(worker_count_from_env(), 1U);
  ::unsetenv("CHI_LAB_THREADS");
}

}  // namespace
}  // namespace chilab::harness
