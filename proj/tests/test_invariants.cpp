#include <gtest/gtest.h>

#include "chilab/generate.hpp"
#include "chilab/graph6.hpp"
#include "chilab/invariants.hpp"
#include "oracles.hpp"

namespace chilab {
namespace {

Graph isolated(int n) { return Graph(n); }

TEST(ChromaticTest, Examples) {
  EXPECT_EQ(chromatic_number(Graph::complete(4)).colors, 4);
  EXPECT_EQ(chromatic_number(Graph::cycle(5)).colors, 3);
  EXPECT_EQ(chromatic_number(Graph::petersen()).colors, 3);
  EXPECT_EQ(chromatic_number(Graph(1)).colors, 1);
  EXPECT_EQ(chromatic_number(Graph::cycle(6)).colors, 2);
}

TEST(ChromaticTest, WitnessIsProperAndOptimal) {
  for (const Graph& g : {Graph::complete(4), Graph::cycle(5), Graph::petersen(), isolated(5)}) {
    const ColoringResult r = chromatic_number(g);
    EXPECT_TRUE(is_proper_coloring(g, r.coloring));
    EXPECT_EQ(static_cast<int>(color_classes(r.coloring).size()), r.colors);
  }
}

TEST(ChromaticTest, MatchesBruteForceOnRandomGraphs) {
  SplitMix64 rng(11);
  for (int i = 0; i < 600; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = gen_gnp(n, Rational(static_cast<std::int64_t>(1 + rng() % 9), 10), rng());
    const ColoringResult r = chromatic_number(g);
    ASSERT_EQ(r.colors, oracle::chromatic(g)) << encode_graph6(g);
    ASSERT_TRUE(is_proper_coloring(g, r.coloring)) << encode_graph6(g);
  }
}

TEST(ChromaticTest, MatchesSubsetRecurrenceOnLargerGraphs) {
  SplitMix64 rng(12);
  for (int i = 0; i < 60; ++i) {
    const int n = 9 + static_cast<int>(rng() % 6);
    const Graph g = gen_gnp(n, Rational(static_cast<std::int64_t>(2 + rng() % 7), 10), rng());
    ASSERT_EQ(chromatic_number(g).colors, oracle::chromatic_table(g).back()) << encode_graph6(g);
  }
}

TEST(CliqueTest, Examples) {
  EXPECT_EQ(clique_number(Graph::complete(4)).size, 4);
  EXPECT_EQ(clique_number(Graph::cycle(5)).size, 2);
  EXPECT_EQ(clique_number(Graph::petersen()).size, 2);
  EXPECT_EQ(clique_number(isolated(3)).size, 1);
}

TEST(IndependenceTest, Examples) {
  EXPECT_EQ(independence_number(Graph::complete(5)).size, 1);
  EXPECT_EQ(independence_number(Graph::cycle(5)).size, 2);
  EXPECT_EQ(independence_number(isolated(5)).size, 5);
  EXPECT_EQ(independence_number(Graph::petersen()).size, 4);
}

TEST(CliqueTest, MatchesBruteForceAndComplementDuality) {
  SplitMix64 rng(13);
  for (int i = 0; i < 400; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = gen_gnp(n, Rational(static_cast<std::int64_t>(rng() % 11), 10), rng());
    const CliqueResult c = clique_number(g);
    const CliqueResult a = independence_number(g);
    ASSERT_EQ(c.size, oracle::clique(g));
    ASSERT_EQ(a.size, oracle::independence(g));
    ASSERT_EQ(c.size, independence_number(complement(g)).size);
    ASSERT_TRUE(g.is_clique(c.witness) && c.witness.size() == c.size);
    ASSERT_TRUE(g.is_independent(a.witness) && a.witness.size() == a.size);
  }
}

TEST(ConnectivityTest, Examples) {
  EXPECT_EQ(vertex_connectivity(Graph::complete(5)).kappa, 4);
  EXPECT_FALSE(vertex_connectivity(Graph::complete(5)).cut.has_value());
  const ConnectivityResult p4 = vertex_connectivity(Graph::path(4));
  EXPECT_EQ(p4.kappa, 1);
  ASSERT_TRUE(p4.cut);
  EXPECT_TRUE(is_vertex_cut(Graph::path(4), *p4.cut));
  EXPECT_EQ(vertex_connectivity(Graph::petersen()).kappa, 3);
  EXPECT_EQ(vertex_connectivity(Graph(1)).kappa, 0);
  const ConnectivityResult split = vertex_connectivity(isolated(4));
  EXPECT_EQ(split.kappa, 0);
  ASSERT_TRUE(split.cut);
  EXPECT_TRUE(split.cut->empty());
  // Frozen from networkx.node_connectivity.
  EXPECT_EQ(vertex_connectivity(complement(Graph::petersen())).kappa, 6);
}

TEST(ConnectivityTest, MatchesBruteForceOnAllGraphsUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    LabeledEnumeration(n).for_each([](const Graph& g) {
      const ConnectivityResult r = vertex_connectivity(g);
      ASSERT_EQ(r.kappa, oracle::connectivity(g)) << encode_graph6(g);
      if (r.cut) {
        ASSERT_EQ(r.cut->size(), r.kappa);
        ASSERT_EQ(oracle::components_after_removal(g, r.cut->bits()) >= 2, true) << encode_graph6(g);
      }
    });
  }
}

TEST(ConnectivityTest, MatchesBruteForceOnRandomEightVertexGraphs) {
  SplitMix64 rng(14);
  for (int i = 0; i < 500; ++i) {
    const Graph g = gen_gnp(8, Rational(static_cast<std::int64_t>(3 + rng() % 7), 10), rng());
    ASSERT_EQ(vertex_connectivity(g).kappa, oracle::connectivity(g)) << encode_graph6(g);
  }
}

TEST(ExcessTest, Examples) {
  const ExcessResult empty5 = chromatic_excess(isolated(5));
  EXPECT_EQ(empty5.excess, 2);
  EXPECT_EQ(empty5.witness, VertexSet::range(5));
  EXPECT_EQ(chromatic_excess(Graph::cycle(5)).excess, -1);
  EXPECT_EQ(chromatic_excess(Graph::complete(4)).excess, -2);
  EXPECT_EQ(chromatic_excess(Graph(1)).excess, -2);
}

TEST(ExcessTest, MatchesFullEnumeration) {
  SplitMix64 rng(15);
  for (int i = 0; i < 120; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = gen_gnp(n, Rational(static_cast<std::int64_t>(rng() % 11), 10), rng());
    const ExcessResult r = chromatic_excess(g);
    ASSERT_EQ(r.excess, oracle::excess(g)) << encode_graph6(g);
    ASSERT_EQ(r.witness.size() - 3 * oracle::chromatic_table(g)[r.witness.bits()], r.excess);
  }
}

TEST(ExcessTest, LemmasHoldOnAllGraphsUpToSix) {
  int upper_unchecked = 0;
  for (int n = 1; n <= 6; ++n) {
    LabeledEnumeration(n).for_each([&](const Graph& g) {
      const InvariantReport r = invariant_report(g, true);
      const int eta = *r.excess;
      ASSERT_LE(r.independence - 3, eta);
      ASSERT_GE(eta, r.n - 3 * r.chromatic);
      if (r.independence >= 3) ASSERT_LE(eta * r.independence, (r.independence - 3) * r.n);
      else ++upper_unchecked;
    });
  }
  // C5-like cases exist where the scaled upper bound is not meaningful.
  EXPECT_GT(upper_unchecked, 0);
}

TEST(ExcessTest, UpperLemmaFailsBelowAlphaThree) {
  // eta(C5) = -1 but (alpha - 3) n / alpha = -5/2.
  const InvariantReport r = invariant_report(Graph::cycle(5), true);
  EXPECT_EQ(r.independence, 2);
  EXPECT_GT(*r.excess * r.independence, (r.independence - 3) * r.n);
}

TEST(InvariantReportTest, Examples) {
  const InvariantReport c5 = invariant_report(Graph::cycle(5), true);
  EXPECT_EQ(c5.n, 5);
  EXPECT_EQ(c5.max_degree, 2);
  EXPECT_EQ(c5.chromatic, 3);
  EXPECT_EQ(c5.clique, 2);
  EXPECT_EQ(c5.independence, 2);
  EXPECT_EQ(c5.kappa_bar, 2);
  EXPECT_EQ(c5.delta_bar, 2);
  EXPECT_EQ(c5.excess, -1);

  const InvariantReport k1 = invariant_report(Graph(1), true);
  EXPECT_EQ(k1.n, 1);
  EXPECT_EQ(k1.max_degree, 0);
  EXPECT_EQ(k1.chromatic, 1);
  EXPECT_EQ(k1.clique, 1);
  EXPECT_EQ(k1.independence, 1);
  EXPECT_EQ(k1.kappa_bar, 0);
  EXPECT_EQ(k1.delta_bar, 0);
  EXPECT_EQ(k1.excess, -2);

  const InvariantReport k4 = invariant_report(Graph::complete(4), true);
  EXPECT_EQ(k4.max_degree, 3);
  EXPECT_EQ(k4.chromatic, 4);
  EXPECT_EQ(k4.clique, 4);
  EXPECT_EQ(k4.independence, 1);
  EXPECT_EQ(k4.kappa_bar, 0);
  EXPECT_EQ(k4.delta_bar, 0);
  EXPECT_EQ(k4.excess, -2);
}

TEST(InvariantReportTest, ExcessAbsentWithoutFlag) {
  const InvariantReport r = invariant_report(Graph::cycle(5), false);
  EXPECT_FALSE(r.excess.has_value());
  EXPECT_FALSE(r.witnesses.excess.has_value());
}

TEST(InvariantReportTest, WitnessesCertifyOnRandomGraphs) {
  SplitMix64 rng(16);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const Graph g = gen_gnp(n, Rational(static_cast<std::int64_t>(rng() % 11), 10), rng());
    const InvariantReport r = invariant_report(g, true);
    EXPECT_TRUE(certify(g, r).empty()) << encode_graph6(g);
  }
}

TEST(InvariantReportTest, CertifyCatchesTampering) {
  const Graph g = Graph::cycle(5);
  InvariantReport r = invariant_report(g, true);
  r.witnesses.clique = VertexSet::of({0, 2});
  EXPECT_FALSE(certify(g, r).empty());
  r = invariant_report(g, true);
  r.chromatic = 2;
  EXPECT_FALSE(certify(g, r).empty());
  r = invariant_report(g, true);
  r.excess = 0;
  EXPECT_FALSE(certify(g, r).empty());
}

}  // namespace
}  // namespace chilab
