#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "domcycle/canonical.hpp"
#include "domcycle/graph.hpp"
#include "domcycle/graph6.hpp"
#include "oracles.hpp"

using namespace domcycle;

TEST(FromEdgeList, Triangle) {
  Graph g = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.is_complete());
}

TEST(FromEdgeList, EdgelessAndDuplicates) {
  Graph g = from_edge_list(5, {});
  EXPECT_EQ(g.edge_count(), 0u);
  Graph d = from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(d.edge_count(), 1u);
}

TEST(FromEdgeList, Petersen) {
  Graph p = named::petersen();
  EXPECT_EQ(p.edge_count(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3);
}

TEST(FromEdgeList, Errors) {
  EXPECT_THROW(from_edge_list(3, {{0, 3}}), GraphError);
  EXPECT_THROW(from_edge_list(3, {{1, 1}}), GraphError);
  EXPECT_THROW(from_edge_list(0, {}), GraphError);
  EXPECT_THROW(from_edge_list(65, {}), GraphError);
  EXPECT_NO_THROW(from_edge_list(64, {{0, 63}}));
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(named::cycle(5)), 2);
  EXPECT_EQ(min_degree(named::complete(4)), 3);
  EXPECT_EQ(min_degree(named::petersen()), 3);
  for (int k = 2; k <= 6; ++k) EXPECT_EQ(min_degree(named::complete(k + 1)), k);
}

TEST(ComponentsAfterRemoval, Examples) {
  EXPECT_EQ(components_after_removal(named::cycle(6), {0, 3}), 2);
  EXPECT_EQ(components_after_removal(named::complete(5), {1, 4}), 1);
  EXPECT_EQ(components_after_removal(named::star(3), {0}), 3);
  EXPECT_EQ(components_after_removal(named::complete(3), {0, 1, 2}), 0);
  EXPECT_EQ(components_after_removal(Graph(1), {}), 1);
}

TEST(ComponentsAfterRemoval, MatchesUnionFindOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        ASSERT_EQ(components_after_removal(g, VertexSet(s)), oracle::components(g, s));
      EXPECT_EQ(components_after_removal(g, {}) == 1, is_connected(g));
    }
  }
}

TEST(ComponentsAfterRemoval, MatchesUnionFindRandomUpTo7) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 6 + trial % 2;
    Graph g = oracle::random_graph(n, 0.35, rng);
    std::uint64_t s = rng() & VertexSet::range(n).bits();
    ASSERT_EQ(components_after_removal(g, VertexSet(s)), oracle::components(g, s));
  }
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(Graph(5)), "D??");
  EXPECT_EQ(to_graph6(named::complete(4)), "C~");
  EXPECT_EQ(parse_graph6("C~"), named::complete(4));
  EXPECT_EQ(parse_graph6("D??"), Graph(5));
  // networkx labels C5 as 0-1-2-3-4-0 and encodes it as "Dhc".
  EXPECT_EQ(to_graph6(named::cycle(5)), "Dhc");
}

TEST(Graph6, RoundTripC5) {
  Graph c5 = named::cycle(5);
  EXPECT_EQ(parse_graph6(to_graph6(c5)), c5);
}

TEST(Graph6, LongHeader) {
  Graph g = from_edge_list(64, {{0, 63}, {5, 40}});
  std::string s = to_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(parse_graph6(s), g);
  Graph h = from_edge_list(63, {{1, 62}});
  EXPECT_EQ(parse_graph6(to_graph6(h)), h);
}

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), Graph6Error);
  EXPECT_THROW(parse_graph6("D?"), Graph6Error);       // truncated
  EXPECT_THROW(parse_graph6("C~~"), Graph6Error);      // trailing bytes
  EXPECT_THROW(parse_graph6("C\x01"), Graph6Error);    // non-printable
  EXPECT_THROW(parse_graph6("?"), Graph6Error);        // order 0
  EXPECT_THROW(parse_graph6("~?A?"), Graph6Error);     // order 65
  EXPECT_THROW(parse_graph6("~~??????"), Graph6Error);  // 36-bit header
  EXPECT_THROW(parse_graph6("B@"), Graph6Error);       // padding bit set
}

TEST(Graph6, HeaderAndNewlineAccepted) {
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), named::complete(4));
}

TEST(Graph6, StreamReportsLine) {
  std::istringstream in("C~\n\nD??\nbad!\n");
  try {
    read_graph6_stream(in);
    FAIL() << "expected parse error";
  } catch (const Graph6Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
  std::istringstream ok("C~\n\nD??\n");
  auto recs = read_graph6_stream(ok);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[1].line, 3u);
}

TEST(Graph6, MatchesNetworkxFixtures) {
  std::ifstream in(DOMCYCLE_TEST_DATA "/graph6_reference.txt");
  ASSERT_TRUE(in);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto a = line.find('\t');
    auto b = line.rfind('\t');
    const int n = std::stoi(line.substr(0, a));
    std::istringstream es(line.substr(a + 1, b - a - 1));
    std::vector<Edge> edges;
    std::string tok;
    while (es >> tok) {
      auto dash = tok.find('-');
      edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    }
    Graph g = from_edge_list(n, edges);
    const std::string expected = line.substr(b + 1);
    EXPECT_EQ(to_graph6(g), expected) << "n=" << n;
    EXPECT_EQ(oracle::graph6(g), expected);
    EXPECT_EQ(parse_graph6(expected), g);
    ++count;
  }
  EXPECT_EQ(count, 50);
}

TEST(Graph6, RoundTripPropertySmall) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Graph g = oracle::random_graph(n, 0.5, rng);
    ASSERT_EQ(parse_graph6(to_graph6(g)), g);
    ASSERT_EQ(to_graph6(g), oracle::graph6(g));
  }
}

TEST(Canonical, CycleRelabeling) {
  Graph a = named::cycle(5);
  // 2-4-1-3-0 as a 5-cycle.
  Graph b = from_edge_list(5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(named::complete(4)), canonical_form(named::cycle(4)));
}

TEST(Canonical, PetersenPermutations) {
  std::mt19937_64 rng(3);
  Graph p = named::petersen();
  const CanonicalForm ref = canonical_form(p);
  for (int i = 0; i < 1000; ++i) {
    auto perm = oracle::random_permutation(10, rng);
    ASSERT_EQ(canonical_form(p.relabeled(perm)), ref);
  }
}

TEST(Canonical, CanonicalGraphIsIsomorphicRelabel) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 12), 0.4, rng);
    CanonicalLabeling lab = canonical_labeling(g);
    EXPECT_EQ(g.relabeled(lab.position), lab.graph);
    for (const auto& aut : lab.automorphisms) EXPECT_EQ(g.relabeled(aut), g);
  }
}

TEST(Canonical, DistinguishesAllGraphsOnFiveVertices) {
  // 34 isomorphism classes of graphs on five vertices.
  std::set<CanonicalForm> forms;
  for (const Graph& g : oracle::all_labeled_graphs(5)) forms.insert(canonical_form(g));
  EXPECT_EQ(forms.size(), 34u);
  std::set<CanonicalForm> six;
  for (const Graph& g : oracle::all_labeled_graphs(6)) six.insert(canonical_form(g));
  EXPECT_EQ(six.size(), 156u);
}

TEST(Canonical, RandomRelabelInvarianceLarger) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const int n = 8 + static_cast<int>(rng() % 25);
    Graph g = oracle::random_graph(n, (i % 4 + 1) * 0.2, rng);
    auto perm = oracle::random_permutation(n, rng);
    ASSERT_EQ(canonical_form(g), canonical_form(g.relabeled(perm)));
  }
  Graph k = named::complete(20);
  EXPECT_EQ(canonical_form(k), canonical_form(k.relabeled(oracle::random_permutation(20, rng))));
}

TEST(Canonical, ColorsRespected) {
  Graph p = named::path(3);
  std::vector<int> end_marked{1, 0, 0};
  std::vector<int> mid_marked{0, 1, 0};
  std::vector<int> other_end{0, 0, 1};
  EXPECT_EQ(canonical_form(p, end_marked), canonical_form(p, other_end));
  EXPECT_NE(canonical_form(p, end_marked), canonical_form(p, mid_marked));
}
