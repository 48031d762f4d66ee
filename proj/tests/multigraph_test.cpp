#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace mgq;

namespace {

Multigraph pair_graph() {
  Multigraph g;
  g.vertices = {"a", "b"};
  g.edges = {{"e1", "a", "b"}, {"e2", "b", "a"}};
  g.inversion = std::vector<std::pair<std::string, std::string>>{{"e1", "e2"}};
  return g;
}

bool has_violation(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Validate, FourLoopsDirected) {
  auto r = validate(raw_fixture("g1"));
  EXPECT_TRUE(r.valid);
  EXPECT_FALSE(r.undirected);
}

TEST(Validate, MinimalInvolution) {
  auto r = validate(pair_graph());
  EXPECT_TRUE(r.valid);
  EXPECT_TRUE(r.undirected);
}

TEST(Validate, IsolatedVertex) {
  auto g = pair_graph();
  g.vertices.push_back("c");
  auto r = validate(g);
  EXPECT_FALSE(r.valid);
  EXPECT_TRUE(has_violation(r, "isolated vertex c"));
}

TEST(Validate, BrokenInversions) {
  auto g = pair_graph();
  g.inversion = std::vector<std::pair<std::string, std::string>>{};
  EXPECT_TRUE(has_violation(validate(g), "no inversion partner"));

  g = pair_graph();
  g.edges.push_back({"e3", "a", "b"});
  g.inversion->emplace_back("e3", "e3");
  EXPECT_TRUE(has_violation(validate(g), "fixes non-loop"));

  g = pair_graph();
  g.edges[1].id = "e1";
  EXPECT_TRUE(has_violation(validate(g), "duplicate edge id"));
  EXPECT_THROW(Graph{g}, InvalidGraph);
}

TEST(Validate, AllFixturesValid) {
  for (auto name : {"g1", "g1_undirected", "g2", "g2u", "g3", "g4", "g5", "g6", "asym", "path3", "edge1"})
    EXPECT_TRUE(validate(raw_fixture(name)).valid) << name;
}

TEST(Adjacency, Examples) {
  EXPECT_EQ(adjacency_matrix(fixture("g1")), (IntMatrix{{4}}));
  EXPECT_EQ(adjacency_matrix(fixture("g3")), (IntMatrix{{0, 4}, {4, 0}}));
  auto w = adjacency_matrix(fixture("g6"));
  long long total = 0;
  for (const auto& row : w)
    for (auto x : row) total += x;
  EXPECT_EQ(total, fixture("g6").num_edges());
}

TEST(WeightedGraph, G3) {
  auto w = underlying_weighted_graph(fixture("g3"));
  ASSERT_EQ(w.arcs.size(), 2u);
  EXPECT_EQ(w.arcs[0], std::make_pair(std::string("a"), std::string("b")));
  EXPECT_EQ(w.arcs[1], std::make_pair(std::string("b"), std::string("a")));
  EXPECT_EQ(w.weights, (std::vector<long long>{4, 4}));
}

TEST(WeightedGraph, SimpleInputHasUnitWeights) {
  Graph g(pair_graph());
  auto w = underlying_weighted_graph(g);
  EXPECT_EQ(w.arcs.size(), 2u);
  for (auto x : w.weights) EXPECT_EQ(x, 1);
}

TEST(WeightedGraph, G6IsWeightedFourCycle) {
  auto w = underlying_weighted_graph(fixture("g6"));
  EXPECT_EQ(w.arcs.size(), 8u);
  for (auto x : w.weights) EXPECT_EQ(x, 2);
  std::map<std::string, int> degree;
  for (const auto& [s, t] : w.arcs) ++degree[s];
  for (const auto& [v, d] : degree) EXPECT_EQ(d, 2) << v;
}

TEST(UniformDecompose, SingleBundle) {
  auto comps = uniform_decompose(fixture("g1"));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].m, 4);
  EXPECT_EQ(comps[0].edges.size(), 4u);
}

TEST(UniformDecompose, MixedSizes) {
  Multigraph raw;
  raw.vertices = {"a", "b", "c"};
  raw.edges = {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "b", "c"}};
  Graph g(raw);
  auto comps = uniform_decompose(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].m, 1);
  EXPECT_EQ(comps[1].m, 2);
  std::set<std::string> all;
  for (const auto& c : comps) all.insert(c.edges.begin(), c.edges.end());
  EXPECT_EQ(all.size(), 3u);
  EXPECT_EQ(comps[0].sources, std::vector<std::string>{"a"});
  EXPECT_EQ(comps[1].targets, std::vector<std::string>{"c"});
}

TEST(UniformDecompose, DoubledTriangle) {
  auto g = fixture("g4");
  auto comps = uniform_decompose(g);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].m, 2);
  EXPECT_EQ(comps[0].vertices.size(), 3u);
  EXPECT_EQ(static_cast<int>(comps[0].edges.size()), g.num_edges());
}

TEST(CanonicalLabels, Loops) {
  auto g = fixture("g1");
  auto rep = canonical_edge_representation(g);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(rep.at("l" + std::to_string(i + 1)), (EdgeLabel{"a", "a", i + 1}));
}

TEST(CanonicalLabels, UndirectedPair) {
  auto rep = canonical_edge_representation(Graph(pair_graph()));
  EXPECT_EQ(rep.at("e1"), (EdgeLabel{"a", "b", 1}));
  EXPECT_EQ(rep.at("e2"), (EdgeLabel{"b", "a", 1}));
}

TEST(CanonicalLabels, InversionKeepsIndex) {
  for (auto name : {"g3", "g4", "g5", "g6", "g2u"}) {
    auto g = fixture(name);
    auto rep = canonical_edge_representation(g);
    auto oracle_labels = oracle::local_labels(g.raw());
    for (int e = 0; e < g.num_edges(); ++e) {
      EXPECT_EQ(rep.at(g.eid(e)).r, rep.at(g.eid(g.inv(e))).r) << name;
      EXPECT_EQ(rep.at(g.eid(e)).r, oracle_labels.at(g.eid(e))) << name;
    }
  }
}

TEST(CanonicalLabels, G3IndicesOneToFour) {
  auto rep = canonical_edge_representation(fixture("g3"));
  std::map<std::pair<std::string, std::string>, std::set<int>> seen;
  for (const auto& [id, l] : rep) seen[{l.src, l.tgt}].insert(l.r);
  EXPECT_EQ(seen.size(), 2u);
  for (const auto& [kl, rs] : seen) EXPECT_EQ(rs, (std::set<int>{1, 2, 3, 4}));
}

TEST(UnderlyingUndirected, SingleEdge) {
  auto u = underlying_undirected_multigraph(fixture("edge1"));
  EXPECT_EQ(u.edges.size(), 2u);
  ASSERT_TRUE(u.inversion);
  EXPECT_EQ(u.inversion->size(), 1u);
  EXPECT_TRUE(validate(u).valid);
}

TEST(UnderlyingUndirected, G2GivesG2u) {
  Graph u(underlying_undirected_multigraph(fixture("g2")));
  EXPECT_TRUE(u.undirected());
  EXPECT_EQ(adjacency_matrix(u), adjacency_matrix(fixture("g2u")));
  EXPECT_EQ(enumerate_automorphisms(u).order(), 4);
}

TEST(UnderlyingUndirected, LoopsUnchanged) {
  auto u = underlying_undirected_multigraph(fixture("g1"));
  EXPECT_EQ(u.edges.size(), 4u);
  EXPECT_TRUE(validate(u).valid);
}

TEST(EdgeClasses, Counts) {
  EXPECT_EQ(undirected_edge_classes(fixture("g2u")).size(), 2u);
  EXPECT_EQ(undirected_edge_classes(fixture("g3")).size(), 4u);
  Multigraph loop;
  loop.vertices = {"a"};
  loop.edges = {{"l", "a", "a"}};
  loop.inversion.emplace();
  auto cls = undirected_edge_classes(Graph(loop));
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].size(), 1u);
}

TEST(PathClasses, Examples) {
  auto g6 = fixture("g6");
  auto c6 = path_classes(uniform_decompose(g6)[0], g6);
  ASSERT_EQ(c6.size(), 1u);
  EXPECT_EQ(c6[0].size(), 4u);

  auto g5 = fixture("g5");
  auto c5 = path_classes(uniform_decompose(g5)[0], g5);
  EXPECT_EQ(c5, (std::vector<std::vector<std::string>>{{"a", "b"}, {"c", "d"}}));

  Multigraph loop;
  loop.vertices = {"a"};
  loop.edges = {{"l1", "a", "a"}, {"l2", "a", "a"}};
  Graph gl(loop);
  EXPECT_EQ(path_classes(uniform_decompose(gl)[0], gl), (std::vector<std::vector<std::string>>{{"a"}}));
}

TEST(PathClasses, AgreeWithBreadthFirstSearch) {
  std::mt19937 rng(7);
  std::vector<Multigraph> graphs;
  for (auto name : {"g1", "g2", "g2u", "g3", "g4", "g5", "g6", "asym", "path3"}) graphs.push_back(raw_fixture(name));
  for (int i = 0; i < 40; ++i) graphs.push_back(oracle::random_multigraph(rng, 4, 8));
  for (const auto& raw : graphs) {
    Graph g(raw);
    for (const auto& c : uniform_decompose(g)) {
      std::set<std::set<std::string>> ours, want;
      for (const auto& cls : path_classes(c, g)) ours.insert({cls.begin(), cls.end()});
      for (const auto& cls : oracle::path_classes_bfs(raw, c.m)) want.insert(cls);
      EXPECT_EQ(ours, want) << multigraph_to_json(raw) << " m=" << c.m;
    }
  }
}
