#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "mgq/classical_aut.hpp"
#include "oracle.hpp"

using namespace mgq;

namespace {

const char* const kFixtures[] = {"g1", "g1_undirected", "g2", "g2u", "g3", "g4", "g5", "g6", "asym", "path3", "edge1"};

std::set<oracle::EdgeMap> library_maps(const Graph& g, const AutomorphismGroup& grp) {
  std::set<oracle::EdgeMap> out;
  for (const auto& a : grp.elements) {
    auto fE = edge_permutation(g, a);
    oracle::EdgeMap m;
    for (int t = 0; t < g.num_edges(); ++t) m.push_back(g.eid(fE[t]));
    out.insert(m);
  }
  return out;
}

MultigraphAutomorphism vertex_swap_g2u(const Graph& g) {
  for (const auto& a : enumerate_automorphisms(g).elements)
    if (a.f_V == Perm{1, 0} && std::all_of(a.gammas.begin(), a.gammas.end(), [](const Perm& p) {
          return p == Perm{0, 1};
        }))
      return a;
  throw std::logic_error("no swap");
}

}  // namespace

TEST(VertexSymmetries, Examples) {
  EXPECT_EQ(enumerate_vertex_symmetries(fixture("g2u")).size(), 2u);
  EXPECT_EQ(enumerate_vertex_symmetries(fixture("g2")).size(), 1u);
  EXPECT_EQ(enumerate_vertex_symmetries(fixture("g6")).size(), 8u);
}

TEST(VertexSymmetries, MatchBruteForceCount) {
  for (auto name : kFixtures) {
    auto g = fixture(name);
    EXPECT_EQ(static_cast<long long>(enumerate_vertex_symmetries(g).size()), oracle::vertex_symmetry_count(g.raw()))
        << name;
  }
}

TEST(Automorphisms, Orders) {
  EXPECT_EQ(enumerate_automorphisms(fixture("g1")).order(), 24);
  EXPECT_EQ(enumerate_automorphisms(fixture("g2u")).order(), 4);
  EXPECT_EQ(enumerate_automorphisms(fixture("g2")).order(), 2);
  EXPECT_EQ(enumerate_automorphisms(fixture("g3")).order(), 48);
  EXPECT_EQ(enumerate_automorphisms(fixture("g4")).order(), 48);
  EXPECT_EQ(enumerate_automorphisms(fixture("g5")).order(), 32);
  EXPECT_EQ(enumerate_automorphisms(fixture("g6")).order(), 128);
  EXPECT_EQ(enumerate_automorphisms(fixture("g6"), Flavor::Both).order(), 16);
}

TEST(Automorphisms, EqualIndependentOracle) {
  for (auto name : kFixtures) {
    auto g = fixture(name);
    auto raw = oracle::automorphisms(g.raw());
    EXPECT_EQ(library_maps(g, enumerate_automorphisms(g)), oracle::edge_maps(g.raw(), raw)) << name;
  }
}

TEST(Automorphisms, EqualBuiltInBruteForce) {
  for (auto name : {"g1", "g2", "g2u", "g3", "asym", "path3"}) {
    auto g = fixture(name);
    EXPECT_EQ(library_maps(g, enumerate_automorphisms(g)), library_maps(g, brute_force_oracle(g))) << name;
  }
  EXPECT_THROW(brute_force_oracle(fixture("g6")), SizeGuardExceeded);
}

TEST(Automorphisms, SimpleGraphHasTrivialGammas) {
  Multigraph raw;
  raw.vertices = {"a", "b", "c"};
  raw.edges = {{"ab", "a", "b"}, {"ba", "b", "a"}, {"bc", "b", "c"}, {"cb", "c", "b"}};
  raw.inversion = std::vector<std::pair<std::string, std::string>>{{"ab", "ba"}, {"bc", "cb"}};
  Graph g(raw);
  auto grp = brute_force_oracle(g);
  EXPECT_EQ(grp.order(), 2);
  for (const auto& a : grp.elements)
    for (const auto& p : a.gammas) EXPECT_EQ(p, Perm{0});
}

TEST(Automorphisms, FlavorsMatchOracle) {
  for (auto name : kFixtures) {
    auto g = fixture(name);
    auto raw = oracle::automorphisms(g.raw());
    for (auto [flavor, pred] : {std::pair{Flavor::Source, &oracle::source_dependent},
                                std::pair{Flavor::Target, &oracle::target_dependent},
                                std::pair{Flavor::Both, &oracle::both_dependent}}) {
      std::vector<oracle::RawAut> kept;
      for (const auto& a : raw)
        if (pred(g.raw(), a)) kept.push_back(a);
      EXPECT_EQ(library_maps(g, enumerate_automorphisms(g, flavor)), oracle::edge_maps(g.raw(), kept))
          << name << " " << to_string(flavor);
    }
  }
}

TEST(Automorphisms, BothIsIntersection) {
  for (auto name : kFixtures) {
    auto g = fixture(name);
    auto s = library_maps(g, enumerate_automorphisms(g, Flavor::Source));
    auto t = library_maps(g, enumerate_automorphisms(g, Flavor::Target));
    std::set<oracle::EdgeMap> both;
    for (const auto& m : s)
      if (t.count(m)) both.insert(m);
    EXPECT_EQ(library_maps(g, enumerate_automorphisms(g, Flavor::Both)), both) << name;
  }
}

TEST(Automorphisms, AsymmetricFixtureSeparatesFlavors) {
  auto g = fixture("asym");
  EXPECT_EQ(enumerate_automorphisms(g).order(), 8);
  EXPECT_EQ(enumerate_automorphisms(g, Flavor::Source).order(), 8);
  EXPECT_EQ(enumerate_automorphisms(g, Flavor::Target).order(), 4);
}

TEST(GroupLaws, EveryFixture) {
  for (auto name : kFixtures) {
    auto g = fixture(name);
    for (auto f : {Flavor::All, Flavor::Source, Flavor::Target, Flavor::Both}) {
      std::string why;
      EXPECT_TRUE(check_group_laws(g, enumerate_automorphisms(g, f), &why)) << name << ": " << why;
    }
  }
}

TEST(Compose, InverseAndIdentity) {
  for (auto name : {"g2u", "g3", "g4", "asym"}) {
    auto g = fixture(name);
    auto id = identity_automorphism(g);
    for (const auto& a : enumerate_automorphisms(g).elements) {
      EXPECT_EQ(compose(g, a, invert(g, a)), id);
      EXPECT_EQ(compose(g, id, a), a);
      EXPECT_TRUE(is_automorphism(g, a));
    }
  }
}

TEST(Compose, MatchesEdgeMapComposition) {
  auto g = fixture("g4");
  auto grp = enumerate_automorphisms(g);
  for (size_t i = 0; i < grp.elements.size(); i += 5)
    for (size_t j = 0; j < grp.elements.size(); j += 7) {
      const auto& a = grp.elements[i];
      const auto& b = grp.elements[j];
      auto fa = edge_permutation(g, a), fb = edge_permutation(g, b);
      auto fc = edge_permutation(g, compose(g, a, b));
      for (int t = 0; t < g.num_edges(); ++t) EXPECT_EQ(fc[t], fa[fb[t]]);
    }
}

TEST(Compose, SwapSquaredOnG2u) {
  auto g = fixture("g2u");
  auto s = vertex_swap_g2u(g);
  EXPECT_EQ(compose(g, s, s), identity_automorphism(g));
  auto fE = edge_permutation(g, s);
  EXPECT_EQ(g.eid(fE[g.eindex("121")]), "211");
  EXPECT_EQ(g.eid(fE[g.eindex("122")]), "212");
}

TEST(Compose, RoundTripThroughEdgePermutation) {
  auto g = fixture("g6");
  for (const auto& a : enumerate_automorphisms(g).elements)
    EXPECT_EQ(from_edge_permutation(g, a.f_V, edge_permutation(g, a)), a);
}

TEST(OrderFormula, EveryFixture) {
  for (auto name : kFixtures) {
    auto g = fixture(name);
    EXPECT_EQ(enumerate_automorphisms(g).order(), order_formula(g)) << name;
  }
  for (auto name : {"g2", "asym", "path3", "edge1"}) {
    Graph u(underlying_undirected_multigraph(fixture(name)));
    EXPECT_EQ(enumerate_automorphisms(u).order(), order_formula(u)) << name;
  }
}

TEST(WeightLevels, VertexSymmetriesCommute) {
  for (auto name : kFixtures) {
    auto g = fixture(name);
    for (const auto& p : enumerate_vertex_symmetries(g)) EXPECT_TRUE(commutes_with_weight_levels(g, p)) << name;
  }
}

TEST(WeightLevels, NonSymmetryDetected) {
  Multigraph raw;
  raw.vertices = {"a", "b", "c"};
  raw.edges = {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "b", "c"}};
  Graph g(raw);
  EXPECT_FALSE(commutes_with_weight_levels(g, Perm{2, 1, 0}));
}
