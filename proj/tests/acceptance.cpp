// One line per acceptance criterion; exit status 1 when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mgq/abelianization.hpp"
#include "mgq/graph_cstar.hpp"
#include "mgq/io.hpp"
#include "oracle.hpp"

using namespace mgq;

namespace {

Graph fixture(const std::string& name) { return Graph(load_multigraph(std::string(MGQ_FIXTURE_DIR) + "/" + name + ".json")); }

long long order(const std::string& name, Flavor f = Flavor::All) { return enumerate_automorphisms(fixture(name), f).order(); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

MatchReport qbic_match(const Graph& g) {
  auto p = emit_presentation(g, Kind::QBic);
  return match_against_aut(p, g, classical_points(p, g), enumerate_automorphisms(g));
}

std::set<oracle::EdgeMap> maps(const Graph& g, const AutomorphismGroup& grp) {
  std::set<oracle::EdgeMap> out;
  for (const auto& a : grp.elements) {
    auto fE = edge_permutation(g, a);
    oracle::EdgeMap m;
    for (int t = 0; t < g.num_edges(); ++t) m.push_back(g.eid(fE[t]));
    out.insert(m);
  }
  return out;
}

MagicUnitaryRep classical_x(const Graph& g, const Perm& f) {
  MagicUnitaryRep x;
  for (int i = 0; i < g.num_vertices(); ++i)
    for (int j = 0; j < g.num_vertices(); ++j) x.assign[q_sym(g, i, j)] = Matrix::Constant(1, 1, f[j] == i ? 1.0 : 0.0);
  return x;
}

void criterion1(Outcome& o) {
  long long u = order("g2u"), d = order("g2");
  o.detail << "G2u order " << u << ", G2 order " << d;
  o.require(u == 4 && d == 2, "expected 4 and 2");
}

void criterion2(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  auto g = fixture("g1");
  auto m = qbic_match(g);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail << "G1 QBic points " << m.points << ", |Aut| " << m.group << ", " << secs << " s";
  o.require(m.points == 24 && m.ok, "24 points in bijection");
  o.require(secs < 1.0, "under one second");
}

void criterion3(Outcome& o) {
  auto m = qbic_match(fixture("g3"));
  o.detail << "G3 |Aut| " << m.group << ", QBic points " << m.points;
  o.require(m.group == 48 && m.points == 48 && m.ok, "48 and 48");
}

void criterion4(Outcome& o) {
  auto g = fixture("g4");
  auto m = qbic_match(g);
  auto oracle_maps = oracle::edge_maps(g.raw(), oracle::automorphisms(g.raw()));
  o.detail << "G4 |Aut| " << m.group << ", QBic points " << m.points << ", oracle " << oracle_maps.size();
  o.require(m.group == 48 && m.points == 48 && m.ok, "48 and 48");
  o.require(maps(g, enumerate_automorphisms(g)) == oracle_maps, "oracle agrees");
}

void criterion5(Outcome& o) {
  auto g = fixture("g5");
  auto n = order("g5");
  auto v = enumerate_vertex_symmetries(g).size();
  o.detail << "G5 |Aut| " << n << ", vertex part " << v;
  o.require(n == 32 && v == 8, "32 with vertex part 8");
}

void criterion6(Outcome& o) {
  auto g = fixture("g6");
  auto w = example5_witness(g, M_PI / 4);
  auto p = emit_presentation(g, Kind::QSTUndirected);
  auto pts = classical_points(p, g);
  auto m = match_against_aut(p, g, pts, enumerate_automorphisms(g, Flavor::Both));
  o.detail << "SBan residual " << w.sban_residual << ", QST residual " << w.qst_residual << ", commutator "
           << w.commutator << ", QST points " << pts.size();
  o.require(w.sban_residual <= 1e-9, "SBan residual");
  o.require(w.qst_residual <= 1e-9, "QST residual");
  o.require(std::abs(w.commutator - 0.5) <= 1e-9, "commutator 0.5");
  o.require(pts.size() == 16 && m.ok, "16 points");
}

void criterion7(Outcome& o) {
  double worst = 0;
  for (auto name : {"g1", "g3", "g4"}) {
    auto g = fixture(name);
    auto rep = build_wreath_rep(g, classical_x(g, enumerate_vertex_symmetries(g).back()),
                                default_pair_families(g, M_PI / 4));
    auto kind = g.undirected() ? Kind::QBicUndirected : Kind::QBic;
    auto v = verify_rep(rep, emit_presentation(g, kind));
    auto b = block_invariance_check(rep, g);
    worst = std::max(worst, v.max_residual);
    o.require(rep.dim == 2, std::string(name) + " dimension 2");
    o.require(v.ok && v.max_residual <= 1e-9, std::string(name) + " " + to_string(kind));
    o.require(b.ok, std::string(name) + " block invariance");
  }
  o.detail << "wreath reps on G1, G3, G4, max residual " << worst;
}

void criterion8(Outcome& o) {
  std::mt19937 rng(20240601);
  int agree = 0, undirected = 0;
  const int total = 50;
  for (int i = 0; i < total; ++i) {
    auto raw = oracle::random_multigraph(rng, 3, 5);
    Graph g(raw);
    undirected += g.undirected();
    auto grp = enumerate_automorphisms(g);
    bool same = maps(g, grp) == maps(g, brute_force_oracle(g));
    same = same && maps(g, grp) == oracle::edge_maps(raw, oracle::automorphisms(raw));
    auto m = qbic_match(g);
    if (same && m.ok) ++agree;
    else o.require(false, multigraph_to_json(raw));
  }
  o.detail << agree << "/" << total << " random multigraphs agree (" << undirected << " undirected)";
}

void criterion9(Outcome& o) {
  int checked = 0;
  for (auto name : {"g1", "g1_undirected", "g2", "g2u", "g3", "g4", "g5", "g6", "asym", "path3", "edge1"}) {
    auto g = fixture(name);
    std::vector<Graph> variants{g};
    if (!g.undirected()) variants.emplace_back(underlying_undirected_multigraph(g));
    for (const auto& v : variants) {
      ++checked;
      o.require(enumerate_automorphisms(v).order() == order_formula(v), name);
    }
  }
  o.detail << checked << " fixture variants";
}

void criterion10(Outcome& o) {
  double classical = 0, wreath = 0;
  for (auto name : {"g2", "path3"}) {
    auto g = fixture(name);
    auto ck = build_ck_family(g);
    o.require(verify_ck_family(ck, g).ok, std::string(name) + " family");
    for (const auto& a : enumerate_automorphisms(g).elements) {
      auto rep = rep_from_automorphism(g, a);
      auto c = verify_ck_coaction(ck, rep, g);
      auto v = verify_correspondence_covariance(g, rep);
      classical = std::max({classical, c.max_residual, v.max_residual});
    }
    if (std::string(name) == "path3") {
      auto rep = build_wreath_rep(g, classical_x(g, enumerate_vertex_symmetries(g).back()),
                                  default_pair_families(g, M_PI / 4));
      auto c = verify_ck_coaction(ck, rep, g);
      auto v = verify_correspondence_covariance(g, rep);
      wreath = std::max({wreath, c.max_residual, v.max_residual});
    }
  }
  o.detail << "classical residual " << classical << ", wreath residual " << wreath;
  o.require(classical == 0.0, "classical exact");
  o.require(wreath <= 1e-9, "wreath within 1e-9");
}

void criterion11(Outcome& o) {
  int perms = 0;
  for (auto name : {"g1", "g1_undirected", "g2", "g2u", "g3", "g4", "g5", "g6", "asym", "path3", "edge1"}) {
    auto g = fixture(name);
    for (const auto& p : enumerate_vertex_symmetries(g)) {
      ++perms;
      o.require(commutes_with_weight_levels(g, p), name);
    }
  }
  std::mt19937 rng(11);
  int same = 0;
  for (int i = 0; i < 20; ++i) {
    int n = std::uniform_int_distribution<int>(4, 6)(rng);
    auto edges = oracle::random_simple_edges(rng, n);
    Graph g(oracle::simple_undirected(n, edges));
    Graph c(oracle::simple_undirected(n, oracle::complement_edges(n, edges)));
    auto pg = classical_points(emit_presentation(g, Kind::SBan), g);
    auto pc = classical_points(emit_presentation(c, Kind::SBan), c);
    if (pg == pc) ++same;
    else o.require(false, "complement differs for graph " + std::to_string(i));
  }
  o.detail << perms << " vertex symmetries commute with every level; " << same << "/20 complements agree";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"automorphism orders of G2u and G2", criterion1},
      {"G1 classical points", criterion2},
      {"G3 automorphisms and classical points", criterion3},
      {"G4 automorphisms and classical points", criterion4},
      {"G5 automorphisms and vertex part", criterion5},
      {"G6 noncommutativity witness", criterion6},
      {"wreath product realization", criterion7},
      {"random oracle agreement", criterion8},
      {"order formula", criterion9},
      {"Cuntz-Krieger coaction", criterion10},
      {"weight levels and complements", criterion11},
  };
  int failed = 0;
  for (size_t i = 0; i < std::size(criteria); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " exception: " << e.what();
    }
    failed += !o.ok;
    std::printf("[%s] %zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.str().c_str());
  }
  std::printf("%zu/%zu criteria pass\n", std::size(criteria) - failed, std::size(criteria));
  return failed ? 1 : 0;
}
