#include "mgq/abelianization.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace mgq {

namespace {

// lhs - rhs over Boolean commuting variables with integer coefficients.
struct CompiledTerm {
  long long re = 0, im = 0;
  std::vector<int> gens;
};
using CompiledRelation = std::vector<CompiledTerm>;

long long lcm_den(const Relation& r) {
  long long l = 1;
  for (const auto* p : {&r.lhs, &r.rhs})
    for (const auto& t : p->terms()) {
      l = std::lcm(l, t.c.re.den());
      l = std::lcm(l, t.c.im.den());
    }
  return l;
}

CompiledRelation compile(const Relation& r, const std::map<Symbol, int>& index) {
  long long scale = lcm_den(r);
  std::map<std::vector<int>, std::pair<long long, long long>> acc;
  auto add = [&](const Poly& p, int sign) {
    for (const auto& t : p.terms()) {
      std::vector<int> gens;
      for (const auto& l : t.mono) {
        auto it = index.find(l.sym);
        if (it == index.end()) throw MissingSymbol(l.sym);
        gens.push_back(it->second);
      }
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      auto& [re, im] = acc[gens];
      re += sign * t.c.re.num() * (scale / t.c.re.den());
      im += sign * t.c.im.num() * (scale / t.c.im.den());
    }
  };
  add(r.lhs, 1);
  add(r.rhs, -1);
  CompiledRelation out;
  for (auto& [gens, c] : acc)
    if (c.first != 0 || c.second != 0) out.push_back({c.first, c.second, gens});
  return out;
}

bool holds(const CompiledRelation& r, const std::vector<char>& a) {
  long long re = 0, im = 0;
  for (const auto& t : r) {
    bool on = true;
    for (int g : t.gens)
      if (!a[g]) {
        on = false;
        break;
      }
    if (on) {
      re += t.re;
      im += t.im;
    }
  }
  return re == 0 && im == 0;
}

double factorial(int m) {
  double f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// Steps a list of permutations through their product space.
bool advance(std::vector<Perm>& perms) {
  for (int i = static_cast<int>(perms.size()) - 1; i >= 0; --i)
    if (std::next_permutation(perms[i].begin(), perms[i].end())) return true;
  return false;
}

Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// A square Boolean family filled from a permutation: F[row][col] = [pi(col) = row].
struct Family {
  int m;
  std::vector<std::vector<int>> idx;
};

bool is_vertex_family(const std::string& f) { return f == "q" || f == "x"; }

void check_guard(double count, long long limit) {
  if (count > static_cast<double>(limit))
    throw SizeGuardExceeded("classical point search refuses " + std::to_string(static_cast<long long>(count)) +
                            " candidates (limit " + std::to_string(limit) + ")");
}

}  // namespace

long long candidate_limit() {
  if (const char* env = std::getenv("MGQ_MAX_CANDIDATES")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (const std::logic_error&) {
    }
  }
  return 10'000'000;
}

double candidate_count(const Presentation& p, const Graph& g) {
  const int n = g.num_vertices();
  if (p.kind == Kind::SBan || p.kind == Kind::SBic) return factorial(n);
  double vs = static_cast<double>(enumerate_vertex_symmetries(g).size());
  if (uses_edge_generators(p.kind)) {
    for (auto [k, l] : g.support()) vs *= factorial(static_cast<int>(g.w(k, l)));
    return vs;
  }
  std::map<std::vector<std::string>, int> fams;
  for (const auto& s : p.generators) {
    if (s.family == "gamma" || s.family == "nu") fams[{s.family, s.idx[0], s.idx[1]}] = std::stoi(s.idx[0]);
    if (s.family == "P") fams[{s.family, s.idx[0]}] = std::max(fams[{s.family, s.idx[0]}], std::stoi(s.idx[1]));
  }
  for (const auto& [key, m] : fams) vs *= factorial(m);
  return vs;
}

std::vector<ClassicalPoint> classical_points(const Presentation& p, const Graph& g, long long max_candidates) {
  if (max_candidates < 0) max_candidates = candidate_limit();
  check_guard(candidate_count(p, g), max_candidates);

  std::map<Symbol, int> index;
  for (const auto& s : p.generators) index.emplace(s, static_cast<int>(index.size()));
  std::vector<CompiledRelation> rels;
  for (const auto& r : p.relations) {
    auto c = compile(r, index);
    if (!c.empty()) rels.push_back(std::move(c));
  }
  std::stable_sort(rels.begin(), rels.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

  const int n = g.num_vertices();
  std::vector<char> a(index.size(), 0);
  std::set<ClassicalPoint> found;
  auto accept = [&] {
    for (const auto& r : rels)
      if (!holds(r, a)) return;
    ClassicalPoint pt;
    for (const auto& [s, i] : index) pt.assignment.emplace(s, a[i]);
    found.insert(std::move(pt));
  };
  auto set_vertex = [&](const Perm& f) {
    for (const auto& [s, i] : index)
      if (is_vertex_family(s.family)) a[i] = f[g.vindex(s.idx[1])] == g.vindex(s.idx[0]);
  };

  if (p.kind == Kind::SBan || p.kind == Kind::SBic) {
    for (const auto& f : all_perms(n)) {
      set_vertex(f);
      accept();
    }
  } else if (uses_edge_generators(p.kind)) {
    const auto& sup = g.support();
    for (const auto& f : enumerate_vertex_symmetries(g)) {
      std::vector<Perm> perms;
      for (auto [k, l] : sup) perms.push_back(identity(static_cast<int>(g.w(k, l))));
      do {
        std::fill(a.begin(), a.end(), 0);
        for (size_t b = 0; b < sup.size(); ++b) {
          auto [k, l] = sup[b];
          for (size_t r = 0; r < perms[b].size(); ++r) {
            int tau = g.edge_at(k, l, static_cast<int>(r));
            int sigma = g.edge_at(f[k], f[l], perms[b][r]);
            a[index.at(u_sym(g, sigma, tau))] = 1;
          }
        }
        accept();
      } while (advance(perms));
    }
  } else {
    std::map<std::vector<std::string>, Family> fams;
    for (const auto& [s, i] : index) {
      std::vector<std::string> key;
      int row, col;
      if (s.family == "gamma" || s.family == "nu") {
        key = {s.family, s.idx[0], s.idx[1]};
        row = std::stoi(s.idx[2]) - 1;
        col = std::stoi(s.idx[3]) - 1;
      } else if (s.family == "P") {
        key = {s.family, s.idx[0]};
        row = std::stoi(s.idx[1]) - 1;
        col = std::stoi(s.idx[2]) - 1;
      } else {
        continue;
      }
      auto& fam = fams[key];
      int need = std::max(row, col) + 1;
      if (static_cast<int>(fam.idx.size()) < need) {
        fam.idx.resize(need);
        for (auto& r : fam.idx) r.resize(need, -1);
      }
      fam.idx[row][col] = i;
      fam.m = static_cast<int>(fam.idx.size());
    }
    std::vector<Family> list;
    for (auto& [key, fam] : fams) list.push_back(fam);
    for (const auto& f : enumerate_vertex_symmetries(g)) {
      std::vector<Perm> perms;
      for (const auto& fam : list) perms.push_back(identity(fam.m));
      set_vertex(f);
      do {
        for (size_t b = 0; b < list.size(); ++b)
          for (int row = 0; row < list[b].m; ++row)
            for (int col = 0; col < list[b].m; ++col)
              if (list[b].idx[row][col] >= 0) a[list[b].idx[row][col]] = perms[b][col] == row;
        accept();
      } while (advance(perms));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<int>> point_edge_matrix(const Presentation& p, const Graph& g, const ClassicalPoint& pt) {
  const int ne = g.num_edges();
  std::vector<std::vector<int>> M(ne, std::vector<int>(ne, 0));
  if (uses_edge_generators(p.kind)) {
    for (int s = 0; s < ne; ++s)
      for (int t = 0; t < ne; ++t) M[s][t] = pt.assignment.at(u_sym(g, s, t));
    return M;
  }
  if (p.coaction.empty()) return {};
  for (const auto& rel : p.coaction) {
    const auto& lhs = rel.lhs.terms().at(0).mono.at(0).sym;
    long long v = 0;
    for (const auto& t : rel.rhs.terms()) {
      bool on = true;
      for (const auto& l : t.mono) on = on && pt.assignment.at(l.sym);
      if (on) v += t.c.re.num() / t.c.re.den();
    }
    M[g.eindex(lhs.idx[0])][g.eindex(lhs.idx[1])] = static_cast<int>(v);
  }
  return M;
}

namespace {

// Column tau holds the single 1 in row f_E(tau); empty when M is not a
// permutation matrix.
Perm edge_perm_of(const std::vector<std::vector<int>>& M) {
  const int ne = static_cast<int>(M.size());
  Perm fE(ne, -1);
  std::vector<int> row_hits(ne, 0);
  for (int t = 0; t < ne; ++t)
    for (int s = 0; s < ne; ++s) {
      if (M[s][t] == 0) continue;
      if (M[s][t] != 1 || fE[t] != -1) return {};
      fE[t] = s;
      ++row_hits[s];
    }
  for (int t = 0; t < ne; ++t)
    if (fE[t] < 0 || row_hits[t] != 1) return {};
  return fE;
}

std::string perm_text(const Perm& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

MatchReport compare(std::vector<Perm> lhs, std::vector<Perm> rhs, const std::string& what) {
  MatchReport r;
  r.points = static_cast<long long>(lhs.size());
  r.group = static_cast<long long>(rhs.size());
  std::set<Perm> ls(lhs.begin(), lhs.end()), rs(rhs.begin(), rhs.end());
  if (ls.size() != lhs.size()) {
    r.message = "two points give the same " + what;
    return r;
  }
  for (const auto& p : ls)
    if (!rs.count(p)) {
      r.message = "point with " + what + " " + perm_text(p) + " has no matching automorphism";
      return r;
    }
  for (const auto& p : rs)
    if (!ls.count(p)) {
      r.message = "automorphism with " + what + " " + perm_text(p) + " has no matching point";
      return r;
    }
  r.ok = true;
  r.message = "bijection of " + std::to_string(r.points) + " elements";
  return r;
}

}  // namespace

MatchReport match_against_aut(const Presentation& p, const Graph& g, const std::vector<ClassicalPoint>& points,
                              const AutomorphismGroup& group) {
  std::vector<Perm> lhs, rhs;
  for (size_t i = 0; i < points.size(); ++i) {
    auto M = point_edge_matrix(p, g, points[i]);
    Perm fE = M.empty() ? Perm{} : edge_perm_of(M);
    if (fE.empty()) {
      MatchReport r;
      r.points = static_cast<long long>(points.size());
      r.group = group.order();
      r.message = "point " + std::to_string(i) + " does not give an edge permutation";
      return r;
    }
    lhs.push_back(std::move(fE));
  }
  for (const auto& a : group.elements) rhs.push_back(edge_permutation(g, a));
  return compare(std::move(lhs), std::move(rhs), "edge map");
}

MatchReport match_against_vertex_perms(const Graph& g, const std::vector<ClassicalPoint>& points,
                                       const std::vector<Perm>& perms) {
  const int n = g.num_vertices();
  std::vector<Perm> lhs;
  for (const auto& pt : points) {
    Perm f(n, -1);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (pt.assignment.at(q_sym(g, i, j))) f[j] = i;
    lhs.push_back(std::move(f));
  }
  return compare(std::move(lhs), perms, "vertex map");
}

std::vector<Perm> adjacency_symmetries(const Graph& g) {
  const int n = g.num_vertices();
  check_guard(factorial(n), candidate_limit());
  std::vector<Perm> out;
  for (const auto& f : all_perms(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) ok = (g.w(i, j) != 0) == (g.w(f[i], f[j]) != 0);
    if (ok) out.push_back(f);
  }
  return out;
}

std::string point_text(const ClassicalPoint& pt) {
  std::string s;
  for (const auto& [sym, v] : pt.assignment)
    if (v) s += (s.empty() ? "" : " ") + symbol_text(sym);
  return s;
}

}  // namespace mgq
