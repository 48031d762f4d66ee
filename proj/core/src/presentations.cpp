#include "mgq/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "json_detail.hpp"

namespace mgq {

namespace {

struct Builder {
  Presentation p;
  std::map<std::pair<Poly, Poly>, size_t> seen;

  void gen(const Symbol& s) { p.generators.push_back(s); }

  void rel(Poly lhs, Poly rhs, const std::string& note) {
    auto key = std::make_pair(lhs, rhs);
    auto it = seen.find(key);
    if (it != seen.end()) {
      auto& notes = p.relations[it->second].notes;
      if (std::find(notes.begin(), notes.end(), note) == notes.end()) notes.push_back(note);
      return;
    }
    seen.emplace(key, p.relations.size());
    p.relations.push_back({std::move(lhs), std::move(rhs), {note}});
  }

  // x = x* = x^2 and unit row and column sums for a square family.
  void quantum_permutation(const std::vector<std::vector<Symbol>>& F, const std::string& name) {
    const size_t n = F.size();
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        rel(Poly::gen(F[a][b]), Poly::gen(F[a][b], true), name + ": self-adjoint entry");
        rel(Poly::gen(F[a][b]) * Poly::gen(F[a][b]), Poly::gen(F[a][b]), name + ": idempotent entry");
      }
    for (size_t a = 0; a < n; ++a) {
      Poly row, col;
      for (size_t b = 0; b < n; ++b) {
        row += Poly::gen(F[a][b]);
        col += Poly::gen(F[b][a]);
      }
      rel(row, Poly::one(), name + ": row sum");
      rel(col, Poly::one(), name + ": column sum");
    }
  }

  void commute(const Symbol& a, const Symbol& b, const std::string& note) {
    if (a == b) return;
    const Symbol& lo = std::min(a, b);
    const Symbol& hi = std::max(a, b);
    rel(Poly::gen(lo) * Poly::gen(hi), Poly::gen(hi) * Poly::gen(lo), note);
  }
};

Poly weighted_sum(const std::vector<std::pair<long long, Symbol>>& terms) {
  Poly p;
  for (const auto& [c, s] : terms)
    if (c != 0) p += Coeff(Rational(c)) * Poly::gen(s);
  return p;
}

// QW = WQ entrywise for a matrix family over the vertices.
void commute_with_matrix(Builder& b, const Graph& g, const IntMatrix& W,
                         Symbol (*sym)(const Graph&, int, int), const std::string& note) {
  const int n = g.num_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<std::pair<long long, Symbol>> lhs, rhs;
      for (int k = 0; k < n; ++k) {
        lhs.emplace_back(W[k][j], sym(g, i, k));
        rhs.emplace_back(W[i][k], sym(g, k, j));
      }
      Poly L = weighted_sum(lhs), R = weighted_sum(rhs);
      if (L.empty() && R.empty()) continue;
      b.rel(L, R, note);
    }
}

std::vector<std::vector<Symbol>> vertex_family(const Graph& g, Symbol (*sym)(const Graph&, int, int)) {
  const int n = g.num_vertices();
  std::vector<std::vector<Symbol>> F(n, std::vector<Symbol>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) F[i][j] = sym(g, i, j);
  return F;
}

IntMatrix support_matrix(const Graph& g) {
  IntMatrix A = g.W();
  for (auto& row : A)
    for (auto& x : row) x = x ? 1 : 0;
  return A;
}

Poly sum_u(const Graph& g, int sigma, const std::vector<int>& taus) {
  Poly p;
  for (int t : taus) p += Poly::gen(u_sym(g, sigma, t));
  return p;
}

std::vector<int> all_edges(const Graph& g) {
  std::vector<int> e(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) e[i] = i;
  return e;
}

void emit_edge_generators(Builder& b, const Graph& g) {
  const int ne = g.num_edges();
  for (int s = 0; s < ne; ++s)
    for (int t = 0; t < ne; ++t) b.gen(u_sym(g, s, t));
}

// Mixed vanishing for pure sources and pure targets, shared by QBan and QBic.
void emit_mixed_vanishing(Builder& b, const Graph& g, const std::string& note) {
  const int n = g.num_vertices();
  for (int i = 0; i < n; ++i) {
    bool pure_src = g.is_source(i) && !g.is_target(i);
    bool pure_tgt = g.is_target(i) && !g.is_source(i);
    if (!pure_src && !pure_tgt) continue;
    for (int k = 0; k < n; ++k) {
      if (!(g.is_source(k) && g.is_target(k))) continue;
      const auto& sig = pure_src ? g.out_edges(i) : g.in_edges(i);
      const auto& tau = pure_src ? g.out_edges(k) : g.in_edges(k);
      for (int s : sig)
        for (int t : tau) b.rel(Poly::gen(u_sym(g, s, t)), Poly(), note);
    }
  }
}

void emit_inversion_compat(Builder& b, const Graph& g) {
  const int ne = g.num_edges();
  for (int s = 0; s < ne; ++s)
    for (int t = 0; t < ne; ++t) {
      int sb = g.inv(s), tb = g.inv(t);
      if (std::make_pair(s, t) > std::make_pair(sb, tb)) continue;
      b.rel(Poly::gen(u_sym(g, s, t)), Poly::gen(u_sym(g, sb, tb), true), "inversion compatibility");
    }
}

void emit_banica(Builder& b, const Graph& g) {
  const int ne = g.num_edges();
  const int n = g.num_vertices();
  auto E = all_edges(g);
  for (int s1 = 0; s1 < ne; ++s1)
    for (int s2 = 0; s2 < ne; ++s2) {
      Poly a, c, d, e;
      for (int t = 0; t < ne; ++t) {
        a += Poly::gen(u_sym(g, s1, t)) * Poly::gen(u_sym(g, s2, t), true);
        c += Poly::gen(u_sym(g, t, s1), true) * Poly::gen(u_sym(g, t, s2));
        d += Poly::gen(u_sym(g, s1, t), true) * Poly::gen(u_sym(g, s2, t));
        e += Poly::gen(u_sym(g, t, s1)) * Poly::gen(u_sym(g, t, s2), true);
      }
      Poly rhs = s1 == s2 ? Poly::one() : Poly();
      b.rel(a, rhs, "unitarity of U");
      b.rel(c, rhs, "unitarity of U");
      b.rel(d, rhs, "unitarity of conj(U)");
      b.rel(e, rhs, "unitarity of conj(U)");
    }
  for (int s = 0; s < ne; ++s) b.rel(sum_u(g, s, E), Poly::one(), "row sum");

  auto block = [&](int s1, int s2, const std::vector<int>& taus, bool target) {
    Poly p;
    for (int t : taus)
      p += target ? Poly::gen(u_sym(g, s1, t), true) * Poly::gen(u_sym(g, s2, t))
                  : Poly::gen(u_sym(g, s1, t)) * Poly::gen(u_sym(g, s2, t), true);
    return p;
  };
  for (int k = 0; k < n; ++k) {
    if (g.is_source(k)) {
      const auto& Ek = g.out_edges(k);
      for (int s1 = 0; s1 < ne; ++s1)
        for (int s2 = 0; s2 < ne; ++s2) {
          if (s1 != s2) b.rel(block(s1, s2, Ek, false), Poly(), "source block orthogonality");
          if (s1 < s2 && g.src(s1) == g.src(s2))
            b.rel(block(s1, s1, Ek, false), block(s2, s2, Ek, false), "source block balance");
        }
    }
    if (g.is_target(k)) {
      const auto& Ek = g.in_edges(k);
      for (int s1 = 0; s1 < ne; ++s1)
        for (int s2 = 0; s2 < ne; ++s2) {
          if (s1 != s2) b.rel(block(s1, s2, Ek, true), Poly(), "target block orthogonality");
          if (s1 < s2 && g.tgt(s1) == g.tgt(s2))
            b.rel(block(s1, s1, Ek, true), block(s2, s2, Ek, true), "target block balance");
        }
    }
  }
  emit_mixed_vanishing(b, g, "pure source and pure target vanishing");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!(g.is_source(i) && g.is_target(i) && g.is_source(k) && g.is_target(k))) continue;
      for (int s1 : g.out_edges(i))
        for (int s2 : g.in_edges(i))
          b.rel(block(s1, s1, g.out_edges(k), false), block(s2, s2, g.in_edges(k), true),
                "source and target agreement");
    }
}

void emit_bichon(Builder& b, const Graph& g) {
  const int ne = g.num_edges();
  const int n = g.num_vertices();
  std::vector<std::vector<Symbol>> U(ne, std::vector<Symbol>(ne));
  for (int s = 0; s < ne; ++s)
    for (int t = 0; t < ne; ++t) U[s][t] = u_sym(g, s, t);
  b.quantum_permutation(U, "edge quantum permutation");
  for (int k = 0; k < n; ++k) {
    for (int s1 = 0; s1 < ne; ++s1)
      for (int s2 = s1 + 1; s2 < ne; ++s2) {
        if (g.is_source(k) && g.src(s1) == g.src(s2))
          b.rel(sum_u(g, s1, g.out_edges(k)), sum_u(g, s2, g.out_edges(k)), "source block balance");
        if (g.is_target(k) && g.tgt(s1) == g.tgt(s2))
          b.rel(sum_u(g, s1, g.in_edges(k)), sum_u(g, s2, g.in_edges(k)), "target block balance");
      }
  }
  emit_mixed_vanishing(b, g, "pure source and pure target vanishing");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!(g.is_source(i) && g.is_target(i) && g.is_source(k) && g.is_target(k))) continue;
      for (int s1 : g.out_edges(i))
        for (int s2 : g.in_edges(i))
          b.rel(sum_u(g, s1, g.out_edges(k)), sum_u(g, s2, g.in_edges(k)), "source and target agreement");
    }
}

void emit_restricted_orthogonality(Builder& b, const Graph& g) {
  const int ne = g.num_edges();
  for (int s1 = 0; s1 < ne; ++s1)
    for (int s2 = 0; s2 < ne; ++s2) {
      if (s1 == s2 || g.src(s1) != g.src(s2) || g.tgt(s1) != g.tgt(s2)) continue;
      for (int t = 0; t < ne; ++t) {
        b.rel(Poly::gen(u_sym(g, s1, t)) * Poly::gen(u_sym(g, s2, t), true), Poly(),
              "parallel edge orthogonality (distinct images only)");
        b.rel(Poly::gen(u_sym(g, s1, t), true) * Poly::gen(u_sym(g, s2, t)), Poly(),
              "parallel edge orthogonality (distinct images only)");
      }
    }
}

void edge_coproduct(Presentation& p, const Graph& g) {
  const int ne = g.num_edges();
  for (int s = 0; s < ne; ++s)
    for (int t = 0; t < ne; ++t) {
      std::vector<CoproductTerm> terms;
      for (int m = 0; m < ne; ++m)
        terms.push_back({Coeff(1), {Letter{u_sym(g, s, m)}}, {Letter{u_sym(g, m, t)}}});
      p.coproduct.emplace_back(u_sym(g, s, t), std::move(terms));
    }
}

void vertex_coproduct(Presentation& p, const Graph& g, Symbol (*sym)(const Graph&, int, int)) {
  const int n = g.num_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<CoproductTerm> terms;
      for (int k = 0; k < n; ++k) terms.push_back({Coeff(1), {Letter{sym(g, i, k)}}, {Letter{sym(g, k, j)}}});
      p.coproduct.emplace_back(sym(g, i, j), std::move(terms));
    }
}

struct Component {
  int m;
  std::vector<int> vertices, sources, targets;
  std::vector<std::pair<int, int>> bundles;
};

std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  for (int m : bundle_sizes(g)) {
    Component c{m, {}, {}, {}, {}};
    std::set<int> vs, ss, ts;
    for (auto [k, l] : g.support())
      if (g.w(k, l) == m) {
        c.bundles.emplace_back(k, l);
        vs.insert(k);
        vs.insert(l);
        ss.insert(k);
        ts.insert(l);
      }
    c.vertices.assign(vs.begin(), vs.end());
    c.sources.assign(ss.begin(), ss.end());
    c.targets.assign(ts.begin(), ts.end());
    out.push_back(std::move(c));
  }
  return out;
}

enum class BundleKind { Gamma, Nu };

// Generators, quantum permutation relations and coaction for the source,
// target and combined kinds.
void emit_bundle_kind(Builder& b, const Graph& g, Kind kind) {
  const int n = g.num_vertices();
  const bool use_nu = kind == Kind::QT;
  auto bsym = [&](int m, int k, int s, int r) { return use_nu ? nu_sym(g, m, k, s, r) : gamma_sym(g, m, k, s, r); };
  const std::string fam = use_nu ? "nu" : "gamma";

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.gen(q_sym(g, i, j));
  auto comps = components(g);
  auto owners = [&](const Component& c) -> const std::vector<int>& {
    if (kind == Kind::QSTUndirected) return c.vertices;
    return use_nu ? c.targets : c.sources;
  };
  for (const auto& c : comps)
    for (int k : owners(c))
      for (int s = 0; s < c.m; ++s)
        for (int r = 0; r < c.m; ++r) b.gen(bsym(c.m, k, s, r));

  b.quantum_permutation(vertex_family(g, q_sym), "vertex quantum permutation");
  commute_with_matrix(b, g, g.W(), q_sym, "QW = WQ");

  for (const auto& c : comps) {
    const int m = c.m;
    for (int k : owners(c)) {
      std::vector<std::vector<Symbol>> F(m, std::vector<Symbol>(m));
      for (int s = 0; s < m; ++s)
        for (int r = 0; r < m; ++r) F[s][r] = bsym(m, k, s, r);
      b.quantum_permutation(F, fam + " quantum permutation");
    }
    auto each = [&](auto fn) {
      for (int s = 0; s < m; ++s)
        for (int r = 0; r < m; ++r) fn(s, r);
    };
    switch (kind) {
      case Kind::QS:
        for (int k : c.sources)
          for (int i : c.sources)
            each([&](int s, int r) { b.commute(bsym(m, k, s, r), q_sym(g, k, i), "gamma commutes with q"); });
        break;
      case Kind::QT:
        for (int l : c.targets)
          for (int j : c.targets)
            each([&](int s, int r) { b.commute(bsym(m, l, s, r), q_sym(g, l, j), "nu commutes with q"); });
        break;
      case Kind::QST:
        for (auto [k, l] : c.bundles) {
          for (auto [k2, l2] : c.bundles)
            if (l2 == l && k2 > k)
              each([&](int s, int r) {
                b.rel(Poly::gen(bsym(m, k, s, r)), Poly::gen(bsym(m, k2, s, r)), "gamma equal across a shared target");
              });
          for (int i : c.sources)
            each([&](int s, int r) { b.commute(bsym(m, k, s, r), q_sym(g, k, i), "gamma commutes with source q"); });
          for (int j : c.targets)
            each([&](int s, int r) { b.commute(bsym(m, k, s, r), q_sym(g, l, j), "gamma commutes with target q"); });
        }
        break;
      case Kind::QSTUndirected: {
        auto cls = path_class_index(m, g);
        for (int k1 : c.vertices) {
          for (int k2 : c.vertices)
            if (k2 > k1 && cls[k1] == cls[k2])
              each([&](int s, int r) {
                b.rel(Poly::gen(bsym(m, k1, s, r)), Poly::gen(bsym(m, k2, s, r)), "gamma equal along paths");
              });
          for (int i : c.vertices)
            each([&](int s, int r) { b.commute(bsym(m, k1, s, r), q_sym(g, k1, i), "gamma commutes with q"); });
        }
        break;
      }
      default: break;
    }
  }

  // Canonical coaction and coproduct.
  auto& p = b.p;
  const int ne = g.num_edges();
  for (int sg = 0; sg < ne; ++sg)
    for (int t = 0; t < ne; ++t) {
      int k = g.src(sg), l = g.tgt(sg), i = g.src(t), j = g.tgt(t);
      int m = static_cast<int>(g.w(k, l));
      Poly rhs;
      if (g.w(i, j) == m) {
        int s = g.local(sg), r = g.local(t);
        Poly qq = Poly::gen(q_sym(g, k, i)) * Poly::gen(q_sym(g, l, j));
        switch (kind) {
          case Kind::QS: rhs = Poly::gen(bsym(m, k, s, r)) * qq; break;
          case Kind::QT: rhs = qq * Poly::gen(bsym(m, l, s, r)); break;
          default: rhs = qq * Poly::gen(bsym(m, k, s, r)); break;
        }
      }
      p.coaction.push_back({Poly::gen(u_sym(g, sg, t)), rhs, {"canonical coaction"}});
    }
  vertex_coproduct(p, g, q_sym);
  for (const auto& c : comps)
    for (int k : owners(c))
      for (int s = 0; s < c.m; ++s)
        for (int r = 0; r < c.m; ++r) {
          std::vector<CoproductTerm> terms;
          for (int s2 = 0; s2 < c.m; ++s2)
            for (int k2 : owners(c))
              terms.push_back({Coeff(1), {Letter{bsym(c.m, k, s, s2)}, Letter{q_sym(g, k, k2)}},
                               {Letter{bsym(c.m, k2, s2, r)}}});
          p.coproduct.emplace_back(bsym(c.m, k, s, r), std::move(terms));
        }
}

void emit_simple(Builder& b, const Graph& g, bool bichon) {
  const int n = g.num_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.gen(q_sym(g, i, j));
  b.quantum_permutation(vertex_family(g, q_sym), "vertex quantum permutation");
  commute_with_matrix(b, g, support_matrix(g), q_sym, "QA = AQ");
  if (bichon)
    for (auto [i, j] : g.support())
      for (auto [k, l] : g.support()) b.commute(q_sym(g, i, k), q_sym(g, j, l), "edge-wise commutation");
  vertex_coproduct(b.p, g, q_sym);
}

void emit_wreath(Builder& b, const Graph& g) {
  auto ms = bundle_sizes(g);
  if (ms.size() != 1) throw KindMismatch("FreeWreath needs a uniform multigraph");
  const int m = ms[0];
  const int n = g.num_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.gen(x_sym(g, i, j));
  for (auto [i, j] : g.support())
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) b.gen(p_sym(g, i, j, r, s));

  b.quantum_permutation(vertex_family(g, x_sym), "x quantum permutation");
  commute_with_matrix(b, g, support_matrix(g), x_sym, "XA = AX");
  for (auto [i, j] : g.support())
    for (auto [k, l] : g.support()) b.commute(x_sym(g, i, k), x_sym(g, j, l), "x edge-wise commutation");
  for (auto [i, j] : g.support()) {
    std::vector<std::vector<Symbol>> F(m, std::vector<Symbol>(m));
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) F[r][s] = p_sym(g, i, j, r, s);
    b.quantum_permutation(F, "P quantum permutation");
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s)
        for (int k = 0; k < n; ++k) {
          b.commute(p_sym(g, i, j, r, s), x_sym(g, i, k), "P commutes with source x");
          b.commute(p_sym(g, i, j, r, s), x_sym(g, j, k), "P commutes with target x");
        }
    if (g.undirected() && i < j)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
          b.rel(Poly::gen(p_sym(g, i, j, r, s)), Poly::gen(p_sym(g, j, i, r, s)), "undirected quotient");
  }

  auto& p = b.p;
  const int ne = g.num_edges();
  for (int sg = 0; sg < ne; ++sg)
    for (int t = 0; t < ne; ++t) {
      int i = g.src(sg), j = g.tgt(sg), k = g.src(t), l = g.tgt(t);
      Poly rhs = Poly::gen(p_sym(g, i, j, g.local(sg), g.local(t))) * Poly::gen(x_sym(g, i, k)) *
                 Poly::gen(x_sym(g, j, l));
      p.coaction.push_back({Poly::gen(u_sym(g, sg, t)), rhs, {"wreath coaction"}});
    }
  vertex_coproduct(p, g, x_sym);
  for (auto [i, j] : g.support())
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) {
        std::vector<CoproductTerm> terms;
        for (int s2 = 0; s2 < m; ++s2)
          for (auto [k, l] : g.support())
            terms.push_back({Coeff(1),
                             {Letter{p_sym(g, i, j, r, s2)}, Letter{x_sym(g, i, k)}, Letter{x_sym(g, j, l)}},
                             {Letter{p_sym(g, k, l, s2, s)}}});
        p.coproduct.emplace_back(p_sym(g, i, j, r, s), std::move(terms));
      }
}

}  // namespace

Kind parse_kind(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != '-' && c != '_') t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  static const std::map<std::string, Kind> names = {
      {"qban", Kind::QBan}, {"qbic", Kind::QBic}, {"qsym", Kind::QSym},
      {"qbicundirected", Kind::QBicUndirected}, {"qs", Kind::QS}, {"qt", Kind::QT},
      {"qst", Kind::QST}, {"qstundirected", Kind::QSTUndirected}, {"sban", Kind::SBan},
      {"sbic", Kind::SBic}, {"freewreath", Kind::FreeWreath}};
  auto it = names.find(t);
  if (it == names.end()) throw std::invalid_argument("unknown kind " + s);
  return it->second;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::QBan: return "QBan";
    case Kind::QBic: return "QBic";
    case Kind::QSym: return "QSym";
    case Kind::QBicUndirected: return "QBicUndirected";
    case Kind::QS: return "QS";
    case Kind::QT: return "QT";
    case Kind::QST: return "QST";
    case Kind::QSTUndirected: return "QSTUndirected";
    case Kind::SBan: return "SBan";
    case Kind::SBic: return "SBic";
    case Kind::FreeWreath: return "FreeWreath";
  }
  return "?";
}

bool uses_edge_generators(Kind k) {
  return k == Kind::QBan || k == Kind::QBic || k == Kind::QSym || k == Kind::QBicUndirected;
}

Symbol u_sym(const Graph& g, int sigma, int tau) { return {"u", {g.eid(sigma), g.eid(tau)}}; }
Symbol q_sym(const Graph& g, int i, int j) { return {"q", {g.vid(i), g.vid(j)}}; }
Symbol x_sym(const Graph& g, int i, int j) { return {"x", {g.vid(i), g.vid(j)}}; }
Symbol p_sym(const Graph& g, int i, int j, int r, int s) {
  return {"P", {"(" + g.vid(i) + "," + g.vid(j) + ")", std::to_string(r + 1), std::to_string(s + 1)}};
}
Symbol gamma_sym(const Graph& g, int m, int k, int s, int r) {
  return {"gamma", {std::to_string(m), g.vid(k), std::to_string(s + 1), std::to_string(r + 1)}};
}
Symbol nu_sym(const Graph& g, int m, int l, int s, int r) {
  return {"nu", {std::to_string(m), g.vid(l), std::to_string(s + 1), std::to_string(r + 1)}};
}

Presentation emit_presentation(const Graph& g, Kind kind) {
  if (kind == Kind::QBicUndirected && !g.undirected())
    throw KindMismatch("QBicUndirected needs an undirected multigraph");
  if (kind == Kind::QSTUndirected && !g.undirected())
    throw KindMismatch("QSTUndirected needs an undirected multigraph");
  if ((kind == Kind::QS || kind == Kind::QT) && g.undirected())
    throw KindMismatch(to_string(kind) + " needs a directed multigraph");
  if (kind == Kind::QST && g.undirected()) kind = Kind::QSTUndirected;

  Builder b;
  b.p.kind = kind;
  b.p.undirected = g.undirected();
  switch (kind) {
    case Kind::QBan:
    case Kind::QSym:
      emit_edge_generators(b, g);
      emit_banica(b, g);
      if (kind == Kind::QSym) emit_restricted_orthogonality(b, g);
      if (g.undirected()) emit_inversion_compat(b, g);
      edge_coproduct(b.p, g);
      break;
    case Kind::QBic:
    case Kind::QBicUndirected:
      emit_edge_generators(b, g);
      emit_bichon(b, g);
      if (g.undirected()) emit_inversion_compat(b, g);
      edge_coproduct(b.p, g);
      break;
    case Kind::QS:
    case Kind::QT:
    case Kind::QST:
    case Kind::QSTUndirected:
      emit_bundle_kind(b, g, kind);
      break;
    case Kind::SBan:
    case Kind::SBic:
      emit_simple(b, g, kind == Kind::SBic);
      break;
    case Kind::FreeWreath:
      emit_wreath(b, g);
      break;
  }
  return std::move(b.p);
}

std::vector<Relation> derived_vertex_relations(const Graph& g, Kind kind) {
  if (!uses_edge_generators(kind)) throw KindMismatch(to_string(kind) + " has no edge generators");
  Builder b;
  const int n = g.num_vertices();
  const int ne = g.num_edges();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Poly q = Poly::gen(q_sym(g, i, k));
      if (g.is_source(i))
        for (int s : g.out_edges(i))
          b.rel(q, g.is_source(k) ? sum_u(g, s, g.out_edges(k)) : Poly(),
                "vertex entry from source blocks (must be independent of the row edge)");
      if (g.is_target(i))
        for (int s : g.in_edges(i))
          b.rel(q, g.is_target(k) ? sum_u(g, s, g.in_edges(k)) : Poly(),
                "vertex entry from target blocks (must be independent of the row edge)");
    }
  for (auto [i, j] : g.support())
    for (auto [k, l] : g.support())
      for (int s : g.bundle(i, j))
        b.rel(Poly::gen(q_sym(g, i, k)) * Poly::gen(q_sym(g, j, l)), sum_u(g, s, g.bundle(k, l)),
              "product of vertex entries from a bundle block");
  for (int s = 0; s < ne; ++s)
    for (int t = 0; t < ne; ++t)
      for (int i = 0; i < n; ++i) {
        Poly u = Poly::gen(u_sym(g, s, t));
        b.rel(Poly::gen(q_sym(g, g.src(s), i)) * u, i == g.src(t) ? u : Poly(), "left bimodule identity");
        b.rel(u * Poly::gen(q_sym(g, g.tgt(s), i)), i == g.tgt(t) ? u : Poly(), "right bimodule identity");
      }
  return std::move(b.p.relations);
}

const std::vector<std::pair<Symbol, std::vector<CoproductTerm>>>& coproduct_table(const Presentation& p) {
  return p.coproduct;
}

std::string presentation_text(const Presentation& p) {
  std::string out = "kind " + to_string(p.kind) + "\n";
  out += "generators " + std::to_string(p.generators.size()) + "\n";
  for (const auto& s : p.generators) out += "  " + symbol_text(s) + "\n";
  out += "relations " + std::to_string(p.relations.size()) + "\n";
  for (const auto& r : p.relations) {
    out += "  " + relation_text(r) + "   #";
    for (size_t i = 0; i < r.notes.size(); ++i) out += (i ? "; " : " ") + r.notes[i];
    out += "\n";
  }
  if (!p.coaction.empty()) {
    out += "coaction " + std::to_string(p.coaction.size()) + "\n";
    for (const auto& r : p.coaction) out += "  " + relation_text(r) + "\n";
  }
  out += "coproduct " + std::to_string(p.coproduct.size()) + "\n";
  for (const auto& [s, terms] : p.coproduct) {
    out += "  D(" + symbol_text(s) + ") =";
    for (size_t i = 0; i < terms.size(); ++i) {
      Poly l, r;
      l.add_term({terms[i].c, terms[i].left});
      r.add_term({Coeff(1), terms[i].right});
      out += (i ? " + " : " ") + poly_text(l) + " (x) " + poly_text(r);
    }
    out += "\n";
  }
  return out;
}

std::string presentation_json(const Presentation& p) {
  detail::ojson j;
  j["kind"] = to_string(p.kind);
  j["undirected"] = p.undirected;
  j["generators"] = detail::ojson::array();
  for (const auto& s : p.generators) j["generators"].push_back(detail::ojson::array({s.family, s.idx}));
  j["relations"] = detail::ojson::array();
  for (const auto& r : p.relations) j["relations"].push_back(detail::relation_json(r));
  j["coaction"] = detail::ojson::array();
  for (const auto& r : p.coaction) j["coaction"].push_back(detail::relation_json(r));
  j["coproduct"] = detail::ojson::array();
  for (const auto& [s, terms] : p.coproduct) {
    detail::ojson e;
    e["generator"] = symbol_text(s);
    e["terms"] = detail::ojson::array();
    for (const auto& t : terms) {
      Poly l, r;
      l.add_term({t.c, t.left});
      r.add_term({Coeff(1), t.right});
      e["terms"].push_back(detail::ojson::array({detail::poly_json(l)[0], detail::poly_json(r)[0][1]}));
    }
    j["coproduct"].push_back(std::move(e));
  }
  return j.dump();
}

}  // namespace mgq
