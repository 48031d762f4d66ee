#include "mgq/classical_aut.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "json.hpp"

namespace mgq {

namespace {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_perm(const Perm& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<Perm> all_perms(int m) {
  std::vector<Perm> out;
  Perm p = identity_perm(m);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int find(std::vector<int>& uf, int x) {
  while (uf[x] != x) x = uf[x] = uf[uf[x]];
  return x;
}

// Class label per bundle: bundles sharing a label must carry equal gammas.
std::vector<int> bundle_classes(const Graph& g, Flavor flavor) {
  const auto& sup = g.support();
  const int nb = static_cast<int>(sup.size());
  std::vector<int> uf(nb);
  std::iota(uf.begin(), uf.end(), 0);
  auto unite = [&](int a, int b) { uf[find(uf, a)] = find(uf, b); };

  if (g.undirected()) {
    for (int b = 0; b < nb; ++b) {
      auto [k, l] = sup[b];
      unite(b, g.bundle_index(l, k));
    }
    if (flavor != Flavor::All) {
      std::map<std::pair<int, int>, int> rep;
      std::map<int, std::vector<int>> cls_by_m;
      for (int b = 0; b < nb; ++b) {
        auto [k, l] = sup[b];
        int m = static_cast<int>(g.w(k, l));
        if (!cls_by_m.count(m)) cls_by_m[m] = path_class_index(m, g);
        auto key = std::make_pair(m, cls_by_m[m][k]);
        auto [it, fresh] = rep.emplace(key, b);
        if (!fresh) unite(b, it->second);
      }
    }
  } else if (flavor != Flavor::All) {
    std::map<std::pair<int, int>, int> by_src, by_tgt;
    for (int b = 0; b < nb; ++b) {
      auto [k, l] = sup[b];
      int m = static_cast<int>(g.w(k, l));
      if (flavor == Flavor::Source || flavor == Flavor::Both) {
        auto [it, fresh] = by_src.emplace(std::make_pair(m, k), b);
        if (!fresh) unite(b, it->second);
      }
      if (flavor == Flavor::Target || flavor == Flavor::Both) {
        auto [it, fresh] = by_tgt.emplace(std::make_pair(m, l), b);
        if (!fresh) unite(b, it->second);
      }
    }
  }
  std::vector<int> cls(nb);
  for (int b = 0; b < nb; ++b) cls[b] = find(uf, b);
  return cls;
}

}  // namespace

Flavor parse_flavor(const std::string& s) {
  if (s == "all") return Flavor::All;
  if (s == "source") return Flavor::Source;
  if (s == "target") return Flavor::Target;
  if (s == "both") return Flavor::Both;
  throw std::invalid_argument("unknown flavor " + s);
}

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::All: return "all";
    case Flavor::Source: return "source";
    case Flavor::Target: return "target";
    case Flavor::Both: return "both";
  }
  return "?";
}

std::vector<Perm> enumerate_vertex_symmetries(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Perm> out;
  Perm f(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      out.push_back(f);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used[img]) continue;
      bool ok = g.w(v, v) == g.w(img, img);
      for (int u = 0; ok && u < v; ++u)
        ok = g.w(u, v) == g.w(f[u], img) && g.w(v, u) == g.w(img, f[u]);
      if (!ok) continue;
      f[v] = img;
      used[img] = 1;
      rec(v + 1);
      used[img] = 0;
    }
    f[v] = -1;
  };
  rec(0);
  return out;
}

AutomorphismGroup enumerate_automorphisms(const Graph& g, Flavor flavor) {
  const auto& sup = g.support();
  const int nb = static_cast<int>(sup.size());
  auto cls = bundle_classes(g, flavor);
  std::vector<int> heads;
  for (int b = 0; b < nb; ++b)
    if (cls[b] == b) heads.push_back(b);

  std::map<int, std::vector<Perm>> perms_of;
  std::vector<const std::vector<Perm>*> choices;
  for (int h : heads) {
    int m = static_cast<int>(g.w(sup[h].first, sup[h].second));
    if (!perms_of.count(m)) perms_of[m] = all_perms(m);
    choices.push_back(&perms_of[m]);
  }
  std::map<int, int> head_pos;
  for (int i = 0; i < static_cast<int>(heads.size()); ++i) head_pos[heads[i]] = i;

  AutomorphismGroup grp;
  for (const auto& f : enumerate_vertex_symmetries(g)) {
    std::vector<size_t> odo(heads.size(), 0);
    while (true) {
      MultigraphAutomorphism a;
      a.f_V = f;
      a.gammas.resize(nb);
      for (int b = 0; b < nb; ++b) a.gammas[b] = (*choices[head_pos[cls[b]]])[odo[head_pos[cls[b]]]];
      grp.elements.push_back(std::move(a));
      size_t i = 0;
      for (; i < odo.size(); ++i) {
        if (++odo[i] < choices[i]->size()) break;
        odo[i] = 0;
      }
      if (i == odo.size()) break;
    }
  }
  std::sort(grp.elements.begin(), grp.elements.end());
  return grp;
}

Perm edge_permutation(const Graph& g, const MultigraphAutomorphism& a) {
  Perm fE(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    int k = g.src(e), l = g.tgt(e);
    const Perm& gam = a.gammas[g.bundle_index(k, l)];
    fE[e] = g.edge_at(a.f_V[k], a.f_V[l], gam[g.local(e)]);
  }
  return fE;
}

MultigraphAutomorphism from_edge_permutation(const Graph& g, const Perm& fV, const Perm& fE) {
  MultigraphAutomorphism a;
  a.f_V = fV;
  for (auto [k, l] : g.support()) {
    const auto& b = g.bundle(k, l);
    Perm gam(b.size());
    for (size_t r = 0; r < b.size(); ++r) {
      int img = fE[b[r]];
      if (g.src(img) != fV[k] || g.tgt(img) != fV[l])
        throw std::invalid_argument("edge permutation does not respect the vertex map");
      gam[r] = g.local(img);
    }
    a.gammas.push_back(std::move(gam));
  }
  return a;
}

MultigraphAutomorphism identity_automorphism(const Graph& g) {
  MultigraphAutomorphism a;
  a.f_V = identity_perm(g.num_vertices());
  for (auto [k, l] : g.support()) a.gammas.push_back(identity_perm(static_cast<int>(g.w(k, l))));
  return a;
}

namespace {

void check_shape(const Graph& g, const MultigraphAutomorphism& a) {
  if (static_cast<int>(a.f_V.size()) != g.num_vertices() || a.gammas.size() != g.support().size())
    throw std::invalid_argument("automorphism does not belong to this graph");
}

}  // namespace

MultigraphAutomorphism compose(const Graph& g, const MultigraphAutomorphism& a1,
                               const MultigraphAutomorphism& a2) {
  check_shape(g, a1);
  check_shape(g, a2);
  MultigraphAutomorphism c;
  const int n = g.num_vertices();
  c.f_V.resize(n);
  for (int v = 0; v < n; ++v) c.f_V[v] = a1.f_V[a2.f_V[v]];
  for (auto [k, l] : g.support()) {
    const Perm& g2 = a2.gammas[g.bundle_index(k, l)];
    const Perm& g1 = a1.gammas[g.bundle_index(a2.f_V[k], a2.f_V[l])];
    Perm gam(g2.size());
    for (size_t r = 0; r < g2.size(); ++r) gam[r] = g1[g2[r]];
    c.gammas.push_back(std::move(gam));
  }
  return c;
}

MultigraphAutomorphism invert(const Graph& g, const MultigraphAutomorphism& a) {
  check_shape(g, a);
  MultigraphAutomorphism c;
  const int n = g.num_vertices();
  c.f_V.resize(n);
  for (int v = 0; v < n; ++v) c.f_V[a.f_V[v]] = v;
  for (auto [k, l] : g.support()) {
    const Perm& gam = a.gammas[g.bundle_index(c.f_V[k], c.f_V[l])];
    Perm inv(gam.size());
    for (size_t r = 0; r < gam.size(); ++r) inv[gam[r]] = static_cast<int>(r);
    c.gammas.push_back(std::move(inv));
  }
  return c;
}

bool is_automorphism(const Graph& g, const MultigraphAutomorphism& a) {
  const int n = g.num_vertices();
  if (!is_perm(a.f_V, n) || a.gammas.size() != g.support().size()) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.w(a.f_V[i], a.f_V[j]) != g.w(i, j)) return false;
  for (size_t b = 0; b < g.support().size(); ++b) {
    auto [k, l] = g.support()[b];
    if (!is_perm(a.gammas[b], static_cast<int>(g.w(k, l)))) return false;
    if (g.undirected() && a.gammas[b] != a.gammas[g.bundle_index(l, k)]) return false;
  }
  return true;
}

bool has_flavor(const Graph& g, const MultigraphAutomorphism& a, Flavor f) {
  if (!is_automorphism(g, a)) return false;
  auto cls = bundle_classes(g, f);
  for (size_t b = 0; b < cls.size(); ++b)
    if (a.gammas[b] != a.gammas[cls[b]]) return false;
  return true;
}

bool is_source_dependent(const Graph& g, const MultigraphAutomorphism& a) {
  return has_flavor(g, a, Flavor::Source);
}

bool is_target_dependent(const Graph& g, const MultigraphAutomorphism& a) {
  return has_flavor(g, a, Flavor::Target);
}

AutomorphismGroup brute_force_oracle(const Graph& g, int max_edges) {
  const int n = g.num_vertices();
  const int ne = g.num_edges();
  if (ne > max_edges)
    throw SizeGuardExceeded("brute force oracle refuses " + std::to_string(ne) + " edges (limit " +
                            std::to_string(max_edges) + ")");
  AutomorphismGroup grp;
  Perm fV = identity_perm(n);
  do {
    Perm fE(ne, -1);
    std::vector<char> used(ne, 0);
    std::function<void(int)> rec = [&](int e) {
      if (e == ne) {
        if (g.undirected())
          for (int t = 0; t < ne; ++t)
            if (fE[g.inv(t)] != g.inv(fE[t])) return;
        grp.elements.push_back(from_edge_permutation(g, fV, fE));
        return;
      }
      for (int s = 0; s < ne; ++s) {
        if (used[s]) continue;
        if (fV[g.src(e)] != g.src(s) || fV[g.tgt(e)] != g.tgt(s)) continue;
        used[s] = 1;
        fE[e] = s;
        rec(e + 1);
        used[s] = 0;
      }
      fE[e] = -1;
    };
    rec(0);
  } while (std::next_permutation(fV.begin(), fV.end()));
  std::sort(grp.elements.begin(), grp.elements.end());
  return grp;
}

bool check_group_laws(const Graph& g, const AutomorphismGroup& grp, std::string* why) {
  std::set<MultigraphAutomorphism> s(grp.elements.begin(), grp.elements.end());
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (s.size() != grp.elements.size()) return fail("duplicate elements");
  if (!s.count(identity_automorphism(g))) return fail("identity missing");
  for (const auto& a : grp.elements) {
    if (!s.count(invert(g, a))) return fail("not closed under inverse");
    for (const auto& b : grp.elements)
      if (!s.count(compose(g, a, b))) return fail("not closed under composition");
  }
  return true;
}

long long order_formula(const Graph& g) {
  auto fact = [](long long m) {
    long long f = 1;
    for (long long i = 2; i <= m; ++i) f *= i;
    return f;
  };
  long long order = static_cast<long long>(enumerate_vertex_symmetries(g).size());
  for (auto [k, l] : g.support())
    if (!g.undirected() || k <= l) order *= fact(g.w(k, l));
  return order;
}

std::vector<std::vector<std::vector<long long>>> weight_levels(const Graph& g) {
  std::set<long long> values;
  for (const auto& row : g.W())
    for (long long x : row) values.insert(x);
  std::vector<std::vector<std::vector<long long>>> out;
  const int n = g.num_vertices();
  for (long long c : values) {
    std::vector<std::vector<long long>> L(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) L[i][j] = g.w(i, j) == c ? 1 : 0;
    out.push_back(std::move(L));
  }
  return out;
}

bool commutes_with_weight_levels(const Graph& g, const Perm& fV) {
  const int n = g.num_vertices();
  // P[i][k] = 1 iff f(k) = i.
  for (const auto& L : weight_levels(g))
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long pl = 0, lp = 0;
        for (int k = 0; k < n; ++k) {
          if (fV[k] == i) pl += L[k][j];
          if (fV[j] == k) lp += L[i][k];
        }
        if (pl != lp) return false;
      }
  return true;
}

std::map<std::string, std::string> vertex_map(const Graph& g, const MultigraphAutomorphism& a) {
  std::map<std::string, std::string> m;
  for (int v = 0; v < g.num_vertices(); ++v) m[g.vid(v)] = g.vid(a.f_V[v]);
  return m;
}

std::string automorphism_to_json(const Graph& g, const MultigraphAutomorphism& a) {
  nlohmann::ordered_json j;
  j["f_V"] = nlohmann::ordered_json::object();
  for (int v = 0; v < g.num_vertices(); ++v) j["f_V"][g.vid(v)] = g.vid(a.f_V[v]);
  j["gammas"] = nlohmann::ordered_json::object();
  for (size_t b = 0; b < g.support().size(); ++b) {
    auto [k, l] = g.support()[b];
    std::vector<int> one_line;
    for (int x : a.gammas[b]) one_line.push_back(x + 1);
    j["gammas"]["(" + g.vid(k) + "," + g.vid(l) + ")"] = one_line;
  }
  return j.dump();
}

}  // namespace mgq
