#include "mgq/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace mgq {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

ValidationReport validate(const Multigraph& g) {
  ValidationReport rep;
  rep.undirected = g.inversion.has_value();
  auto& bad = rep.violations;

  std::set<std::string> vset;
  for (const auto& v : g.vertices)
    if (!vset.insert(v).second) bad.push_back("duplicate vertex " + v);

  std::map<std::string, const Edge*> emap;
  std::set<std::string> touched;
  for (const auto& e : g.edges) {
    if (!emap.emplace(e.id, &e).second) bad.push_back("duplicate edge id " + e.id);
    if (!vset.count(e.src)) bad.push_back("edge " + e.id + " has unknown source " + e.src);
    if (!vset.count(e.tgt)) bad.push_back("edge " + e.id + " has unknown target " + e.tgt);
    touched.insert(e.src);
    touched.insert(e.tgt);
  }
  for (const auto& v : g.vertices)
    if (!touched.count(v)) bad.push_back("isolated vertex " + v);

  if (g.inversion) {
    std::map<std::string, std::string> j;
    for (const auto& [a, b] : *g.inversion) {
      bool known = true;
      for (const auto* id : {&a, &b})
        if (!emap.count(*id)) {
          bad.push_back("inversion references unknown edge " + *id);
          known = false;
        }
      if (!known) continue;
      if (j.count(a) || j.count(b)) {
        bad.push_back("edge paired more than once in inversion: " + (j.count(a) ? a : b));
        continue;
      }
      const Edge& ea = *emap[a];
      const Edge& eb = *emap[b];
      if (a == b) {
        if (ea.src != ea.tgt) bad.push_back("inversion fixes non-loop edge " + a);
        j[a] = a;
        continue;
      }
      if (ea.src == ea.tgt || eb.src == eb.tgt)
        bad.push_back("inversion moves loop " + (ea.src == ea.tgt ? a : b));
      if (ea.src != eb.tgt || ea.tgt != eb.src)
        bad.push_back("inversion pair (" + a + "," + b + ") does not swap source and target");
      j[a] = b;
      j[b] = a;
    }
    for (const auto& e : g.edges)
      if (e.src != e.tgt && !j.count(e.id))
        bad.push_back("non-loop edge " + e.id + " has no inversion partner");

    std::map<std::pair<std::string, std::string>, long long> cnt;
    for (const auto& e : g.edges) ++cnt[{e.src, e.tgt}];
    std::set<std::pair<std::string, std::string>> asym;
    for (const auto& [key, c] : cnt) {
      auto it = cnt.find({key.second, key.first});
      if (it == cnt.end() || it->second != c) asym.insert(std::minmax(key.first, key.second));
    }
    for (const auto& [a, b] : asym) bad.push_back("adjacency matrix not symmetric at (" + a + "," + b + ")");
  }
  rep.valid = bad.empty();
  return rep;
}

InvalidGraph::InvalidGraph(std::vector<std::string> violations)
    : std::runtime_error("invalid multigraph: " + join(violations)), violations_(std::move(violations)) {}

Graph::Graph(Multigraph g) : raw_(std::move(g)) { build(nullptr); }

Graph::Graph(Multigraph g, const std::map<std::string, int>& local_override) : raw_(std::move(g)) {
  build(&local_override);
}

int Graph::vindex(const std::string& id) const {
  auto it = vpos_.find(id);
  if (it == vpos_.end()) throw std::out_of_range("unknown vertex " + id);
  return it->second;
}

int Graph::eindex(const std::string& id) const {
  auto it = epos_.find(id);
  if (it == epos_.end()) throw std::out_of_range("unknown edge " + id);
  return it->second;
}

void Graph::build(const std::map<std::string, int>* local_override) {
  auto report = validate(raw_);
  if (!report.valid) throw InvalidGraph(report.violations);
  undirected_ = report.undirected;

  vids_ = raw_.vertices;
  std::sort(vids_.begin(), vids_.end());
  for (int i = 0; i < num_vertices(); ++i) vpos_[vids_[i]] = i;

  std::vector<const Edge*> es;
  for (const auto& e : raw_.edges) es.push_back(&e);
  std::sort(es.begin(), es.end(), [](auto* a, auto* b) { return a->id < b->id; });
  const int n = num_vertices();
  const int ne = static_cast<int>(es.size());
  W_.assign(n, std::vector<long long>(n, 0));
  bundles_.assign(n, std::vector<std::vector<int>>(n));
  out_.assign(n, {});
  in_.assign(n, {});
  for (int e = 0; e < ne; ++e) {
    eids_.push_back(es[e]->id);
    epos_[es[e]->id] = e;
    src_.push_back(vpos_[es[e]->src]);
    tgt_.push_back(vpos_[es[e]->tgt]);
    ++W_[src_[e]][tgt_[e]];
    bundles_[src_[e]][tgt_[e]].push_back(e);
    out_[src_[e]].push_back(e);
    in_[tgt_[e]].push_back(e);
  }
  if (undirected_) {
    inv_.resize(ne);
    for (int e = 0; e < ne; ++e) inv_[e] = e;
    for (const auto& [a, b] : *raw_.inversion) {
      inv_[epos_[a]] = epos_[b];
      inv_[epos_[b]] = epos_[a];
    }
  }

  local_.assign(ne, -1);
  if (local_override) {
    for (int e = 0; e < ne; ++e) {
      auto it = local_override->find(eids_[e]);
      if (it == local_override->end()) throw RepresentationError("representation misses edge " + eids_[e]);
      local_[e] = it->second - 1;
    }
  } else {
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        if (undirected_ && k > l) continue;
        const auto& b = bundles_[k][l];
        for (int r = 0; r < static_cast<int>(b.size()); ++r) {
          local_[b[r]] = r;
          if (undirected_ && k != l) local_[inv_[b[r]]] = r;
        }
      }
  }

  // Reorder bundles by local index and check the numbering.
  bundle_pos_.assign(n, std::vector<int>(n, -1));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      auto& b = bundles_[k][l];
      std::vector<int> ordered(b.size(), -1);
      for (int e : b) {
        int r = local_[e];
        if (r < 0 || r >= static_cast<int>(b.size()) || ordered[r] != -1)
          throw RepresentationError("local indices of bundle (" + vids_[k] + "," + vids_[l] +
                                    ") are not 1.." + std::to_string(b.size()));
        ordered[r] = e;
      }
      b = std::move(ordered);
      if (!b.empty()) {
        bundle_pos_[k][l] = static_cast<int>(support_.size());
        support_.emplace_back(k, l);
      }
    }
  if (undirected_)
    for (int e = 0; e < ne; ++e)
      if (local_[inv_[e]] != local_[e])
        throw RepresentationError("numbering is not compatible with the inversion at edge " + eids_[e]);
}

IntMatrix adjacency_matrix(const Graph& g) { return g.W(); }

WeightedSimpleGraph underlying_weighted_graph(const Graph& g) {
  WeightedSimpleGraph w;
  w.vertices = g.vertex_ids();
  for (auto [k, l] : g.support()) {
    w.arcs.emplace_back(g.vid(k), g.vid(l));
    w.weights.push_back(g.w(k, l));
  }
  return w;
}

std::vector<int> bundle_sizes(const Graph& g) {
  std::set<int> ms;
  for (auto [k, l] : g.support()) ms.insert(static_cast<int>(g.w(k, l)));
  return {ms.begin(), ms.end()};
}

std::vector<UniformComponent> uniform_decompose(const Graph& g) {
  std::vector<UniformComponent> out;
  for (int m : bundle_sizes(g)) {
    UniformComponent c;
    c.m = m;
    std::set<int> vs, ss, ts;
    std::vector<std::string> es;
    for (auto [k, l] : g.support()) {
      if (g.w(k, l) != m) continue;
      vs.insert(k);
      vs.insert(l);
      ss.insert(k);
      ts.insert(l);
      for (int e : g.bundle(k, l)) es.push_back(g.eid(e));
    }
    std::sort(es.begin(), es.end());
    c.edges = es;
    for (int v : vs) c.vertices.push_back(g.vid(v));
    for (int v : ss) c.sources.push_back(g.vid(v));
    for (int v : ts) c.targets.push_back(g.vid(v));
    out.push_back(std::move(c));
  }
  return out;
}

EdgeRepresentation canonical_edge_representation(const Graph& g) {
  EdgeRepresentation rep;
  for (int e = 0; e < g.num_edges(); ++e)
    rep[g.eid(e)] = {g.vid(g.src(e)), g.vid(g.tgt(e)), g.local(e) + 1};
  return rep;
}

Multigraph underlying_undirected_multigraph(const Graph& g) {
  if (g.undirected()) throw std::invalid_argument("graph is already undirected");
  Multigraph out;
  out.vertices = g.raw().vertices;
  out.edges = g.raw().edges;
  std::set<std::string> used(g.edge_ids().begin(), g.edge_ids().end());
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : g.raw().edges) {
    if (e.src == e.tgt) continue;
    std::string id = e.id + "_rev";
    for (int n = 2; used.count(id); ++n) id = e.id + "_rev" + std::to_string(n);
    used.insert(id);
    out.edges.push_back({id, e.tgt, e.src});
    pairs.emplace_back(e.id, id);
  }
  out.inversion = pairs;
  return out;
}

std::vector<std::vector<std::string>> undirected_edge_classes(const Graph& g) {
  if (!g.undirected()) throw std::invalid_argument("graph is not undirected");
  std::vector<std::vector<std::string>> out;
  for (int e = 0; e < g.num_edges(); ++e) {
    int f = g.inv(e);
    if (f == e)
      out.push_back({g.eid(e)});
    else if (e < f)
      out.push_back({g.eid(e), g.eid(f)});
  }
  return out;
}

std::vector<int> path_class_index(int m, const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  std::vector<char> in_m(n, 0);
  for (auto [k, l] : g.support()) {
    if (g.w(k, l) != m) continue;
    reach[k][l] = 1;
    in_m[k] = in_m[l] = 1;
    if (g.undirected()) reach[l][k] = 1;
  }
  for (int v = 0; v < n; ++v) reach[v][v] = in_m[v];
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < n; ++a)
      if (reach[a][p])
        for (int b = 0; b < n; ++b)
          if (reach[p][b]) reach[a][b] = 1;
  std::vector<int> cls(n, -1);
  int next = 0;
  for (int a = 0; a < n; ++a) {
    if (!in_m[a] || cls[a] != -1) continue;
    for (int b = a; b < n; ++b)
      if (in_m[b] && reach[a][b] && reach[b][a]) cls[b] = next;
    ++next;
  }
  return cls;
}

std::vector<std::vector<std::string>> path_classes(const UniformComponent& c, const Graph& g) {
  auto cls = path_class_index(c.m, g);
  std::vector<std::vector<std::string>> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (cls[v] < 0) continue;
    if (cls[v] >= static_cast<int>(out.size())) out.resize(cls[v] + 1);
    out[cls[v]].push_back(g.vid(v));
  }
  return out;
}

}  // namespace mgq
