#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mgq {

struct Edge {
  std::string id;
  std::string src;
  std::string tgt;
  bool operator==(const Edge&) const = default;
};

// Raw multigraph data, possibly invalid. Presence of the inversion field marks
// the graph as undirected.
struct Multigraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::optional<std::vector<std::pair<std::string, std::string>>> inversion;
  bool operator==(const Multigraph&) const = default;
};

struct ValidationReport {
  bool valid = true;
  bool undirected = false;
  std::vector<std::string> violations;
};

ValidationReport validate(const Multigraph& g);

class InvalidGraph : public std::runtime_error {
 public:
  explicit InvalidGraph(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using IntMatrix = std::vector<std::vector<long long>>;

// Validated, indexed view of a multigraph. Vertices and edges are indexed in
// lexicographic order of their ids. Every edge carries a local index r inside
// its bundle E^k_l (0-based here, 1-based in all user-facing output).
class Graph {
 public:
  explicit Graph(Multigraph g);
  // local_override maps edge id to a 1-based local index replacing the
  // canonical numbering.
  Graph(Multigraph g, const std::map<std::string, int>& local_override);

  const Multigraph& raw() const { return raw_; }
  bool undirected() const { return undirected_; }

  int num_vertices() const { return static_cast<int>(vids_.size()); }
  int num_edges() const { return static_cast<int>(eids_.size()); }
  const std::string& vid(int v) const { return vids_[v]; }
  const std::string& eid(int e) const { return eids_[e]; }
  const std::vector<std::string>& vertex_ids() const { return vids_; }
  const std::vector<std::string>& edge_ids() const { return eids_; }
  int vindex(const std::string& id) const;
  int eindex(const std::string& id) const;

  int src(int e) const { return src_[e]; }
  int tgt(int e) const { return tgt_[e]; }
  int local(int e) const { return local_[e]; }
  // Inversion partner, loops map to themselves; -1 on directed graphs.
  int inv(int e) const { return inv_.empty() ? -1 : inv_[e]; }
  bool is_loop(int e) const { return src_[e] == tgt_[e]; }

  const IntMatrix& W() const { return W_; }
  long long w(int k, int l) const { return W_[k][l]; }
  // Edges of E^k_l ordered by local index.
  const std::vector<int>& bundle(int k, int l) const { return bundles_[k][l]; }
  int edge_at(int k, int l, int r) const { return bundles_[k][l][r]; }
  const std::vector<int>& out_edges(int k) const { return out_[k]; }
  const std::vector<int>& in_edges(int l) const { return in_[l]; }
  bool is_source(int v) const { return !out_[v].empty(); }
  bool is_target(int v) const { return !in_[v].empty(); }
  // Nonempty bundles (k,l) in lexicographic order.
  const std::vector<std::pair<int, int>>& support() const { return support_; }
  // Position of (k,l) in support(), -1 for an empty bundle.
  int bundle_index(int k, int l) const { return bundle_pos_[k][l]; }

 private:
  void build(const std::map<std::string, int>* local_override);

  Multigraph raw_;
  bool undirected_ = false;
  std::vector<std::string> vids_, eids_;
  std::map<std::string, int> vpos_, epos_;
  std::vector<int> src_, tgt_, local_, inv_;
  IntMatrix W_;
  std::vector<std::vector<std::vector<int>>> bundles_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<std::pair<int, int>> support_;
  std::vector<std::vector<int>> bundle_pos_;
};

IntMatrix adjacency_matrix(const Graph& g);

struct WeightedSimpleGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> arcs;
  std::vector<long long> weights;  // parallel to arcs
};

WeightedSimpleGraph underlying_weighted_graph(const Graph& g);

struct UniformComponent {
  int m = 0;
  std::vector<std::string> vertices;  // V_m
  std::vector<std::string> edges;     // E_m
  std::vector<std::string> sources;   // V^s_m
  std::vector<std::string> targets;   // V^t_m
};

std::vector<UniformComponent> uniform_decompose(const Graph& g);

struct EdgeLabel {
  std::string src;
  std::string tgt;
  int r = 0;  // 1-based
  bool operator==(const EdgeLabel&) const = default;
};

using EdgeRepresentation = std::map<std::string, EdgeLabel>;

EdgeRepresentation canonical_edge_representation(const Graph& g);

Multigraph underlying_undirected_multigraph(const Graph& g);

std::vector<std::vector<std::string>> undirected_edge_classes(const Graph& g);

// Vertex classes of V_m linked by paths inside E_m. Undirected graphs use
// connectivity, directed graphs use mutual reachability.
std::vector<std::vector<std::string>> path_classes(const UniformComponent& c, const Graph& g);

// Component index of every vertex of V_m (by vertex index), -1 outside V_m.
std::vector<int> path_class_index(int m, const Graph& g);

// Sorted distinct bundle sizes.
std::vector<int> bundle_sizes(const Graph& g);

}  // namespace mgq
