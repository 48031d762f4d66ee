#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgq/matrix_reps.hpp"

namespace mgq {

class CyclicGraph : public std::runtime_error {
 public:
  CyclicGraph(std::vector<std::string> cycle, const std::string& what)
      : std::runtime_error(what), cycle_(std::move(cycle)) {}
  // Edge ids along the cycle.
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

using IntMat = Eigen::MatrixXi;

struct PathBasisElement {
  int start;              // vertex index
  std::vector<int> word;  // edge indices, first edge leaves start
};

struct CKFamily {
  int n = 0;
  std::vector<PathBasisElement> basis;
  std::vector<IntMat> s;  // per edge
  std::vector<IntMat> p;  // per vertex
};

// Edge ids of some directed cycle, empty when acyclic. Loops count as cycles
// and every undirected graph is cyclic.
std::vector<std::string> find_cycle(const Graph& g);

// Path space model on paths ending at sinks, ordered by (sink id, edge-id word).
CKFamily build_ck_family(const Graph& g);

// Exact integer check of the Cuntz-Krieger relations.
CheckReport verify_ck_family(const CKFamily& ck, const Graph& g);

struct CoactionMatrices {
  std::vector<Matrix> S;  // per edge
  std::vector<Matrix> P;  // per vertex
  double q_deviation = 0.0;
};

// S_tau = sum_sigma s_sigma (x) u[sigma][tau], P_i = sum_k p_k (x) q[k][i] with
// q derived from u.
CoactionMatrices coaction_matrices(const CKFamily& ck, const MagicUnitaryRep& rep, const Graph& g);

CheckReport verify_ck_coaction(const CKFamily& ck, const MagicUnitaryRep& rep, const Graph& g);

// || sum_{sigma in E_j} u[sigma][t1]^* u[sigma][t2] - delta q[j][t(t1)] || for
// every target j and pair of edges.
CheckReport verify_correspondence_covariance(const Graph& g, const MagicUnitaryRep& rep);

}  // namespace mgq
