#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mgq/classical_aut.hpp"
#include "mgq/presentations.hpp"

namespace mgq {

struct MagicUnitaryRep {
  int dim = 1;
  MatrixAssignment assign;
  double tol = 1e-9;
};

struct FailingRelation {
  size_t index;  // position in the checked list
  double residual;
  std::string text;
};

struct VerifyReport {
  bool ok = true;
  double max_residual = 0.0;
  size_t checked = 0;
  std::vector<FailingRelation> failing;
};

// Residual of each relation against rep.tol.
VerifyReport verify_relations(const MagicUnitaryRep& rep, const std::vector<Relation>& rels);
// Relations of p, plus the coaction whenever rep assigns an edge matrix entry.
VerifyReport verify_rep(const MagicUnitaryRep& rep, const Presentation& p);

bool assigns_family(const MagicUnitaryRep& rep, const std::string& family);

// One-dimensional rep: u, q, the gamma and nu families read off the bundle
// permutations, and x, P on uniform graphs.
MagicUnitaryRep rep_from_automorphism(const Graph& g, const MultigraphAutomorphism& a);

// m x m block-diagonal quantum permutation built from 2 x 2 blocks
// [[p,1-p],[1-p,p]], alternating p and q; a trailing 1 when m is odd.
std::vector<std::vector<Matrix>> two_projection_family(int m, const Matrix& p, const Matrix& q);
// Orthogonal projection onto span(cos t, sin t).
Matrix line_projection(double angle);

using PairFamilies = std::map<std::pair<int, int>, std::vector<std::vector<Matrix>>>;

// Families for every ordered pair of the support, keyed by vertex indices;
// built from diag(1,0) and line_projection(angle) alternating over unordered pairs.
PairFamilies default_pair_families(const Graph& g, double angle);

// u[(i,j)r][(k,l)s] = P[(i,j)][r][s] x[i][k] x[j][l] with P acting on the first
// tensor factor and x on the second. x_rep assigns q (or x) symbols.
MagicUnitaryRep build_wreath_rep(const Graph& g, const MagicUnitaryRep& x_rep, const PairFamilies& p_reps);

struct WitnessReport {
  MagicUnitaryRep rep;
  std::string a, b, c, d;  // matrix order of the vertices
  double sban_residual = 0.0;
  double qst_residual = 0.0;
  double commutator = 0.0;
  bool degenerate = false;
};

// Square-type graph: four vertices whose non-adjacent pairs form a perfect
// matching {a,b}, {c,d}. Builds q from projections p, q, t and reports the
// noncommutativity of q[a][d] and q[c][b].
WitnessReport example5_witness(const Graph& g, double angle, bool gamma_factor = false);

struct CheckReport {
  bool ok = true;
  double max_residual = 0.0;
  std::string worst;  // location of max_residual
  std::vector<std::string> violations;
};

// Tracks the worst residual and lists every entry above tol.
void record(CheckReport& r, double residual, double tol, const std::string& what);

// q[i][k] read from u through source blocks (or target blocks when i is not
// a source); deviation is the largest disagreement between rows sigma.
struct DerivedQ {
  MatrixAssignment q;
  double deviation = 0.0;
};
DerivedQ derive_q(const MagicUnitaryRep& rep, const Graph& g);

CheckReport block_invariance_check(const MagicUnitaryRep& rep, const Graph& g);
CheckReport st_form_check(const MagicUnitaryRep& rep, const Graph& g);

MagicUnitaryRep conjugate(const MagicUnitaryRep& rep, const Matrix& U);

}  // namespace mgq
