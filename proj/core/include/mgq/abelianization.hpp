#pragma once

#include <string>
#include <vector>

#include "mgq/classical_aut.hpp"
#include "mgq/presentations.hpp"

namespace mgq {

struct ClassicalPoint {
  BoolAssignment assignment;
  bool operator==(const ClassicalPoint&) const = default;
  auto operator<=>(const ClassicalPoint&) const = default;
};

// Candidate limit; MGQ_MAX_CANDIDATES overrides the default of 10^7.
long long candidate_limit();

// Number of structured candidates classical_points would test.
double candidate_count(const Presentation& p, const Graph& g);

// Complete sorted list of Boolean commutative solutions. Throws
// SizeGuardExceeded when the candidate space is larger than max_candidates
// (negative means candidate_limit()).
std::vector<ClassicalPoint> classical_points(const Presentation& p, const Graph& g, long long max_candidates = -1);

// Edge matrix of a point: read directly for edge generator kinds, through the
// coaction otherwise. Empty for SBan and SBic.
std::vector<std::vector<int>> point_edge_matrix(const Presentation& p, const Graph& g, const ClassicalPoint& pt);

struct MatchReport {
  bool ok = false;
  long long points = 0;
  long long group = 0;
  std::string message;
};

// Bijection u[sigma][tau] = 1 iff f_E(tau) = sigma.
MatchReport match_against_aut(const Presentation& p, const Graph& g, const std::vector<ClassicalPoint>& points,
                              const AutomorphismGroup& group);

// For SBan and SBic: q[i][j] = 1 iff f_V(j) = i.
MatchReport match_against_vertex_perms(const Graph& g, const std::vector<ClassicalPoint>& points,
                                       const std::vector<Perm>& perms);

// Every vertex permutation commuting with the 0/1 adjacency matrix.
std::vector<Perm> adjacency_symmetries(const Graph& g);

std::string point_text(const ClassicalPoint& pt);

}  // namespace mgq
