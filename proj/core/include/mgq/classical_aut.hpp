#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mgq/multigraph.hpp"

namespace mgq {

using Perm = std::vector<int>;

// Vertex permutation plus one local permutation per nonempty bundle. gammas is
// indexed like Graph::support(); gamma (k,l) is the permutation applied to the
// local index of edges of the preimage bundle E^k_l:
//   f_E((k,l)r) = (f(k), f(l)) Gamma_kl(r).
struct MultigraphAutomorphism {
  Perm f_V;
  std::vector<Perm> gammas;
  bool operator==(const MultigraphAutomorphism&) const = default;
  auto operator<=>(const MultigraphAutomorphism&) const = default;
};

struct AutomorphismGroup {
  std::vector<MultigraphAutomorphism> elements;
  long long order() const { return static_cast<long long>(elements.size()); }
};

enum class Flavor { All, Source, Target, Both };

Flavor parse_flavor(const std::string& s);
std::string to_string(Flavor f);

class SizeGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex permutations whose permutation matrix commutes with W, in
// lexicographic order of the image word.
std::vector<Perm> enumerate_vertex_symmetries(const Graph& g);

AutomorphismGroup enumerate_automorphisms(const Graph& g, Flavor flavor = Flavor::All);

// Induced edge permutation, fE[tau] = image edge.
Perm edge_permutation(const Graph& g, const MultigraphAutomorphism& a);
MultigraphAutomorphism from_edge_permutation(const Graph& g, const Perm& fV, const Perm& fE);

MultigraphAutomorphism identity_automorphism(const Graph& g);
// a1 after a2.
MultigraphAutomorphism compose(const Graph& g, const MultigraphAutomorphism& a1,
                               const MultigraphAutomorphism& a2);
MultigraphAutomorphism invert(const Graph& g, const MultigraphAutomorphism& a);

bool is_automorphism(const Graph& g, const MultigraphAutomorphism& a);
bool is_source_dependent(const Graph& g, const MultigraphAutomorphism& a);
bool is_target_dependent(const Graph& g, const MultigraphAutomorphism& a);
bool has_flavor(const Graph& g, const MultigraphAutomorphism& a, Flavor f);

// Direct check of the quiver automorphism conditions over all vertex and edge
// permutations; refuses graphs with more than max_edges edges.
AutomorphismGroup brute_force_oracle(const Graph& g, int max_edges = 8);

// Group laws: identity present, closure under composition and inverse.
bool check_group_laws(const Graph& g, const AutomorphismGroup& grp, std::string* why = nullptr);

// Vertex symmetry count times the product of bundle factorials.
long long order_formula(const Graph& g);

std::vector<std::vector<std::vector<long long>>> weight_levels(const Graph& g);
bool commutes_with_weight_levels(const Graph& g, const Perm& fV);

std::map<std::string, std::string> vertex_map(const Graph& g, const MultigraphAutomorphism& a);
std::string automorphism_to_json(const Graph& g, const MultigraphAutomorphism& a);

}  // namespace mgq
