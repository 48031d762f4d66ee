#pragma once

#include <map>
#include <string>
#include <vector>

#include "mgq/multigraph.hpp"
#include "mgq/ncpoly.hpp"

namespace mgq {

enum class Kind { QBan, QBic, QSym, QBicUndirected, QS, QT, QST, QSTUndirected, SBan, SBic, FreeWreath };

Kind parse_kind(const std::string& s);  // case-insensitive
std::string to_string(Kind k);
bool uses_edge_generators(Kind k);

class KindMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CoproductTerm {
  Coeff c;
  Monomial left, right;
};

struct Presentation {
  Kind kind = Kind::QBan;
  bool undirected = false;
  std::vector<Symbol> generators;
  std::vector<Relation> relations;
  // For kinds whose generators are not the edge matrix: relations expressing
  // every u[sigma][tau] through the generators (the canonical coaction).
  std::vector<Relation> coaction;
  std::vector<std::pair<Symbol, std::vector<CoproductTerm>>> coproduct;
};

Symbol u_sym(const Graph& g, int sigma, int tau);
Symbol q_sym(const Graph& g, int i, int j);
Symbol x_sym(const Graph& g, int i, int j);
Symbol p_sym(const Graph& g, int i, int j, int r, int s);  // r,s 0-based
Symbol gamma_sym(const Graph& g, int m, int k, int s, int r);
Symbol nu_sym(const Graph& g, int m, int l, int s, int r);

// QST on an undirected graph is emitted as QSTUndirected, and QBan, QBic and
// QSym on an undirected graph carry the inversion compatibility relations.
Presentation emit_presentation(const Graph& g, Kind kind);

// q[i][k] expressed through u, plus the bimodule identities.
std::vector<Relation> derived_vertex_relations(const Graph& g, Kind kind);

const std::vector<std::pair<Symbol, std::vector<CoproductTerm>>>& coproduct_table(const Presentation& p);

std::string presentation_text(const Presentation& p);
std::string presentation_json(const Presentation& p);

}  // namespace mgq
