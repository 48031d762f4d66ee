#include "mgq/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json_detail.hpp"

namespace mgq {

using detail::ojson;

std::string read_file(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError("", "cannot open " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file);
  out << text;
}

namespace {

ojson parse_json(const std::string& text) {
  try {
    return ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
}

const ojson& field(const ojson& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  std::string sub = path.empty() ? key : path + "." + key;
  if (it == obj.end()) throw ParseError(sub, "missing");
  return *it;
}

std::string str(const ojson& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

const ojson& array(const ojson& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

std::string idx(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

}  // namespace

Multigraph parse_multigraph(const std::string& text) {
  ojson j = parse_json(text);
  if (!j.is_object()) throw ParseError("", "expected an object");
  Multigraph g;
  const auto& vs = array(field(j, "vertices", ""), "vertices");
  for (size_t i = 0; i < vs.size(); ++i) g.vertices.push_back(str(vs[i], idx("vertices", i)));
  std::set<std::string> vset(g.vertices.begin(), g.vertices.end());
  const auto& es = array(field(j, "edges", ""), "edges");
  for (size_t i = 0; i < es.size(); ++i) {
    std::string p = idx("edges", i);
    Edge e;
    e.id = str(field(es[i], "id", p), p + ".id");
    e.src = str(field(es[i], "src", p), p + ".src");
    e.tgt = str(field(es[i], "tgt", p), p + ".tgt");
    if (!vset.count(e.src)) throw ParseError(p + ".src", "unknown vertex " + e.src);
    if (!vset.count(e.tgt)) throw ParseError(p + ".tgt", "unknown vertex " + e.tgt);
    g.edges.push_back(std::move(e));
  }
  if (j.contains("inversion")) {
    std::set<std::string> eset;
    for (const auto& e : g.edges) eset.insert(e.id);
    const auto& inv = array(j["inversion"], "inversion");
    g.inversion.emplace();
    for (size_t i = 0; i < inv.size(); ++i) {
      std::string p = idx("inversion", i);
      const auto& pair = array(inv[i], p);
      if (pair.size() != 2) throw ParseError(p, "expected a pair of edge ids");
      std::string a = str(pair[0], idx(p, 0)), b = str(pair[1], idx(p, 1));
      if (!eset.count(a)) throw ParseError(idx(p, 0), "unknown edge " + a);
      if (!eset.count(b)) throw ParseError(idx(p, 1), "unknown edge " + b);
      g.inversion->emplace_back(a, b);
    }
  }
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "vertices" && it.key() != "edges" && it.key() != "inversion")
      throw ParseError(it.key(), "unknown field");
  return g;
}

Multigraph load_multigraph(const std::string& file) { return parse_multigraph(read_file(file)); }

std::string multigraph_to_json(const Multigraph& g) {
  ojson j;
  j["vertices"] = g.vertices;
  j["edges"] = ojson::array();
  for (const auto& e : g.edges) j["edges"].push_back({{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}});
  if (g.inversion) {
    j["inversion"] = ojson::array();
    for (const auto& [a, b] : *g.inversion) j["inversion"].push_back({a, b});
  }
  return j.dump();
}

MagicUnitaryRep parse_rep(const std::string& text) {
  ojson j = parse_json(text);
  MagicUnitaryRep rep;
  const auto& dim = field(j, "dim", "");
  if (!dim.is_number_integer() || dim.get<int>() < 1) throw ParseError("dim", "expected a positive integer");
  rep.dim = dim.get<int>();
  if (j.contains("tol")) {
    if (!j["tol"].is_number()) throw ParseError("tol", "expected a number");
    rep.tol = j["tol"].get<double>();
  }
  const auto& assign = field(j, "assign", "");
  if (!assign.is_object()) throw ParseError("assign", "expected an object");
  for (auto it = assign.begin(); it != assign.end(); ++it) {
    std::string p = "assign." + it.key();
    Symbol s;
    try {
      s = parse_symbol_text(it.key());
    } catch (const std::invalid_argument& e) {
      throw ParseError(p, e.what());
    }
    const auto& rows = array(*it, p);
    if (static_cast<int>(rows.size()) != rep.dim) throw ParseError(p, "expected " + std::to_string(rep.dim) + " rows");
    Matrix m(rep.dim, rep.dim);
    for (int r = 0; r < rep.dim; ++r) {
      const auto& row = array(rows[r], idx(p, r));
      if (static_cast<int>(row.size()) != rep.dim)
        throw ParseError(idx(p, r), "expected " + std::to_string(rep.dim) + " entries");
      for (int c = 0; c < rep.dim; ++c) {
        std::string ep = idx(idx(p, r), c);
        const auto& e = row[c];
        if (e.is_number()) {
          m(r, c) = e.get<double>();
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
          m(r, c) = {e[0].get<double>(), e[1].get<double>()};
        } else {
          throw ParseError(ep, "expected [re, im]");
        }
      }
    }
    rep.assign[s] = std::move(m);
  }
  return rep;
}

MagicUnitaryRep load_rep(const std::string& file) { return parse_rep(read_file(file)); }

std::string rep_to_json(const MagicUnitaryRep& rep) {
  ojson j;
  j["dim"] = rep.dim;
  j["tol"] = rep.tol;
  j["assign"] = ojson::object();
  for (const auto& [s, m] : rep.assign) {
    ojson rows = ojson::array();
    for (int r = 0; r < m.rows(); ++r) {
      ojson row = ojson::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
      rows.push_back(std::move(row));
    }
    j["assign"][symbol_text(s)] = std::move(rows);
  }
  return j.dump();
}

}  // namespace mgq
