#include "mgq/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "mgq/abelianization.hpp"
#include "mgq/graph_cstar.hpp"
#include "mgq/io.hpp"

namespace mgq::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  bool json = false;
  double tol = 1e-9;
  std::string graph, rep, kind, flavor = "all", format = "text", output;
  bool list = false, oracle = false, derived = false, gamma = false;
  double angle = std::numbers::pi / 4;
};

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::setprecision(6) << v;
  return ss.str();
}

Graph load_graph(const std::string& file, std::ostream& err) {
  Multigraph raw = load_multigraph(file);
  if (raw.edges.size() > 64)
    err << "warning: " << raw.edges.size() << " edges; enumeration may be infeasible\n";
  return Graph(std::move(raw));
}

ojson residual_json(const VerifyReport& v) {
  ojson j;
  j["ok"] = v.ok;
  j["max_residual"] = v.max_residual;
  j["checked"] = v.checked;
  j["failing"] = ojson::array();
  for (const auto& f : v.failing) j["failing"].push_back({{"relation", f.text}, {"residual", f.residual}});
  return j;
}

ojson check_json(const CheckReport& r) {
  return {{"ok", r.ok}, {"max_residual", r.max_residual}, {"worst", r.worst}, {"violations", r.violations}};
}

void print_failures(std::ostream& out, const std::vector<FailingRelation>& failing) {
  for (size_t i = 0; i < failing.size() && i < 20; ++i)
    out << "  fails (" << fmt(failing[i].residual) << "): " << failing[i].text << "\n";
  if (failing.size() > 20) out << "  ... " << failing.size() - 20 << " more\n";
}

void print_check(std::ostream& out, const std::string& name, const CheckReport& r) {
  out << name << ": " << (r.ok ? "pass" : "FAIL") << " (max residual " << fmt(r.max_residual) << ")\n";
  for (size_t i = 0; i < r.violations.size() && i < 20; ++i) out << "  " << r.violations[i] << "\n";
}

int cmd_validate(const Options& o, std::ostream& out) {
  auto rep = validate(load_multigraph(o.graph));
  if (o.json) {
    out << ojson{{"valid", rep.valid}, {"undirected", rep.undirected}, {"violations", rep.violations}}.dump() << "\n";
  } else {
    out << (rep.valid ? "valid " : "invalid ") << (rep.undirected ? "undirected" : "directed") << "\n";
    for (const auto& v : rep.violations) out << "  " << v << "\n";
  }
  return rep.valid ? kOk : kFailed;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph, err);
  auto comps = uniform_decompose(g);
  auto repn = canonical_edge_representation(g);
  ojson j;
  j["undirected"] = g.undirected();
  j["W"] = g.W();
  j["components"] = ojson::array();
  for (const auto& c : comps) {
    j["components"].push_back({{"m", c.m},
                               {"vertices", c.vertices},
                               {"edges", c.edges},
                               {"sources", c.sources},
                               {"targets", c.targets},
                               {"path_classes", path_classes(c, g)}});
  }
  j["representation"] = ojson::object();
  for (const auto& [e, l] : repn) j["representation"][e] = {l.src, l.tgt, l.r};
  if (o.json) {
    out << j.dump() << "\n";
    return kOk;
  }
  out << (g.undirected() ? "undirected" : "directed") << " multigraph, " << g.num_vertices() << " vertices, "
      << g.num_edges() << " edges\nW:\n";
  for (const auto& row : g.W()) {
    out << " ";
    for (auto x : row) out << " " << x;
    out << "\n";
  }
  for (const auto& c : comps) {
    out << "component m=" << c.m << ": " << c.edges.size() << " edges, vertices";
    for (const auto& v : c.vertices) out << " " << v;
    out << "; path classes";
    for (const auto& cls : path_classes(c, g)) {
      out << " {";
      for (size_t i = 0; i < cls.size(); ++i) out << (i ? "," : "") << cls[i];
      out << "}";
    }
    out << "\n";
  }
  for (const auto& [e, l] : repn) out << "  " << e << " = (" << l.src << "," << l.tgt << ")" << l.r << "\n";
  return kOk;
}

int cmd_aut(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph, err);
  Flavor f = parse_flavor(o.flavor);
  auto grp = enumerate_automorphisms(g, f);
  bool ok = true;
  std::string oracle_note;
  if (o.oracle) {
    if (f != Flavor::All) throw std::invalid_argument("--oracle compares the full group only");
    auto brute = brute_force_oracle(g);
    ok = brute.elements == grp.elements;
    oracle_note = ok ? "oracle agrees" : "oracle MISMATCH (oracle order " + std::to_string(brute.order()) + ")";
  }
  if (o.json) {
    ojson j;
    j["flavor"] = to_string(f);
    j["order"] = grp.order();
    j["formula"] = order_formula(g);
    if (o.oracle) j["oracle_agrees"] = ok;
    if (o.list) {
      j["elements"] = ojson::array();
      for (const auto& a : grp.elements) j["elements"].push_back(ojson::parse(automorphism_to_json(g, a)));
    }
    out << j.dump() << "\n";
  } else {
    out << "order " << grp.order() << "\n";
    if (o.oracle) out << oracle_note << "\n";
    if (o.list)
      for (const auto& a : grp.elements) out << automorphism_to_json(g, a) << "\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_present(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph, err);
  auto p = emit_presentation(g, parse_kind(o.kind));
  if (o.format == "json" || o.json) {
    ojson j = ojson::parse(presentation_json(p));
    if (o.derived) {
      j["derived"] = ojson::array();
      for (const auto& r : derived_vertex_relations(g, p.kind)) j["derived"].push_back(ojson::parse(relation_to_json(r)));
    }
    out << j.dump() << "\n";
    return kOk;
  }
  out << presentation_text(p);
  if (o.derived) {
    auto d = derived_vertex_relations(g, p.kind);
    out << "derived " << d.size() << "\n";
    for (const auto& r : d) out << "  " << relation_text(r) << "\n";
  }
  return kOk;
}

Flavor flavor_for(Kind k) {
  switch (k) {
    case Kind::QS: return Flavor::Source;
    case Kind::QT: return Flavor::Target;
    case Kind::QST:
    case Kind::QSTUndirected: return Flavor::Both;
    default: return Flavor::All;
  }
}

int cmd_points(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph, err);
  auto p = emit_presentation(g, parse_kind(o.kind));
  auto pts = classical_points(p, g);
  MatchReport m;
  std::string against;
  if (p.kind == Kind::SBan || p.kind == Kind::SBic) {
    m = match_against_vertex_perms(g, pts, adjacency_symmetries(g));
    against = "adjacency symmetries";
  } else {
    Flavor f = flavor_for(p.kind);
    m = match_against_aut(p, g, pts, enumerate_automorphisms(g, f));
    against = "automorphisms (" + to_string(f) + ")";
  }
  if (o.json) {
    ojson j;
    j["kind"] = to_string(p.kind);
    j["count"] = pts.size();
    j["match"] = {{"against", against}, {"ok", m.ok}, {"group", m.group}, {"message", m.message}};
    if (o.list) {
      j["points"] = ojson::array();
      for (const auto& pt : pts) {
        ojson ones = ojson::array();
        for (const auto& [s, v] : pt.assignment)
          if (v) ones.push_back(symbol_text(s));
        j["points"].push_back(ones);
      }
    }
    out << j.dump() << "\n";
  } else {
    out << pts.size() << "\n";
    out << (m.ok ? "matches " : "MISMATCH with ") << against << ": " << m.message << "\n";
    if (o.list)
      for (const auto& pt : pts) out << "  " << point_text(pt) << "\n";
  }
  return m.ok ? kOk : kFailed;
}

int cmd_verify_rep(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph, err);
  auto rep = load_rep(o.rep);
  rep.tol = o.tol;
  auto p = emit_presentation(g, parse_kind(o.kind));
  std::vector<Relation> rels = p.relations;
  if (assigns_family(rep, "u")) rels.insert(rels.end(), p.coaction.begin(), p.coaction.end());
  if (uses_edge_generators(p.kind) && assigns_family(rep, "q")) {
    auto d = derived_vertex_relations(g, p.kind);
    rels.insert(rels.end(), d.begin(), d.end());
  }
  auto v = verify_relations(rep, rels);
  if (o.json) {
    ojson j = residual_json(v);
    j["kind"] = to_string(p.kind);
    out << j.dump() << "\n";
  } else {
    out << to_string(p.kind) << ": " << (v.ok ? "pass" : "FAIL") << ", " << v.checked << " relations, max residual "
        << fmt(v.max_residual) << "\n";
    print_failures(out, v.failing);
  }
  return v.ok ? kOk : kFailed;
}

int cmd_wreath(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph, err);
  auto syms = enumerate_vertex_symmetries(g);
  const Perm& f = syms.back();
  MagicUnitaryRep x;
  x.tol = o.tol;
  for (int i = 0; i < g.num_vertices(); ++i)
    for (int j = 0; j < g.num_vertices(); ++j) x.assign[q_sym(g, i, j)] = Matrix::Constant(1, 1, f[j] == i ? 1.0 : 0.0);
  auto rep = build_wreath_rep(g, x, default_pair_families(g, o.angle));
  Kind k = g.undirected() ? Kind::QBicUndirected : Kind::QBic;
  auto v = verify_rep(rep, emit_presentation(g, k));
  auto b = block_invariance_check(rep, g);
  if (!o.output.empty()) write_file(o.output, rep_to_json(rep) + "\n");
  if (o.json) {
    out << ojson{{"dim", rep.dim}, {"kind", to_string(k)}, {"verify", residual_json(v)}, {"block", check_json(b)}}.dump()
        << "\n";
  } else {
    out << "dimension " << rep.dim << "\n"
        << to_string(k) << ": " << (v.ok ? "pass" : "FAIL") << " (max residual " << fmt(v.max_residual) << ")\n";
    print_failures(out, v.failing);
    print_check(out, "block invariance", b);
    if (!o.output.empty()) out << "wrote " << o.output << "\n";
  }
  return v.ok && b.ok ? kOk : kFailed;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph, err);
  auto w = example5_witness(g, o.angle, o.gamma);
  w.rep.tol = o.tol;
  auto st = st_form_check(w.rep, g);
  bool ok = w.sban_residual <= o.tol && w.qst_residual <= o.tol && st.ok;
  if (o.json) {
    out << ojson{{"order", {w.a, w.b, w.c, w.d}},
                 {"dim", w.rep.dim},
                 {"sban_residual", w.sban_residual},
                 {"qst_residual", w.qst_residual},
                 {"st_form", check_json(st)},
                 {"commutator", w.commutator},
                 {"degenerate", w.degenerate}}
               .dump()
        << "\n";
  } else {
    out << "vertex order " << w.a << " " << w.b << " " << w.c << " " << w.d << ", dimension " << w.rep.dim << "\n"
        << "SBan residual " << fmt(w.sban_residual) << "\n"
        << "QST residual " << fmt(w.qst_residual) << "\n";
    print_check(out, "st form", st);
    out << "commutator ||[q[" << w.a << "][" << w.d << "], q[" << w.c << "][" << w.b << "]]|| = " << fmt(w.commutator)
        << "\n";
    if (w.degenerate) out << "degenerate angle: the witness is commutative\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_cstar(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o.graph, err);
  auto ck = build_ck_family(g);
  auto fam = verify_ck_family(ck, g);
  ojson j;
  j["dimension"] = ck.n;
  j["family"] = check_json(fam);
  bool ok = fam.ok;
  CheckReport co, cov;
  if (!o.rep.empty()) {
    auto rep = load_rep(o.rep);
    rep.tol = o.tol;
    co = verify_ck_coaction(ck, rep, g);
    cov = verify_correspondence_covariance(g, rep);
    ok = ok && co.ok && cov.ok;
    j["coaction"] = check_json(co);
    j["covariance"] = check_json(cov);
  }
  if (o.json) {
    out << j.dump() << "\n";
  } else {
    out << "dimension " << ck.n << "\n";
    print_check(out, "Cuntz-Krieger family", fam);
    if (!o.rep.empty()) {
      print_check(out, "coaction", co);
      print_check(out, "covariance", cov);
    }
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Classical and quantum symmetries of finite multigraphs", "mgq"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--tol", o.tol, "Residual tolerance")->check(CLI::PositiveNumber);

  auto graph_arg = [&](CLI::App* c) { c->add_option("graph", o.graph, "Multigraph JSON file")->required(); };
  auto kind_opt = [&](CLI::App* c) { c->add_option("--kind", o.kind, "Presentation kind")->required(); };

  auto* validate_cmd = app.add_subcommand("validate", "Check multigraph invariants");
  graph_arg(validate_cmd);
  auto* decompose_cmd = app.add_subcommand("decompose", "Adjacency, uniform components, edge representation");
  graph_arg(decompose_cmd);
  auto* aut_cmd = app.add_subcommand("aut", "Classical automorphism group");
  graph_arg(aut_cmd);
  aut_cmd->add_option("--flavor", o.flavor, "all, source, target or both")
      ->check(CLI::IsMember({"all", "source", "target", "both"}));
  aut_cmd->add_flag("--list", o.list, "Print every element");
  aut_cmd->add_flag("--oracle", o.oracle, "Compare with the brute force oracle");
  auto* present_cmd = app.add_subcommand("present", "Emit a presentation");
  graph_arg(present_cmd);
  kind_opt(present_cmd);
  present_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  present_cmd->add_flag("--derived", o.derived, "Append the derived vertex relations");
  auto* points_cmd = app.add_subcommand("classical-points", "Boolean commutative solutions");
  graph_arg(points_cmd);
  kind_opt(points_cmd);
  points_cmd->add_flag("--list", o.list, "Print every point");
  auto* verify_cmd = app.add_subcommand("verify-rep", "Check a matrix representation");
  graph_arg(verify_cmd);
  verify_cmd->add_option("rep", o.rep, "Representation JSON file")->required();
  kind_opt(verify_cmd);
  auto* wreath_cmd = app.add_subcommand("wreath-rep", "Build a wreath product representation");
  graph_arg(wreath_cmd);
  wreath_cmd->add_option("--angle", o.angle, "Angle of the second projection");
  wreath_cmd->add_option("-o,--output", o.output, "Write the representation here");
  auto* witness_cmd = app.add_subcommand("witness", "Square-type noncommutativity witness");
  graph_arg(witness_cmd);
  witness_cmd->add_option("--angle", o.angle, "Angle of the second projection");
  witness_cmd->add_flag("--gamma", o.gamma, "Put a nontrivial gamma family on an extra factor");
  auto* cstar_cmd = app.add_subcommand("cstar", "Cuntz-Krieger family and induced coaction");
  graph_arg(cstar_cmd);
  cstar_cmd->add_option("--rep", o.rep, "Representation JSON file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (decompose_cmd->parsed()) return cmd_decompose(o, out, err);
    if (aut_cmd->parsed()) return cmd_aut(o, out, err);
    if (present_cmd->parsed()) return cmd_present(o, out, err);
    if (points_cmd->parsed()) return cmd_points(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify_rep(o, out, err);
    if (wreath_cmd->parsed()) return cmd_wreath(o, out, err);
    if (witness_cmd->parsed()) return cmd_witness(o, out, err);
    if (cstar_cmd->parsed()) return cmd_cstar(o, out, err);
  } catch (const CyclicGraph& e) {
    err << "error: CyclicGraph: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidGraph& e) {
    err << "error: invalid multigraph\n";
    for (const auto& v : e.violations()) err << "  " << v << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace mgq::cli
