#include "mgq/graph_cstar.hpp"

#include <algorithm>
#include <functional>
#include <unsupported/Eigen/KroneckerProduct>

namespace mgq {

std::vector<std::string> find_cycle(const Graph& g) {
  const int n = g.num_vertices();
  if (g.undirected()) {
    int e = 0;
    if (g.is_loop(e)) return {g.eid(e)};
    return {g.eid(e), g.eid(g.inv(e))};
  }
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> via(n, -1);
  std::vector<std::string> cycle;
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int e : g.out_edges(v)) {
      int w = g.tgt(e);
      if (state[w] == 1) {
        std::vector<int> edges{e};
        for (int x = v; x != w; x = g.src(via[x])) edges.push_back(via[x]);
        std::reverse(edges.begin(), edges.end());
        for (int f : edges) cycle.push_back(g.eid(f));
        return true;
      }
      if (state[w] == 0) {
        via[w] = e;
        if (dfs(w)) return true;
      }
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && dfs(v)) break;
  return cycle;
}

CKFamily build_ck_family(const Graph& g) {
  auto cycle = find_cycle(g);
  if (!cycle.empty()) {
    std::string text;
    for (const auto& e : cycle) text += (text.empty() ? "" : " ") + e;
    throw CyclicGraph(cycle, "graph has a directed cycle: " + text);
  }
  const int n = g.num_vertices();
  const int ne = g.num_edges();
  CKFamily ck;
  for (int v = 0; v < n; ++v) {
    if (g.is_source(v)) continue;
    std::vector<PathBasisElement> frontier{{v, {}}};
    while (!frontier.empty()) {
      std::vector<PathBasisElement> next;
      for (const auto& path : frontier) {
        ck.basis.push_back(path);
        for (int e : g.in_edges(path.start)) {
          PathBasisElement longer{g.src(e), {e}};
          longer.word.insert(longer.word.end(), path.word.begin(), path.word.end());
          next.push_back(std::move(longer));
        }
      }
      frontier = std::move(next);
    }
  }
  auto sink = [&](const PathBasisElement& p) { return p.word.empty() ? p.start : g.tgt(p.word.back()); };
  auto key = [&](const PathBasisElement& p) {
    std::vector<std::string> w;
    for (int e : p.word) w.push_back(g.eid(e));
    return std::make_pair(g.vid(sink(p)), w);
  };
  std::sort(ck.basis.begin(), ck.basis.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
  ck.n = static_cast<int>(ck.basis.size());

  std::map<std::pair<int, std::vector<int>>, int> pos;
  for (int i = 0; i < ck.n; ++i) pos[{ck.basis[i].start, ck.basis[i].word}] = i;
  ck.s.assign(ne, IntMat::Zero(ck.n, ck.n));
  ck.p.assign(n, IntMat::Zero(ck.n, ck.n));
  for (int i = 0; i < ck.n; ++i) {
    const auto& b = ck.basis[i];
    ck.p[b.start](i, i) = 1;
    for (int e : g.in_edges(b.start)) {
      std::vector<int> w{e};
      w.insert(w.end(), b.word.begin(), b.word.end());
      ck.s[e](pos.at({g.src(e), w}), i) = 1;
    }
  }
  return ck;
}

namespace {

double max_abs(const IntMat& m) { return m.size() ? static_cast<double>(m.cwiseAbs().maxCoeff()) : 0.0; }

Matrix kron(const Matrix& a, const Matrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

}  // namespace

CheckReport verify_ck_family(const CKFamily& ck, const Graph& g) {
  CheckReport r;
  const int n = g.num_vertices();
  const IntMat I = IntMat::Identity(ck.n, ck.n);
  for (int e = 0; e < g.num_edges(); ++e)
    record(r, max_abs(ck.s[e].transpose() * ck.s[e] - ck.p[g.tgt(e)]), 0.0, "s*s != p_t for " + g.eid(e));
  IntMat total = IntMat::Zero(ck.n, ck.n);
  for (int i = 0; i < n; ++i) {
    total += ck.p[i];
    if (g.is_source(i)) {
      IntMat acc = IntMat::Zero(ck.n, ck.n);
      for (int e : g.out_edges(i)) acc += ck.s[e] * ck.s[e].transpose();
      record(r, max_abs(acc - ck.p[i]), 0.0, "sum of s s* != p at " + g.vid(i));
    }
    for (int j = 0; j < n; ++j) {
      IntMat want = i == j ? ck.p[i] : IntMat::Zero(ck.n, ck.n);
      record(r, max_abs(ck.p[i] * ck.p[j] - want), 0.0, "p_" + g.vid(i) + " p_" + g.vid(j));
    }
  }
  record(r, max_abs(total - I), 0.0, "vertex projections do not sum to the identity");
  return r;
}

CoactionMatrices coaction_matrices(const CKFamily& ck, const MagicUnitaryRep& rep, const Graph& g) {
  if (static_cast<int>(ck.s.size()) != g.num_edges() || static_cast<int>(ck.p.size()) != g.num_vertices())
    throw std::invalid_argument("Cuntz-Krieger family belongs to a different graph");
  const int ne = g.num_edges();
  const int n = g.num_vertices();
  const int D = ck.n * rep.dim;
  CoactionMatrices out;
  auto dq = derive_q(rep, g);
  out.q_deviation = dq.deviation;
  for (int t = 0; t < ne; ++t) {
    Matrix S = Matrix::Zero(D, D);
    for (int s = 0; s < ne; ++s) S += kron(ck.s[s].cast<std::complex<double>>(), rep.assign.at(u_sym(g, s, t)));
    out.S.push_back(std::move(S));
  }
  for (int i = 0; i < n; ++i) {
    Matrix P = Matrix::Zero(D, D);
    for (int k = 0; k < n; ++k) P += kron(ck.p[k].cast<std::complex<double>>(), dq.q.at(q_sym(g, k, i)));
    out.P.push_back(std::move(P));
  }
  return out;
}

CheckReport verify_ck_coaction(const CKFamily& ck, const MagicUnitaryRep& rep, const Graph& g) {
  CheckReport r;
  auto cm = coaction_matrices(ck, rep, g);
  const double tol = rep.tol;
  const int n = g.num_vertices();
  record(r, cm.q_deviation, tol, "derived vertex matrix depends on the row edge");
  for (int e = 0; e < g.num_edges(); ++e)
    record(r, operator_norm(cm.S[e].adjoint() * cm.S[e] - cm.P[g.tgt(e)]), tol, "S*S != P_t for " + g.eid(e));
  for (int i = 0; i < n; ++i) {
    record(r, operator_norm(cm.P[i] - cm.P[i].adjoint()), tol, "P_" + g.vid(i) + " not self-adjoint");
    if (g.is_source(i)) {
      Matrix acc = Matrix::Zero(cm.P[i].rows(), cm.P[i].cols());
      for (int e : g.out_edges(i)) acc += cm.S[e] * cm.S[e].adjoint();
      record(r, operator_norm(acc - cm.P[i]), tol, "sum of S S* != P at " + g.vid(i));
    }
    for (int j = 0; j < n; ++j) {
      Matrix want = i == j ? cm.P[i] : Matrix::Zero(cm.P[i].rows(), cm.P[i].cols());
      record(r, operator_norm(cm.P[i] * cm.P[j] - want), tol, "P_" + g.vid(i) + " P_" + g.vid(j));
    }
  }
  return r;
}

CheckReport verify_correspondence_covariance(const Graph& g, const MagicUnitaryRep& rep) {
  CheckReport r;
  const int ne = g.num_edges();
  const int n = g.num_vertices();
  auto dq = derive_q(rep, g);
  record(r, dq.deviation, rep.tol, "derived vertex matrix depends on the row edge");
  for (int j = 0; j < n; ++j) {
    if (!g.is_target(j)) continue;
    for (int t1 = 0; t1 < ne; ++t1)
      for (int t2 = 0; t2 < ne; ++t2) {
        Matrix acc = Matrix::Zero(rep.dim, rep.dim);
        for (int s : g.in_edges(j)) acc += rep.assign.at(u_sym(g, s, t1)).adjoint() * rep.assign.at(u_sym(g, s, t2));
        if (t1 == t2) acc -= dq.q.at(q_sym(g, j, g.tgt(t1)));
        record(r, operator_norm(acc), rep.tol,
               "covariance fails at (" + g.eid(t1) + "," + g.eid(t2) + "," + g.vid(j) + ")");
      }
  }
  return r;
}

}  // namespace mgq
