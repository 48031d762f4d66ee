#include "mgq/matrix_reps.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <unsupported/Eigen/KroneckerProduct>

namespace mgq {

namespace {

Matrix scalar(double v) { return Matrix::Constant(1, 1, v); }

Matrix kron(const Matrix& a, const Matrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

const Matrix& at(const MagicUnitaryRep& rep, const Symbol& s) {
  auto it = rep.assign.find(s);
  if (it == rep.assign.end()) throw MissingSymbol(s);
  return it->second;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Matrix eye(int d) { return Matrix::Identity(d, d); }

}  // namespace

void record(CheckReport& r, double residual, double tol, const std::string& what) {
  if (residual > r.max_residual || r.worst.empty()) {
    r.max_residual = std::max(r.max_residual, residual);
    r.worst = what;
  }
  if (residual > tol) {
    r.ok = false;
    r.violations.push_back(what + " (residual " + num(residual) + ")");
  }
}

VerifyReport verify_relations(const MagicUnitaryRep& rep, const std::vector<Relation>& rels) {
  VerifyReport out;
  for (size_t i = 0; i < rels.size(); ++i) {
    double res = eval_matrix(rels[i], rep.assign, rep.dim);
    ++out.checked;
    out.max_residual = std::max(out.max_residual, res);
    if (res > rep.tol) {
      out.ok = false;
      out.failing.push_back({i, res, relation_text(rels[i])});
    }
  }
  return out;
}

bool assigns_family(const MagicUnitaryRep& rep, const std::string& family) {
  for (const auto& [s, m] : rep.assign)
    if (s.family == family) return true;
  return false;
}

VerifyReport verify_rep(const MagicUnitaryRep& rep, const Presentation& p) {
  std::vector<Relation> rels = p.relations;
  if (assigns_family(rep, "u")) rels.insert(rels.end(), p.coaction.begin(), p.coaction.end());
  return verify_relations(rep, rels);
}

MagicUnitaryRep rep_from_automorphism(const Graph& g, const MultigraphAutomorphism& a) {
  MagicUnitaryRep rep;
  const int n = g.num_vertices();
  const int ne = g.num_edges();
  Perm fE = edge_permutation(g, a);
  Perm finv(n);
  for (int i = 0; i < n; ++i) finv[a.f_V[i]] = i;
  for (int s = 0; s < ne; ++s)
    for (int t = 0; t < ne; ++t) rep.assign[u_sym(g, s, t)] = scalar(fE[t] == s);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rep.assign[q_sym(g, i, j)] = scalar(a.f_V[j] == i);

  auto fill = [&](const Perm& gamma, int m, int k, bool nu) {
    for (int s = 0; s < m; ++s)
      for (int r = 0; r < m; ++r)
        rep.assign[nu ? nu_sym(g, m, k, s, r) : gamma_sym(g, m, k, s, r)] = scalar(gamma[r] == s);
  };
  for (int m : bundle_sizes(g)) {
    for (int k = 0; k < n; ++k) {
      int pre = finv[k];
      for (size_t b = 0; b < g.support().size(); ++b) {
        auto [i, j] = g.support()[b];
        if (i == pre && g.w(i, j) == m) {
          fill(a.gammas[b], m, k, false);
          break;
        }
      }
      for (size_t b = 0; b < g.support().size(); ++b) {
        auto [i, j] = g.support()[b];
        if (j == pre && g.w(i, j) == m) {
          fill(a.gammas[b], m, k, true);
          break;
        }
      }
    }
  }
  auto ms = bundle_sizes(g);
  if (ms.size() == 1) {
    const int m = ms[0];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rep.assign[x_sym(g, i, j)] = scalar(a.f_V[j] == i);
    for (auto [i, j] : g.support()) {
      const Perm& gamma = a.gammas[g.bundle_index(finv[i], finv[j])];
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) rep.assign[p_sym(g, i, j, r, s)] = scalar(gamma[s] == r);
    }
  }
  return rep;
}

Matrix line_projection(double angle) {
  Eigen::Vector2cd v(std::cos(angle), std::sin(angle));
  return v * v.adjoint();
}

std::vector<std::vector<Matrix>> two_projection_family(int m, const Matrix& p, const Matrix& q) {
  const int d = static_cast<int>(p.rows());
  std::vector<std::vector<Matrix>> F(m, std::vector<Matrix>(m, Matrix::Zero(d, d)));
  for (int b = 0; 2 * b < m; ++b) {
    int i = 2 * b;
    if (i + 1 == m) {
      F[i][i] = eye(d);
      break;
    }
    const Matrix& e = b % 2 == 0 ? p : q;
    F[i][i] = F[i + 1][i + 1] = e;
    F[i][i + 1] = F[i + 1][i] = eye(d) - e;
  }
  return F;
}

PairFamilies default_pair_families(const Graph& g, double angle) {
  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1;
  Matrix q0 = line_projection(angle);
  PairFamilies out;
  int c = 0;
  for (auto [i, j] : g.support()) {
    if (g.undirected() && i > j) continue;
    int m = static_cast<int>(g.w(i, j));
    auto F = c % 2 == 0 ? two_projection_family(m, p0, q0) : two_projection_family(m, q0, p0);
    ++c;
    out[{i, j}] = F;
    if (g.undirected()) out[{j, i}] = F;
  }
  return out;
}

MagicUnitaryRep build_wreath_rep(const Graph& g, const MagicUnitaryRep& x_rep, const PairFamilies& p_reps) {
  auto ms = bundle_sizes(g);
  if (ms.size() != 1) throw std::invalid_argument("wreath rep needs a uniform multigraph");
  const int m = ms[0];
  const int n = g.num_vertices();
  const bool has_x = assigns_family(x_rep, "x");
  auto xs = [&](int i, int j) { return at(x_rep, has_x ? x_sym(g, i, j) : q_sym(g, i, j)); };

  MagicUnitaryRep as_q;
  as_q.dim = x_rep.dim;
  as_q.tol = x_rep.tol;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) as_q.assign[q_sym(g, i, j)] = xs(i, j);
  auto sbic = verify_rep(as_q, emit_presentation(g, Kind::SBic));
  if (!sbic.ok) throw std::invalid_argument("x rep violates the SBic relations (residual " + num(sbic.max_residual) + ")");

  int d2 = -1;
  for (auto [i, j] : g.support()) {
    auto it = p_reps.find({i, j});
    if (it == p_reps.end()) throw std::invalid_argument("missing P family for (" + g.vid(i) + "," + g.vid(j) + ")");
    const auto& F = it->second;
    if (static_cast<int>(F.size()) != m) throw std::invalid_argument("P family of the wrong degree");
    for (const auto& row : F) {
      if (static_cast<int>(row.size()) != m) throw std::invalid_argument("P family of the wrong degree");
      for (const auto& e : row) {
        if (d2 < 0) d2 = static_cast<int>(e.rows());
        if (e.rows() != d2 || e.cols() != d2) throw DimensionMismatch("P families of different dimensions");
        if (operator_norm(e - e.adjoint()) > x_rep.tol || operator_norm(e * e - e) > x_rep.tol)
          throw std::invalid_argument("P family entry is not a projection");
      }
    }
    for (int a = 0; a < m; ++a) {
      Matrix row = Matrix::Zero(d2, d2), col = Matrix::Zero(d2, d2);
      for (int b = 0; b < m; ++b) {
        row += F[a][b];
        col += F[b][a];
      }
      if (operator_norm(row - eye(d2)) > x_rep.tol || operator_norm(col - eye(d2)) > x_rep.tol)
        throw std::invalid_argument("P family is not a quantum permutation");
    }
    if (g.undirected()) {
      auto jt = p_reps.find({j, i});
      if (jt == p_reps.end()) throw std::invalid_argument("missing P family for (" + g.vid(j) + "," + g.vid(i) + ")");
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (operator_norm(F[a][b] - jt->second[a][b]) > x_rep.tol)
            throw std::invalid_argument("undirected graph needs equal P families on opposite pairs");
    }
  }

  const int d1 = x_rep.dim;
  MagicUnitaryRep rep;
  rep.dim = d2 * d1;
  rep.tol = x_rep.tol;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix X = kron(eye(d2), xs(i, j));
      rep.assign[x_sym(g, i, j)] = X;
      rep.assign[q_sym(g, i, j)] = X;
    }
  for (auto [i, j] : g.support()) {
    const auto& F = p_reps.at({i, j});
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) rep.assign[p_sym(g, i, j, r, s)] = kron(F[r][s], eye(d1));
  }
  const int ne = g.num_edges();
  for (int sg = 0; sg < ne; ++sg)
    for (int t = 0; t < ne; ++t) {
      int i = g.src(sg), j = g.tgt(sg), k = g.src(t), l = g.tgt(t);
      rep.assign[u_sym(g, sg, t)] = rep.assign.at(p_sym(g, i, j, g.local(sg), g.local(t))) *
                                    rep.assign.at(x_sym(g, i, k)) * rep.assign.at(x_sym(g, j, l));
    }
  return rep;
}

WitnessReport example5_witness(const Graph& g, double angle, bool gamma_factor) {
  const int n = g.num_vertices();
  if (!g.undirected() || n != 4) throw std::invalid_argument("witness needs an undirected graph on four vertices");
  auto adjacent = [&](int i, int j) { return g.w(i, j) != 0; };
  for (int i = 0; i < n; ++i)
    if (adjacent(i, i)) throw std::invalid_argument("witness needs a loop-free graph");
  int a = 0, b = -1;
  for (int j = 1; j < n; ++j)
    if (!adjacent(a, j)) {
      if (b >= 0) throw std::invalid_argument("witness needs non-adjacent pairs forming a perfect matching");
      b = j;
    }
  if (b < 0) throw std::invalid_argument("witness needs non-adjacent pairs forming a perfect matching");
  std::vector<int> rest;
  for (int j = 1; j < n; ++j)
    if (j != b) rest.push_back(j);
  int c = rest[0], d = rest[1];
  if (adjacent(c, d) || !adjacent(a, c) || !adjacent(a, d) || !adjacent(b, c) || !adjacent(b, d))
    throw std::invalid_argument("witness needs non-adjacent pairs forming a perfect matching");

  Matrix p0 = Matrix::Zero(2, 2), t0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1;
  t0(0, 0) = 1;
  const int extra = gamma_factor ? 2 : 1;
  auto lift = [&](const Matrix& m) { return kron(m, eye(extra)); };
  Matrix I = lift(eye(4));
  Matrix P = lift(kron(p0, eye(2)));
  Matrix Q = lift(kron(line_projection(angle), eye(2)));
  Matrix T = lift(kron(eye(2), t0));
  Matrix nP = I - P, nQ = I - Q, nT = I - T;
  const int order[4] = {a, b, c, d};
  const Matrix table[4][4] = {{P * T, nP * T, P * nT, nP * nT},
                              {nP * T, P * T, nP * nT, P * nT},
                              {Q * nT, nQ * nT, Q * T, nQ * T},
                              {nQ * nT, Q * nT, nQ * T, Q * T}};

  WitnessReport w;
  w.a = g.vid(a);
  w.b = g.vid(b);
  w.c = g.vid(c);
  w.d = g.vid(d);
  auto& rep = w.rep;
  rep.dim = 4 * extra;
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) rep.assign[q_sym(g, order[r], order[s])] = table[r][s];

  Matrix e = Matrix::Zero(extra, extra);
  e(0, 0) = 1;
  for (int m : bundle_sizes(g)) {
    auto F = two_projection_family(m, e, e);
    for (int k = 0; k < n; ++k)
      for (int s = 0; s < m; ++s)
        for (int r = 0; r < m; ++r) rep.assign[gamma_sym(g, m, k, s, r)] = kron(eye(4), F[s][r]);
  }
  auto qst = emit_presentation(g, Kind::QSTUndirected);
  for (const auto& rel : qst.coaction)
    rep.assign[rel.lhs.terms().at(0).mono.at(0).sym] = eval_poly(rel.rhs, rep.assign, rep.dim);

  w.sban_residual = verify_rep(rep, emit_presentation(g, Kind::SBan)).max_residual;
  w.qst_residual = verify_rep(rep, qst).max_residual;
  const Matrix& x = rep.assign.at(q_sym(g, a, d));
  const Matrix& y = rep.assign.at(q_sym(g, c, b));
  w.commutator = operator_norm(x * y - y * x);
  w.degenerate = !(angle > 0 && angle < std::numbers::pi / 2) || w.commutator <= rep.tol;
  return w;
}

DerivedQ derive_q(const MagicUnitaryRep& rep, const Graph& g) {
  const int n = g.num_vertices();
  const int d = rep.dim;
  DerivedQ out;
  auto block = [&](int sigma, const std::vector<int>& taus) {
    Matrix acc = Matrix::Zero(d, d);
    for (int t : taus) acc += at(rep, u_sym(g, sigma, t));
    return acc;
  };
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Matrix v;
      bool by_source = g.is_source(i);
      int sigma = by_source ? g.out_edges(i).front() : g.in_edges(i).front();
      bool present = by_source ? g.is_source(k) : g.is_target(k);
      v = present ? block(sigma, by_source ? g.out_edges(k) : g.in_edges(k)) : Matrix::Zero(d, d);
      if (g.is_source(i))
        for (int s : g.out_edges(i)) {
          Matrix w = g.is_source(k) ? block(s, g.out_edges(k)) : Matrix::Zero(d, d);
          out.deviation = std::max(out.deviation, operator_norm(w - v));
        }
      if (g.is_target(i))
        for (int s : g.in_edges(i)) {
          Matrix w = g.is_target(k) ? block(s, g.in_edges(k)) : Matrix::Zero(d, d);
          out.deviation = std::max(out.deviation, operator_norm(w - v));
        }
      out.q[q_sym(g, i, k)] = v;
    }
  return out;
}

CheckReport block_invariance_check(const MagicUnitaryRep& rep, const Graph& g) {
  CheckReport r;
  const int ne = g.num_edges();
  const int n = g.num_vertices();
  const double tol = rep.tol;
  auto weight = [&](int e) { return g.w(g.src(e), g.tgt(e)); };
  for (int s = 0; s < ne; ++s)
    for (int t = 0; t < ne; ++t) {
      const Matrix& u = at(rep, u_sym(g, s, t));
      std::string pair = "(" + g.eid(s) + "," + g.eid(t) + ")";
      if (weight(s) != weight(t)) record(r, operator_norm(u), tol, "nonzero entry across components at " + pair);
      if (!g.is_loop(s) && g.is_loop(t)) record(r, operator_norm(u), tol, "non-loop row on a loop column at " + pair);
      if (g.is_loop(s) && g.is_loop(t)) {
        record(r, operator_norm(u - u.adjoint()), tol, "loop entry not self-adjoint at " + pair);
        record(r, operator_norm(u * u - u), tol, "loop entry not idempotent at " + pair);
      }
    }
  auto dq = derive_q(rep, g);
  record(r, dq.deviation, tol, "derived vertex matrix depends on the row edge");
  const double wtol = static_cast<double>(n) * ne * tol;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix lhs = Matrix::Zero(rep.dim, rep.dim), rhs = lhs;
      for (int k = 0; k < n; ++k) {
        lhs += static_cast<double>(g.w(k, j)) * dq.q.at(q_sym(g, i, k));
        rhs += static_cast<double>(g.w(i, k)) * dq.q.at(q_sym(g, k, j));
      }
      record(r, operator_norm(lhs - rhs), wtol, "QW != WQ at (" + g.vid(i) + "," + g.vid(j) + ")");
    }
  return r;
}

CheckReport st_form_check(const MagicUnitaryRep& rep, const Graph& g) {
  CheckReport r;
  const int ne = g.num_edges();
  const double tol = rep.tol;
  const bool has_u = assigns_family(rep, "u");
  const bool has_nu = assigns_family(rep, "nu");
  const Matrix zero = Matrix::Zero(rep.dim, rep.dim);
  auto nu = [&](int m, int k, int l, int s, int rr) -> const Matrix& {
    if (has_nu) return at(rep, nu_sym(g, m, l, s, rr));
    return at(rep, gamma_sym(g, m, g.undirected() ? l : k, s, rr));
  };
  for (int sg = 0; sg < ne; ++sg)
    for (int t = 0; t < ne; ++t) {
      int k = g.src(sg), l = g.tgt(sg), i = g.src(t), j = g.tgt(t);
      int m = static_cast<int>(g.w(k, l));
      int s = g.local(sg), rr = g.local(t);
      std::string pair = "(" + g.eid(sg) + "," + g.eid(t) + ")";
      bool same = g.w(i, j) == m;
      const Matrix& qk = at(rep, q_sym(g, k, i));
      const Matrix& ql = at(rep, q_sym(g, l, j));
      Matrix u = has_u ? at(rep, u_sym(g, sg, t)) : (same ? Matrix(qk * ql * at(rep, gamma_sym(g, m, k, s, rr))) : zero);
      if (!same) {
        record(r, operator_norm(u), tol, "nonzero entry across components at " + pair);
        continue;
      }
      record(r, operator_norm(u - at(rep, gamma_sym(g, m, k, s, rr)) * qk * ql), tol, "source form fails at " + pair);
      record(r, operator_norm(u - qk * ql * nu(m, k, l, s, rr)), tol, "target form fails at " + pair);
    }
  for (int m : bundle_sizes(g)) {
    std::vector<std::pair<int, int>> bundles;
    for (auto [k, l] : g.support())
      if (g.w(k, l) == m) bundles.emplace_back(k, l);
    for (auto [k, l] : bundles)
      for (int s = 0; s < m; ++s)
        for (int rr = 0; rr < m; ++rr) {
          const Matrix& gk = at(rep, gamma_sym(g, m, k, s, rr));
          if (has_nu || g.undirected())
            record(r, operator_norm(gk - nu(m, k, l, s, rr)), tol,
                   "gamma and nu differ along " + g.vid(k) + "->" + g.vid(l));
          for (auto [k2, l2] : bundles)
            if (l2 == l && k2 > k)
              record(r, operator_norm(gk - at(rep, gamma_sym(g, m, k2, s, rr))), tol,
                     "gamma differs between sources " + g.vid(k) + " and " + g.vid(k2) + " of " + g.vid(l));
        }
  }
  return r;
}

MagicUnitaryRep conjugate(const MagicUnitaryRep& rep, const Matrix& U) {
  MagicUnitaryRep out = rep;
  for (auto& [s, m] : out.assign) m = U * m * U.adjoint();
  return out;
}

}  // namespace mgq
