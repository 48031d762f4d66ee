#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mgq/matrix_reps.hpp"
#include "mgq/ncpoly.hpp"

using namespace mgq;

namespace {

Symbol u(const std::string& a, const std::string& b) { return {"u", {a, b}}; }
Symbol p_gen() { return {"x", {"a", "a"}}; }
Symbol q_gen() { return {"x", {"a", "b"}}; }

Relation row_sum(const std::vector<Symbol>& row) {
  Relation r;
  for (const auto& s : row) r.lhs += Poly::gen(s);
  r.rhs = Poly::one();
  return r;
}

Relation idempotent(const Symbol& s) { return {Poly::gen(s) * Poly::gen(s), Poly::gen(s), {}}; }

Matrix scalar(double x) { return Matrix::Constant(1, 1, x); }

Matrix random_unitary(int d, std::mt19937& rng) {
  std::normal_distribution<double> n;
  Matrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = {n(rng), n(rng)};
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ();
}

}  // namespace

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, -2).str(), "-1/2");
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-4"), Rational(-4));
  EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Symbols, TextRoundTrip) {
  for (const auto& s : {u("e1", "e2"), Symbol{"gamma", {"2", "a", "1", "2"}}, Symbol{"P", {"(a,b)", "1", "3"}}})
    EXPECT_EQ(parse_symbol_text(symbol_text(s)), s);
  EXPECT_THROW(parse_symbol_text("u[e1]"), std::invalid_argument);
}

TEST(BooleanEval, Examples) {
  Relation self_adjoint{Poly::gen(u("a", "a")), Poly::gen(u("a", "a"), true), {}};
  for (int v : {0, 1}) EXPECT_TRUE(eval_boolean_commutative(self_adjoint, {{u("a", "a"), v}}));

  auto row = row_sum({u("a", "a"), u("a", "b"), u("a", "c")});
  EXPECT_TRUE(eval_boolean_commutative(row, {{u("a", "a"), 0}, {u("a", "b"), 1}, {u("a", "c"), 0}}));
  EXPECT_FALSE(eval_boolean_commutative(row, {{u("a", "a"), 1}, {u("a", "b"), 1}, {u("a", "c"), 0}}));
  EXPECT_THROW(eval_boolean_commutative(row, {{u("a", "a"), 1}}), MissingSymbol);
}

TEST(MatrixEval, ProjectionResidualZero) {
  Matrix p = line_projection(0.3);
  EXPECT_LT(eval_matrix(idempotent(p_gen()), {{p_gen(), p}}), 1e-14);
}

TEST(MatrixEval, HalfIdentity) {
  EXPECT_NEAR(eval_matrix(idempotent(p_gen()), {{p_gen(), scalar(0.5)}}), 0.25, 1e-15);
}

TEST(MatrixEval, CommutatorOfTwoLines) {
  Relation comm{Poly::gen(p_gen()) * Poly::gen(q_gen()), Poly::gen(q_gen()) * Poly::gen(p_gen()), {}};
  MatrixAssignment a{{p_gen(), line_projection(0.0)}, {q_gen(), line_projection(M_PI / 4)}};
  EXPECT_NEAR(eval_matrix(comm, a), 0.5, 1e-12);
}

TEST(MatrixEval, Errors) {
  Relation comm{Poly::gen(p_gen()) * Poly::gen(q_gen()), Poly::gen(q_gen()) * Poly::gen(p_gen()), {}};
  EXPECT_THROW(eval_matrix(comm, {{p_gen(), scalar(1)}}), MissingSymbol);
  EXPECT_THROW(eval_matrix(comm, {{p_gen(), scalar(1)}, {q_gen(), line_projection(0)}}), DimensionMismatch);
}

TEST(MatrixEval, ConstantRelationNeedsDimension) {
  Relation one{Poly::one(), Poly::one(), {}};
  EXPECT_EQ(eval_matrix(one, {}, 3), 0.0);
}

TEST(MatrixEval, StarUsesAdjoint) {
  Symbol z{"x", {"z", "z"}};
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  Relation r{Poly::gen(z), Poly::gen(z, true), {}};
  EXPECT_NEAR(eval_matrix(r, {{z, m}}), 1.0, 1e-12);
  Relation c{Coeff(0, 1) * Poly::gen(z), Poly::gen(z), {}};  // i z - z
  EXPECT_NEAR(eval_matrix(c, {{z, m}}), std::sqrt(2.0), 1e-12);
}

TEST(MatrixEval, InvariantUnderUnitaryConjugation) {
  std::mt19937 rng(3);
  Relation comm{Poly::gen(p_gen()) * Poly::gen(q_gen()) * Poly::gen(p_gen(), true),
                Poly::gen(q_gen()) - Coeff(Rational(1, 3)) * Poly::gen(p_gen()), {}};
  MatrixAssignment a{{p_gen(), line_projection(0.2)}, {q_gen(), line_projection(1.1)}};
  double base = eval_matrix(comm, a);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix U = random_unitary(2, rng);
    MatrixAssignment b;
    for (const auto& [s, m] : a) b[s] = U * m * U.adjoint();
    EXPECT_NEAR(eval_matrix(comm, b), base, 1e-12);
  }
}

TEST(Poly, Algebra) {
  Poly x = Poly::gen(p_gen()), y = Poly::gen(q_gen());
  EXPECT_EQ(((x + y) - y).combined(), x.combined());
  EXPECT_TRUE((x - x).combined().empty());
  EXPECT_EQ((x * y).adjoint().combined(), (Poly::gen(q_gen(), true) * Poly::gen(p_gen(), true)).combined());
  EXPECT_EQ((Coeff(2) * x).combined(), (x + x).combined());
}

TEST(Substitute, IdentityMapKeepsRelation) {
  Relation r = row_sum({u("a", "a"), u("a", "b")});
  std::map<Symbol, Poly> id{{u("a", "a"), Poly::gen(u("a", "a"))}, {u("a", "b"), Poly::gen(u("a", "b"))}};
  auto s = substitute(r, id);
  EXPECT_EQ(s.lhs.combined(), r.lhs.combined());
  EXPECT_EQ(s.rhs.combined(), r.rhs.combined());
  EXPECT_EQ(substitute(r, {}).lhs.combined(), r.lhs.combined());
}

TEST(Substitute, ExpandsProducts) {
  // u[a][a] -> x y, u[a][b] -> 1 - x y
  Poly xy = Poly::gen(p_gen()) * Poly::gen(q_gen());
  auto s = substitute(row_sum({u("a", "a"), u("a", "b")}), {{u("a", "a"), xy}, {u("a", "b"), Poly::one() - xy}});
  EXPECT_TRUE((s.lhs - s.rhs).combined().empty());

  // Star of a substituted letter takes the adjoint.
  Poly star = substitute(Poly::gen(u("a", "a"), true), {{u("a", "a"), xy}});
  EXPECT_EQ(star.combined(), xy.adjoint().combined());
}

TEST(Json, RoundTrip) {
  Poly p = Coeff(Rational(1, 2), Rational(-3)) * Poly::gen(p_gen()) * Poly::gen(q_gen(), true) + Poly::one();
  EXPECT_EQ(poly_from_json(poly_to_json(p)).combined(), p.combined());
  Relation r{p, Poly::gen(u("e", "f")), {"note one"}};
  auto back = relation_from_json(relation_to_json(r));
  EXPECT_EQ(back.lhs.combined(), r.lhs.combined());
  EXPECT_EQ(back.rhs.combined(), r.rhs.combined());
  EXPECT_EQ(back.notes, r.notes);
}

TEST(Text, Readable) {
  Relation r = row_sum({u("a", "a"), u("a", "b")});
  auto t = relation_text(r);
  EXPECT_NE(t.find("u[a][a]"), std::string::npos);
  EXPECT_NE(t.find("="), std::string::npos);
}
