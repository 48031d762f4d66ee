#pragma once

#include <Eigen/Dense>
#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgq {

class Rational {
 public:
  Rational(long long n = 0, long long d = 1);
  long long num() const { return num_; }
  long long den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const { return num_ == 0; }
  std::string str() const;  // "n/d"
  static Rational parse(const std::string& s);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }
  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

 private:
  long long num_, den_;
};

// Exact Gaussian rational re + i*im.
struct Coeff {
  Rational re, im;
  Coeff(Rational r = 0, Rational i = 0) : re(r), im(i) {}
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  Coeff conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  friend Coeff operator+(const Coeff& a, const Coeff& b) { return {a.re + b.re, a.im + b.im}; }
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return {a.re - b.re, a.im - b.im}; }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Coeff operator-() const { return {-re, -im}; }
  bool operator==(const Coeff&) const = default;
  auto operator<=>(const Coeff&) const = default;
};

// Families: u (sigma,tau), q (i,j), x (i,j), P ("(i,j)",r,s), gamma/nu (m,k,s,r).
struct Symbol {
  std::string family;
  std::vector<std::string> idx;
  bool operator==(const Symbol&) const = default;
  auto operator<=>(const Symbol&) const = default;
};

int family_arity(const std::string& family);
// ASCII form such as u[e1][e2] or gamma[2][a][1][2].
std::string symbol_text(const Symbol& s);
Symbol parse_symbol_text(const std::string& text);

struct Letter {
  Symbol sym;
  bool star = false;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Monomial = std::vector<Letter>;  // empty = unit

struct Term {
  Coeff c;
  Monomial mono;
  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

// Formal sum of terms.
class Poly {
 public:
  Poly() = default;
  static Poly constant(Coeff c);
  static Poly gen(const Symbol& s, bool star = false);
  static Poly one() { return constant(Coeff(1)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  void add_term(Term t);

  Poly adjoint() const;
  // Merges equal monomials and drops zero coefficients; sorts terms.
  Poly combined() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Coeff& c, const Poly& p);
  Poly& operator+=(const Poly& o);
  bool operator==(const Poly&) const = default;
  auto operator<=>(const Poly&) const = default;

 private:
  std::vector<Term> terms_;
};

// lhs - rhs = 0, with provenance notes.
struct Relation {
  Poly lhs, rhs;
  std::vector<std::string> notes;
};

std::vector<Symbol> symbols_of(const Relation& r);

class MissingSymbol : public std::runtime_error {
 public:
  explicit MissingSymbol(const Symbol& s) : std::runtime_error("missing symbol " + symbol_text(s)) {}
};

class DimensionMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using BoolAssignment = std::map<Symbol, int>;
using Matrix = Eigen::MatrixXcd;
using MatrixAssignment = std::map<Symbol, Matrix>;

// Stars act as identity, multiplication is commutative.
bool eval_boolean_commutative(const Relation& rel, const BoolAssignment& a);

Matrix eval_poly(const Poly& p, const MatrixAssignment& a, int dim);
double operator_norm(const Matrix& m);
// Operator norm of lhs - rhs. dim is needed only when the relation has no
// symbols; otherwise it is read from the assignment.
double eval_matrix(const Relation& rel, const MatrixAssignment& a, int dim = -1);

// Symbols absent from map are kept.
Poly substitute(const Poly& p, const std::map<Symbol, Poly>& map);
Relation substitute(const Relation& rel, const std::map<Symbol, Poly>& map);

std::string poly_text(const Poly& p);
std::string relation_text(const Relation& r);
// Serialization of a formal sum: list of [[re,im],[[family,[idx..],star],..]].
std::string poly_to_json(const Poly& p);
Poly poly_from_json(const std::string& text);
std::string relation_to_json(const Relation& r);
Relation relation_from_json(const std::string& text);

}  // namespace mgq
