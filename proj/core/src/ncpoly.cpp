#include "mgq/ncpoly.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <numeric>
#include <set>

#include "json_detail.hpp"

namespace mgq {

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num_ = n / g;
  den_ = d / g;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s), 1);
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational '" + s + "'");
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  __int128 l = static_cast<__int128>(num_) * o.den_;
  __int128 r = static_cast<__int128>(o.num_) * den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int family_arity(const std::string& family) {
  if (family == "u" || family == "q" || family == "x") return 2;
  if (family == "P") return 3;
  if (family == "gamma" || family == "nu") return 4;
  throw std::invalid_argument("unknown generator family " + family);
}

std::string symbol_text(const Symbol& s) {
  std::string out = s.family;
  for (const auto& i : s.idx) out += "[" + i + "]";
  return out;
}

Symbol parse_symbol_text(const std::string& text) {
  Symbol s;
  auto open = text.find('[');
  s.family = text.substr(0, open);
  size_t pos = open;
  while (pos != std::string::npos && pos < text.size()) {
    if (text[pos] != '[') throw std::invalid_argument("bad symbol '" + text + "'");
    auto close = text.find(']', pos);
    if (close == std::string::npos) throw std::invalid_argument("bad symbol '" + text + "'");
    s.idx.push_back(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
  }
  int arity = family_arity(s.family);
  if (static_cast<int>(s.idx.size()) != arity)
    throw std::invalid_argument("symbol '" + text + "' needs " + std::to_string(arity) + " indices");
  return s;
}

Poly Poly::constant(Coeff c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({c, {}});
  return p;
}

Poly Poly::gen(const Symbol& s, bool star) {
  Poly p;
  p.terms_.push_back({Coeff(1), {Letter{s, star}}});
  return p;
}

void Poly::add_term(Term t) { terms_.push_back(std::move(t)); }

Poly Poly::adjoint() const {
  Poly p;
  for (const auto& t : terms_) {
    Monomial m(t.mono.rbegin(), t.mono.rend());
    for (auto& l : m) l.star = !l.star;
    p.terms_.push_back({t.c.conj(), std::move(m)});
  }
  return p;
}

Poly Poly::combined() const {
  std::map<Monomial, Coeff> acc;
  for (const auto& t : terms_) {
    auto [it, fresh] = acc.emplace(t.mono, t.c);
    if (!fresh) it->second = it->second + t.c;
  }
  Poly p;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly p = a;
  p += b;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

Poly operator-(const Poly& a, const Poly& b) { return a + Coeff(-1) * b; }

Poly operator*(const Coeff& c, const Poly& p) {
  Poly out;
  for (const auto& t : p.terms_) out.terms_.push_back({c * t.c, t.mono});
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      Monomial m = x.mono;
      m.insert(m.end(), y.mono.begin(), y.mono.end());
      out.terms_.push_back({x.c * y.c, std::move(m)});
    }
  return out;
}

std::vector<Symbol> symbols_of(const Relation& r) {
  std::set<Symbol> s;
  for (const auto* p : {&r.lhs, &r.rhs})
    for (const auto& t : p->terms())
      for (const auto& l : t.mono) s.insert(l.sym);
  return {s.begin(), s.end()};
}

namespace {

Coeff bool_value(const Poly& p, const BoolAssignment& a) {
  Coeff sum;
  for (const auto& t : p.terms()) {
    bool on = true;
    for (const auto& l : t.mono) {
      auto it = a.find(l.sym);
      if (it == a.end()) throw MissingSymbol(l.sym);
      if (it->second == 0) on = false;
    }
    if (on) sum = sum + t.c;
  }
  return sum;
}

int infer_dim(const Relation& rel, const MatrixAssignment& a, int dim) {
  for (const auto& s : symbols_of(rel)) {
    auto it = a.find(s);
    if (it == a.end()) throw MissingSymbol(s);
    int d = static_cast<int>(it->second.rows());
    if (dim >= 0 && d != dim) throw DimensionMismatch("matrix for " + symbol_text(s) + " has wrong dimension");
    if (it->second.cols() != d) throw DimensionMismatch("matrix for " + symbol_text(s) + " is not square");
    dim = d;
  }
  if (dim < 0) dim = 1;
  return dim;
}

}  // namespace

bool eval_boolean_commutative(const Relation& rel, const BoolAssignment& a) {
  return (bool_value(rel.lhs, a) - bool_value(rel.rhs, a)).is_zero();
}

Matrix eval_poly(const Poly& p, const MatrixAssignment& a, int dim) {
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& t : p.terms()) {
    Matrix m = Matrix::Identity(dim, dim);
    for (const auto& l : t.mono) {
      auto it = a.find(l.sym);
      if (it == a.end()) throw MissingSymbol(l.sym);
      if (it->second.rows() != dim || it->second.cols() != dim)
        throw DimensionMismatch("matrix for " + symbol_text(l.sym) + " has wrong dimension");
      if (l.star)
        m = m * it->second.adjoint();
      else
        m = m * it->second;
    }
    out += t.c.to_complex() * m;
  }
  return out;
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double eval_matrix(const Relation& rel, const MatrixAssignment& a, int dim) {
  dim = infer_dim(rel, a, dim);
  return operator_norm(eval_poly(rel.lhs, a, dim) - eval_poly(rel.rhs, a, dim));
}

Poly substitute(const Poly& p, const std::map<Symbol, Poly>& map) {
  Poly out;
  for (const auto& t : p.terms()) {
    Poly acc = Poly::constant(t.c);
    if (t.c.is_zero()) continue;
    for (const auto& l : t.mono) {
      auto it = map.find(l.sym);
      Poly image = it == map.end() ? Poly::gen(l.sym) : it->second;
      acc = acc * (l.star ? image.adjoint() : image);
    }
    out += acc;
  }
  return out;
}

Relation substitute(const Relation& rel, const std::map<Symbol, Poly>& map) {
  return {substitute(rel.lhs, map), substitute(rel.rhs, map), rel.notes};
}

namespace {

std::string coeff_text(const Coeff& c) {
  auto r = [](const Rational& q) {
    return q.den() == 1 ? std::to_string(q.num()) : std::to_string(q.num()) + "/" + std::to_string(q.den());
  };
  if (c.im.is_zero()) return r(c.re);
  if (c.re.is_zero()) return r(c.im) + "i";
  return "(" + r(c.re) + "+" + r(c.im) + "i)";
}

}  // namespace

std::string poly_text(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += " + ";
    bool unit = t.c == Coeff(1);
    if (!unit || t.mono.empty()) out += coeff_text(t.c);
    for (size_t i = 0; i < t.mono.size(); ++i) {
      if (i > 0 || !unit) out += "*";
      out += symbol_text(t.mono[i].sym);
      if (t.mono[i].star) out += "^*";
    }
  }
  return out;
}

std::string relation_text(const Relation& r) { return poly_text(r.lhs) + " = " + poly_text(r.rhs); }

namespace detail {

ojson poly_json(const Poly& p) {
  ojson terms = ojson::array();
  for (const auto& t : p.terms()) {
    ojson letters = ojson::array();
    for (const auto& l : t.mono) letters.push_back(ojson::array({l.sym.family, l.sym.idx, l.star}));
    terms.push_back(ojson::array({ojson::array({t.c.re.str(), t.c.im.str()}), letters}));
  }
  return terms;
}

Poly poly_from(const ojson& j) {
  Poly p;
  for (const auto& t : j) {
    Term term;
    term.c = Coeff(Rational::parse(t.at(0).at(0).get<std::string>()),
                   Rational::parse(t.at(0).at(1).get<std::string>()));
    for (const auto& l : t.at(1)) {
      Symbol s{l.at(0).get<std::string>(), l.at(1).get<std::vector<std::string>>()};
      term.mono.push_back({s, l.at(2).get<bool>()});
    }
    p.add_term(std::move(term));
  }
  return p;
}

ojson relation_json(const Relation& r) {
  ojson j;
  j["lhs"] = poly_json(r.lhs);
  j["rhs"] = poly_json(r.rhs);
  j["notes"] = r.notes;
  return j;
}

Relation relation_from(const ojson& j) {
  Relation r;
  r.lhs = poly_from(j.at("lhs"));
  r.rhs = poly_from(j.at("rhs"));
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace detail

std::string poly_to_json(const Poly& p) { return detail::poly_json(p).dump(); }
Poly poly_from_json(const std::string& text) { return detail::poly_from(detail::ojson::parse(text)); }
std::string relation_to_json(const Relation& r) { return detail::relation_json(r).dump(); }
Relation relation_from_json(const std::string& text) {
  return detail::relation_from(detail::ojson::parse(text));
}

}  // namespace mgq
