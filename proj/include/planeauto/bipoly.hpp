#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "planeauto/rational.hpp"
#include "planeauto/unipoly.hpp"

namespace planeauto {

// Exponent pair of x^i y^j.
struct Mono {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  std::uint64_t degree() const { return std::uint64_t{i} + j; }
  friend bool operator==(const Mono&, const Mono&) = default;
};

// Graded lex with x > y: compare total degree, then the x exponent.
struct GradedLex {
  bool operator()(const Mono& a, const Mono& b) const {
    return std::make_tuple(a.degree(), a.i) < std::make_tuple(b.degree(), b.i);
  }
};

/// Sparse bivariate polynomial in x, y over the rationals. Terms are kept in
/// ascending graded-lex order; no stored coefficient is zero.
class BiPoly {
 public:
  using TermMap = std::map<Mono, Rat, GradedLex>;

  BiPoly() = default;
  BiPoly(long c) {  // NOLINT: integers promote to constants
    if (c != 0) terms_.emplace(Mono{}, Rat(c));
  }

  static BiPoly constant(const Rat& c) {
    BiPoly p;
    if (sgn(c) != 0) p.terms_.emplace(Mono{}, c);
    return p;
  }
  static BiPoly monomial(const Rat& c, std::uint32_t i, std::uint32_t j) {
    BiPoly p;
    if (sgn(c) != 0) p.terms_.emplace(Mono{i, j}, c);
    return p;
  }
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  // u(x) or u(y) lifted from a univariate polynomial.
  static BiPoly in_x(const UniPoly& u) {
    BiPoly p;
    for (int e = 0; e <= u.degree(); ++e) p.add_term(Mono{static_cast<std::uint32_t>(e), 0}, u.coeff(e));
    return p;
  }
  static BiPoly in_y(const UniPoly& u) {
    BiPoly p;
    for (int e = 0; e <= u.degree(); ++e) p.add_term(Mono{0, static_cast<std::uint32_t>(e)}, u.coeff(e));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{}); }

  int total_degree() const {
    return terms_.empty() ? kZeroDegree : static_cast<int>(terms_.rbegin()->first.degree());
  }
  int degree_x() const {
    int d = kZeroDegree;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.i));
    return d;
  }
  int degree_y() const {
    int d = kZeroDegree;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.j));
    return d;
  }

  Rat coeff(std::uint32_t i, std::uint32_t j) const {
    auto it = terms_.find(Mono{i, j});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  // Leading term under graded lex. Precondition: nonzero.
  const std::pair<const Mono, Rat>& leading_term() const { return *terms_.rbegin(); }
  Rat leading_coeff() const { return terms_.empty() ? Rat(0) : terms_.rbegin()->second; }

  void add_term(const Mono& m, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  // Sum of the terms of total degree d.
  BiPoly homogeneous_part(int d) const {
    BiPoly out;
    for (const auto& [m, c] : terms_)
      if (static_cast<int>(m.degree()) == d) out.terms_.emplace(m, c);
    return out;
  }
  BiPoly leading_form() const { return homogeneous_part(total_degree()); }

  Rat eval(const Rat& xv, const Rat& yv) const {
    Rat acc = 0;
    for (const auto& [m, c] : terms_) acc += c * rat_pow(xv, m.i) * rat_pow(yv, m.j);
    return acc;
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BiPoly& operator*=(const Rat& k) {
    if (sgn(k) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) { return a *= Rat(-1); }
  friend BiPoly operator*(BiPoly a, const Rat& k) { return a *= k; }
  friend BiPoly operator*(const Rat& k, BiPoly a) { return a *= k; }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    Rat prod;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
        out.add_term(Mono{ma.i + mb.i, ma.j + mb.j}, prod);
      }
    }
    return out;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BiPoly pow(unsigned e) const {
    BiPoly result = 1, base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  // Terms rendered highest graded-lex first, e.g. "x^2 - 2*x*y + 3/2*y".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rat mag = abs(c);
      if (first) {
        if (sgn(c) < 0) os << "-";
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      bool need_star = false;
      if (mag != 1 || (m.i == 0 && m.j == 0)) {
        os << mag.get_str();
        need_star = true;
      }
      auto var = [&](char v, std::uint32_t e) {
        if (e == 0) return;
        if (need_star) os << "*";
        os << v;
        if (e > 1) os << "^" << e;
        need_star = true;
      };
      var('x', m.i);
      var('y', m.j);
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

/// p(sx, sy), fully expanded.
inline BiPoly substitute(const BiPoly& p, const BiPoly& sx, const BiPoly& sy) {
  if (p.is_zero()) return {};
  // Group by x exponent: p = sum_i x^i P_i(y).
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, Rat>>> rows;
  std::vector<std::uint32_t> ys;
  for (const auto& [m, c] : p.terms()) {
    rows[m.i].emplace_back(m.j, c);
    ys.push_back(m.j);
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::map<std::uint32_t, BiPoly> ypow;
  BiPoly prev = 1;
  std::uint32_t prev_e = 0;
  for (std::uint32_t e : ys) {
    prev = prev * sy.pow(e - prev_e);
    prev_e = e;
    ypow.emplace(e, prev);
  }
  // Horner in sx over the x exponents.
  BiPoly acc;
  std::uint32_t current = rows.rbegin()->first;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (it != rows.rbegin()) acc *= sx.pow(current - it->first);
    current = it->first;
    for (const auto& [j, c] : it->second) acc += ypow.at(j) * c;
  }
  if (current > 0) acc *= sx.pow(current);
  return acc;
}

/// Quotient q with f = q*g, or nullopt when g does not divide f.
inline std::optional<BiPoly> exact_divide(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) throw DivisionByZero("exact_divide by the zero polynomial");
  BiPoly quotient;
  BiPoly rem = f;
  const auto& [gm, gc] = g.leading_term();
  while (!rem.is_zero()) {
    const auto [rm, rc] = rem.leading_term();
    if (rm.i < gm.i || rm.j < gm.j) return std::nullopt;
    Mono qm{rm.i - gm.i, rm.j - gm.j};
    Rat qc = rc / gc;
    quotient.add_term(qm, qc);
    for (const auto& [m, c] : g.terms()) rem.add_term(Mono{qm.i + m.i, qm.j + m.j}, -qc * c);
  }
  return quotient;
}

/// Scale to an integer polynomial with content 1 whose leading graded-lex
/// coefficient is positive. Zero maps to zero.
inline BiPoly normalize(const BiPoly& p) {
  if (p.is_zero()) return p;
  Int den = 1, num = 0;
  for (const auto& [m, c] : p.terms()) den = int_lcm(den, c.get_den());
  for (const auto& [m, c] : p.terms()) num = int_gcd(num, Rat(c * den).get_num());
  Rat scale(den, num);
  scale.canonicalize();
  if (sgn(p.leading_coeff()) < 0) scale = -scale;
  return p * scale;
}

/// (p(0,t), p(t,0)).
inline std::pair<UniPoly, UniPoly> face_polynomials(const BiPoly& p) {
  std::vector<Rat> on_y_axis, on_x_axis;
  for (const auto& [m, c] : p.terms()) {
    if (m.i == 0) {
      if (on_y_axis.size() <= m.j) on_y_axis.resize(m.j + 1);
      on_y_axis[m.j] = c;
    }
    if (m.j == 0) {
      if (on_x_axis.size() <= m.i) on_x_axis.resize(m.i + 1);
      on_x_axis[m.i] = c;
    }
  }
  return {UniPoly(std::move(on_y_axis)), UniPoly(std::move(on_x_axis))};
}

/// Profile of a polynomial a*x^n + b*y^m + sum c_ij x^i y^j with every term
/// satisfying i*m + j*n <= m*n.
struct TriangularForm {
  std::uint32_t n = 0;  // degree of the pure-x term
  std::uint32_t m = 0;  // degree of the pure-y term
  Rat a;                // coefficient of x^n
  Rat b;                // coefficient of y^m

  friend bool operator==(const TriangularForm&, const TriangularForm&) = default;
};

// Whether x^i y^j lies on or under the segment from (n,0) to (0,m).
inline bool under_triangle(const Mono& mono, std::uint64_t n, std::uint64_t m) {
  return mono.i * m + mono.j * n <= m * n;
}

/// nullopt means NotTriangular: a pure-x or pure-y term is missing, or some
/// term lies above the hypotenuse.
inline std::optional<TriangularForm> triangular_profile(const BiPoly& p) {
  std::uint32_t n = 0, m = 0;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.j == 0 && mono.i > n) n = mono.i;
    if (mono.i == 0 && mono.j > m) m = mono.j;
  }
  if (n == 0 || m == 0) return std::nullopt;
  for (const auto& [mono, c] : p.terms())
    if (!under_triangle(mono, n, m)) return std::nullopt;
  return TriangularForm{n, m, p.coeff(n, 0), p.coeff(0, m)};
}

}  // namespace planeauto
