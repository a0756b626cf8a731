#pragma once

#include <compare>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "planeauto/rational.hpp"

namespace planeauto {

// Degree of the zero polynomial. Ordered below every real degree so that
// max/min over degrees stay total.
inline constexpr int kZeroDegree = -1;

/// Dense univariate polynomial over the rationals; coeffs()[i] is the
/// coefficient of t^i. The coefficient vector never ends in a zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<long> ints) {
    for (long c : ints) coeffs_.emplace_back(c);
    trim();
  }

  static UniPoly constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

  // c * t^e
  static UniPoly monomial(const Rat& c, unsigned e) {
    std::vector<Rat> v(e + 1);
    v[e] = c;
    return UniPoly(std::move(v));
  }

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
  }
  Rat leading_coeff() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

  Rat eval(const Rat& t) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rat& c) {
    if (sgn(c) == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rat(-1); }
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  UniPoly pow(unsigned e) const {
    UniPoly result = constant(1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  // Quotient and remainder by a nonzero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("univariate division by zero");
    std::vector<Rat> rem = coeffs_;
    int dd = d.degree();
    if (degree() < dd) return {UniPoly{}, *this};
    std::vector<Rat> quot(coeffs_.size() - dd);
    Rat lc = d.leading_coeff();
    for (int i = degree(); i >= dd; --i) {
      if (sgn(rem[i]) == 0) continue;
      Rat q = rem[i] / lc;
      quot[i - dd] = q;
      for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeffs_[j];
    }
    rem.resize(dd);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
  }

  // Render in the variable `var`, highest power first: "t^3 - 2*t + 1/2".
  std::string to_string(const std::string& var = "t") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Rat& c = coeffs_[i];
      if (sgn(c) == 0) continue;
      Rat mag = abs(c);
      if (first) {
        if (sgn(c) < 0) os << "-";
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Rat> coeffs_;
};

/// Rational roots with multiplicities. Zero is reported first when present;
/// the rest follow the order of the rational-root-theorem enumeration.
inline std::vector<std::pair<Rat, unsigned>> rational_roots(const UniPoly& f) {
  std::vector<std::pair<Rat, unsigned>> roots;
  if (f.degree() <= 0) return roots;
  std::vector<Rat> c = f.coeffs();
  unsigned zero_mult = 0;
  while (sgn(c[zero_mult]) == 0) ++zero_mult;
  if (zero_mult) roots.emplace_back(Rat(0), zero_mult);
  UniPoly g(std::vector<Rat>(c.begin() + zero_mult, c.end()));
  if (g.degree() <= 0) return roots;
  Int den_lcm = 1;
  for (const auto& a : g.coeffs()) den_lcm = int_lcm(den_lcm, a.get_den());
  Int lead = Rat(g.leading_coeff() * den_lcm).get_num();
  Int tail = Rat(g.coeff(0) * den_lcm).get_num();
  auto ps = divisors(tail);
  auto qs = divisors(lead);
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      if (int_gcd(p, q) != 1) continue;
      for (int s : {1, -1}) {
        Rat cand = make_rat(s * p, q);
        unsigned mult = 0;
        while (g.degree() > 0 && sgn(g.eval(cand)) == 0) {
          g = g.divmod(UniPoly(std::vector<Rat>{-cand, Rat(1)})).first;
          ++mult;
        }
        if (mult) roots.emplace_back(cand, mult);
      }
    }
  }
  return roots;
}

}  // namespace planeauto
