#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "planeauto/rational.hpp"

namespace planeauto {

using Exponent = std::vector<std::uint32_t>;

/// Sparse polynomial over the rationals in a fixed, named list of variables.
/// Every exponent vector has exactly vars().size() entries.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rat>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Rat& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
  }
  static MultiPoly variable(std::vector<std::string> vars, std::size_t index) {
    if (index >= vars.size()) throw InvalidArgument("variable index out of range");
    MultiPoly p(std::move(vars));
    Exponent e(p.vars_.size(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto e : terms_.begin()->first)
      if (e) return false;
    return true;
  }

  Rat constant_term() const {
    auto it = terms_.find(Exponent(vars_.size(), 0));
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Exponent& e, const Rat& c) {
    if (e.size() != vars_.size()) throw InvalidArgument("exponent arity mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rat& k) {
    if (sgn(k) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rat& k) { return a *= k; }
  friend MultiPoly operator*(const Rat& k, MultiPoly a) { return a *= k; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_ring(b);
    MultiPoly out(a.vars_);
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(vars_, 1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  // Replace variable `index` by a rational value; arity is kept.
  MultiPoly substitute_value(std::size_t index, const Rat& value) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f[index] = 0;
      out.add_term(f, c * rat_pow(value, e[index]));
    }
    return out;
  }

  Rat eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size()) throw InvalidArgument("evaluation point arity mismatch");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k]) t *= rat_pow(point[k], e[k]);
      acc += t;
    }
    return acc;
  }

  // Variables are printed by name; terms in descending lex order of the
  // exponent vectors.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rat mag = abs(c);
      if (first) {
        if (sgn(c) < 0) os << "-";
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      bool need_star = false;
      bool any_var = false;
      for (auto k : e) any_var = any_var || k;
      if (mag != 1 || !any_var) {
        os << mag.get_str();
        need_star = true;
      }
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (!e[k]) continue;
        if (need_star) os << "*";
        os << vars_[k];
        if (e[k] > 1) os << "^" << e[k];
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  void check_ring(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw InvalidArgument("polynomials over different variable lists");
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

}  // namespace planeauto
