#pragma once

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "planeauto/bipoly.hpp"
#include "planeauto/multipoly.hpp"

namespace planeauto {

// Largest exponent the parser accepts.
inline constexpr unsigned long kMaxExponent = 100000;

namespace detail {

// expr   := ('+'|'-')? term (('+'|'-') term)*
// term   := factor ('*'? factor)*
// factor := (number | var | '(' expr ')') ('^' nat)?
// number := int ('/' posint)?
class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  MultiPoly expr() {
    MultiPoly acc(vars_);
    bool negate = false;
    if (char c = peek(); c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    for (;;) {
      MultiPoly t = term();
      if (negate) t *= Rat(-1);
      acc += t;
      char c = peek();
      if (c != '+' && c != '-') break;
      negate = c == '-';
      ++pos_;
    }
    return acc;
  }

  MultiPoly term() {
    if (!starts_factor(peek())) fail(pos_ < text_.size() ? "expected a term" : "unexpected end of input");
    MultiPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        if (!starts_factor(peek())) fail("expected a factor after '*'");
      } else if (!starts_factor(c)) {
        break;
      }
      acc *= factor();
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base(vars_);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      base = MultiPoly::constant(vars_, number());
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name(1, c);
      std::size_t idx = 0;
      while (idx < vars_.size() && vars_[idx] != name) ++idx;
      if (idx == vars_.size()) fail("unknown variable '" + name + "'");
      ++pos_;
      base = MultiPoly::variable(vars_, idx);
    } else {
      ++pos_;  // '('
      base = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      Int e = integer();
      if (e > kMaxExponent) {
        pos_ = at;
        fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  Rat number() {
    Int num = integer();
    std::size_t save = pos_;
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("division is only allowed between integer literals");
      Int den = integer();
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
      return make_rat(num, den);
    }
    pos_ = save;
    return Rat(num);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

inline std::set<std::string> letters_in(std::string_view text) {
  std::set<std::string> out;
  for (char c : text)
    if (std::isalpha(static_cast<unsigned char>(c))) out.insert(std::string(1, c));
  return out;
}

}  // namespace detail

/// Parses over the given single-letter variables.
inline MultiPoly parse_multi(std::string_view text, const std::vector<std::string>& vars) {
  return detail::Parser(text, vars).parse();
}

/// Variables of a list of expressions, sorted.
inline std::vector<std::string> collect_variables(const std::vector<std::string>& texts) {
  std::set<std::string> all;
  for (const auto& t : texts) all.merge(detail::letters_in(t));
  return {all.begin(), all.end()};
}

using ParsedPoly = std::variant<BiPoly, UniPoly>;

inline BiPoly to_bipoly(const MultiPoly& p) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term({e[0], e[1]}, c);
  return out;
}

inline UniPoly to_unipoly(const MultiPoly& p) {
  std::vector<Rat> coeffs;
  for (const auto& [e, c] : p.terms()) {
    if (coeffs.size() <= e[0]) coeffs.resize(e[0] + 1);
    coeffs[e[0]] = c;
  }
  return UniPoly(std::move(coeffs));
}

/// A polynomial in x, y, or a univariate polynomial when t is the only
/// variable.
inline ParsedPoly parse_expression(std::string_view text) {
  const auto letters = detail::letters_in(text);
  const bool has_t = letters.count("t") > 0;
  const bool has_xy = letters.count("x") > 0 || letters.count("y") > 0;
  if (has_t && has_xy) throw MixedVariables("t cannot be mixed with x or y");
  if (has_t) return to_unipoly(parse_multi(text, {"t"}));
  return to_bipoly(parse_multi(text, {"x", "y"}));
}

inline BiPoly parse_bipoly(std::string_view text) {
  if (detail::letters_in(text).count("t")) throw MixedVariables("expected a polynomial in x and y");
  return to_bipoly(parse_multi(text, {"x", "y"}));
}

inline UniPoly parse_unipoly(std::string_view text) {
  for (const auto& v : detail::letters_in(text))
    if (v == "x" || v == "y") throw MixedVariables("expected a polynomial in t");
  return to_unipoly(parse_multi(text, {"t"}));
}

}  // namespace planeauto
