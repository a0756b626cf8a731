#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "planeauto/errors.hpp"

namespace planeauto {

// Exact rationals. mpq_class keeps numerator/denominator coprime with a
// positive denominator once canonicalized; every constructor below does so.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw DivisionByZero("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw InvalidArgument("not a rational: " + s);
  if (r.get_den() == 0) throw DivisionByZero("zero denominator in " + s);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return Rat(num, den);
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Exact n-th root of a rational, if it exists. For even n only the
// nonnegative root is returned.
inline bool rational_nth_root(const Rat& value, unsigned long n, Rat& root) {
  if (n == 0) return false;
  if (sgn(value) < 0 && n % 2 == 0) return false;
  Int num = abs(value.get_num());
  Int rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), value.get_den_mpz_t(), n) == 0) return false;
  root = Rat(sgn(value) < 0 ? Int(-rn) : rn, rd);
  root.canonicalize();
  return true;
}

namespace detail {

inline Int pollard_rho(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto step = [&](const Int& v) {
      Int r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Int diff = abs(x - y);
      d = int_gcd(diff, n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n <= 1) return;
  for (unsigned long p = 2; p < 2000 && Int(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Int(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  std::vector<Int> stack{n};
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
      ++out[m];
      continue;
    }
    Int d = pollard_rho(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
}

}  // namespace detail

// Positive divisors of |n| (n != 0), ascending.
inline std::vector<Int> divisors(const Int& n) {
  std::map<Int, unsigned> factors;
  detail::factor_into(abs(n), factors);
  std::vector<Int> divs{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace planeauto
