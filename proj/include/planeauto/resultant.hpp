#pragma once

#include <utility>
#include <vector>

#include "planeauto/bipoly.hpp"

namespace planeauto {

/// Polynomial in t whose coefficients live in K[x,y]; element k is the
/// coefficient of t^k. Trailing zero coefficients are trimmed by callers via
/// tpoly_trim.
using TPoly = std::vector<BiPoly>;

inline void tpoly_trim(TPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int tpoly_degree(const TPoly& p) {
  TPoly q = p;
  tpoly_trim(q);
  return q.empty() ? kZeroDegree : static_cast<int>(q.size()) - 1;
}

/// u(t) - x as a polynomial in t over K[x,y]; likewise v(t) - y.
inline TPoly curve_component_minus(const UniPoly& u, const BiPoly& var) {
  TPoly out(std::max(1, u.degree() + 1));
  for (int k = 0; k <= u.degree(); ++k) out[k] = BiPoly::constant(u.coeff(k));
  out[0] -= var;
  tpoly_trim(out);
  return out;
}

namespace detail {

inline TPoly pseudo_remainder(const TPoly& a, const TPoly& b) {
  TPoly r = a;
  const int db = static_cast<int>(b.size()) - 1;
  const BiPoly& lcb = b.back();
  int e = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const int shift = static_cast<int>(r.size()) - 1 - db;
    BiPoly top = r.back();
    for (auto& c : r) c = c * lcb;
    for (int k = 0; k <= db; ++k) r[k + shift] -= top * b[k];
    r.pop_back();
    tpoly_trim(r);
    --e;
  }
  if (e > 0) {
    BiPoly scale = lcb.pow(static_cast<unsigned>(e));
    for (auto& c : r) c = c * scale;
  }
  return r;
}

inline BiPoly must_divide(const BiPoly& f, const BiPoly& g) {
  auto q = exact_divide(f, g);
  if (!q) throw Error("InternalError", "subresultant chain lost exact divisibility");
  return *q;
}

}  // namespace detail

/// Resultant with respect to t for arbitrary degrees; constant arguments are
/// handled by Res(f, c) = c^deg f. Uses the subresultant pseudo-remainder
/// sequence, so no fractions in x, y appear.
inline BiPoly resultant_any(TPoly a, TPoly b) {
  tpoly_trim(a);
  tpoly_trim(b);
  if (a.empty() || b.empty()) return {};
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  Rat sign = 1;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;
  }
  if (db == 0) return b[0].pow(static_cast<unsigned>(da)) * sign;

  BiPoly g = 1, h = 1;
  for (;;) {
    da = static_cast<int>(a.size()) - 1;
    db = static_cast<int>(b.size()) - 1;
    const int delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;
    TPoly r = detail::pseudo_remainder(a, b);
    a = std::move(b);
    BiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = detail::must_divide(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = detail::must_divide(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (b.empty()) return {};
    if (b.size() == 1) break;
  }
  const int final_deg = static_cast<int>(a.size()) - 1;
  BiPoly lead = b[0].pow(static_cast<unsigned>(final_deg));
  BiPoly res = final_deg == 1 ? lead : detail::must_divide(lead, h.pow(static_cast<unsigned>(final_deg - 1)));
  return res * sign;
}

/// Res_t(f, g). Both arguments must have positive degree in t.
inline BiPoly resultant_t(const TPoly& f, const TPoly& g) {
  if (tpoly_degree(f) <= 0 || tpoly_degree(g) <= 0)
    throw InvalidResultantInput("resultant_t needs positive degree in t for both arguments");
  return resultant_any(f, g);
}

}  // namespace planeauto
