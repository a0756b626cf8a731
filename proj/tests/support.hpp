#pragma once

#include <random>
#include <vector>

#include "planeauto/planeauto.hpp"

namespace planeauto {

inline void PrintTo(const MultiPoly& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace planeauto

namespace planeauto::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rat small_rat(Rng& rng, long bound = 3, long max_den = 1) {
  return make_rat(uniform(rng, -bound, bound), uniform(rng, 1, max_den));
}

inline Rat nonzero_rat(Rng& rng, long bound = 3, long max_den = 1) {
  for (;;) {
    Rat r = small_rat(rng, bound, max_den);
    if (sgn(r) != 0) return r;
  }
}

inline UniPoly random_unipoly(Rng& rng, int max_deg, long bound = 3) {
  const int d = static_cast<int>(uniform(rng, 0, max_deg));
  std::vector<Rat> c(d + 1);
  for (auto& x : c) x = small_rat(rng, bound);
  return UniPoly(std::move(c));
}

inline BiPoly random_bipoly(Rng& rng, int max_deg, int max_terms, long bound = 3, long max_den = 1) {
  BiPoly p;
  const int terms = static_cast<int>(uniform(rng, 1, max_terms));
  for (int k = 0; k < terms; ++k) {
    const auto i = static_cast<std::uint32_t>(uniform(rng, 0, max_deg));
    const auto j = static_cast<std::uint32_t>(uniform(rng, 0, max_deg - static_cast<long>(i)));
    p.add_term({i, j}, small_rat(rng, bound, max_den));
  }
  return p;
}

inline BiPoly random_nonconstant_bipoly(Rng& rng, int max_deg, int max_terms) {
  for (;;) {
    BiPoly p = random_bipoly(rng, max_deg, max_terms);
    if (!p.is_constant()) return p;
  }
}

// Random step whose polynomial part has degree at most max_deg.
inline AutoStep random_step(Rng& rng, int max_deg) {
  switch (uniform(rng, 0, 2)) {
    case 0: return ElemX{random_unipoly(rng, max_deg)};
    case 1: return ElemY{random_unipoly(rng, max_deg)};
    default: {
      for (;;) {
        Affine a{small_rat(rng, 2), small_rat(rng, 2), small_rat(rng, 2),
                 small_rat(rng, 2), small_rat(rng, 2), small_rat(rng, 2)};
        if (sgn(a.det()) != 0) return a;
      }
    }
  }
}

inline int map_degree(const TameAuto& a) {
  auto [gx, gy] = images(a);
  return std::max(gx.total_degree(), gy.total_degree());
}

// Random automorphism whose component degrees stay at or below max_total.
inline TameAuto random_auto(Rng& rng, int max_steps, int max_step_deg, int max_total) {
  TameAuto a;
  const int steps = static_cast<int>(uniform(rng, 1, max_steps));
  for (int s = 0; s < steps; ++s) {
    TameAuto trial = a;
    trial.steps.push_back(random_step(rng, max_step_deg));
    if (map_degree(trial) <= max_total) a = std::move(trial);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Oracles

inline Rat det_gauss(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Sylvester matrix with rows of f's coefficients (highest first) shifted
// deg g times, then g's shifted deg f times.
template <typename T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& f_high_first, const std::vector<T>& g_high_first,
                                      const T& zero) {
  const std::size_t df = f_high_first.size() - 1, dg = g_high_first.size() - 1;
  const std::size_t n = df + dg;
  std::vector<std::vector<T>> m(n, std::vector<T>(n, zero));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t k = 0; k <= df; ++k) m[r][r + k] = f_high_first[k];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t k = 0; k <= dg; ++k) m[dg + r][r + k] = g_high_first[k];
  return m;
}

inline std::vector<Rat> high_first(const UniPoly& p) {
  std::vector<Rat> c(p.coeffs().rbegin(), p.coeffs().rend());
  return c;
}

// Res_t(f, g) for univariate f, g of positive degree, via the determinant.
inline Rat sylvester_resultant(const UniPoly& f, const UniPoly& g) {
  return det_gauss(sylvester(high_first(f), high_first(g), Rat(0)));
}

// Laplace expansion along the first row; for small symbolic matrices.
inline BiPoly det_laplace(const std::vector<std::vector<BiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BiPoly acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<BiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    BiPoly term = m[0][c] * det_laplace(minor);
    if (c % 2) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

// Coefficients of a t-polynomial, highest first.
inline std::vector<BiPoly> high_first(const TPoly& p) { return {p.rbegin(), p.rend()}; }

inline BiPoly symbolic_sylvester_resultant(const TPoly& f, const TPoly& g) {
  return det_laplace(sylvester(high_first(f), high_first(g), BiPoly()));
}

inline UniPoly eval_tpoly(const TPoly& p, const Rat& x0, const Rat& y0) {
  std::vector<Rat> c;
  for (const auto& coeff : p) c.push_back(coeff.eval(x0, y0));
  return UniPoly(std::move(c));
}

// p(u(t), v(t)) as a univariate polynomial, computed by Horner in t.
inline UniPoly compose_curve(const BiPoly& p, const UniPoly& u, const UniPoly& v) {
  UniPoly acc;
  for (const auto& [m, c] : p.terms()) acc += u.pow(m.i) * v.pow(m.j) * c;
  return acc;
}

}  // namespace planeauto::testing
