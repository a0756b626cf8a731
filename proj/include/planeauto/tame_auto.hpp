#pragma once

#include <algorithm>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "planeauto/bipoly.hpp"

namespace planeauto {

// x -> x + f(y), y -> y
struct ElemX {
  UniPoly f;
  friend bool operator==(const ElemX&, const ElemX&) = default;
};

// x -> x, y -> y + f(x)
struct ElemY {
  UniPoly f;
  friend bool operator==(const ElemY&, const ElemY&) = default;
};

// x -> a1*x + a2*y + a3, y -> b1*x + b2*y + b3
struct Affine {
  Rat a1 = 1, a2 = 0, a3 = 0;
  Rat b1 = 0, b2 = 1, b3 = 0;

  Rat det() const { return a1 * b2 - a2 * b1; }
  bool is_identity() const { return a1 == 1 && a2 == 0 && a3 == 0 && b1 == 0 && b2 == 1 && b3 == 0; }
  static Affine swap() { return {0, 1, 0, 1, 0, 0}; }
  friend bool operator==(const Affine&, const Affine&) = default;
};

using AutoStep = std::variant<ElemX, ElemY, Affine>;

/// Steps applied left to right: apply_auto substitutes step 1 into p, then
/// step 2 into the result, and so on.
struct TameAuto {
  std::vector<AutoStep> steps;
  friend bool operator==(const TameAuto&, const TameAuto&) = default;
};

// Images of x and y under one step.
inline std::pair<BiPoly, BiPoly> step_images(const AutoStep& step) {
  return std::visit(
      [](const auto& s) -> std::pair<BiPoly, BiPoly> {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ElemX>) {
          return {BiPoly::x() + BiPoly::in_y(s.f), BiPoly::y()};
        } else if constexpr (std::is_same_v<S, ElemY>) {
          return {BiPoly::x(), BiPoly::y() + BiPoly::in_x(s.f)};
        } else {
          return {BiPoly::x() * s.a1 + BiPoly::y() * s.a2 + BiPoly::constant(s.a3),
                  BiPoly::x() * s.b1 + BiPoly::y() * s.b2 + BiPoly::constant(s.b3)};
        }
      },
      step);
}

inline BiPoly apply_step(const AutoStep& step, const BiPoly& p) {
  if (const auto* a = std::get_if<Affine>(&step); a && sgn(a->det()) == 0)
    throw DegenerateLinear("affine step with zero determinant");
  auto [sx, sy] = step_images(step);
  return substitute(p, sx, sy);
}

inline BiPoly apply_auto(const TameAuto& alpha, BiPoly p) {
  for (const auto& s : alpha.steps) p = apply_step(s, p);
  return p;
}

// (alpha(x), alpha(y)); alpha(p) = p(alpha(x), alpha(y)).
inline std::pair<BiPoly, BiPoly> images(const TameAuto& alpha) {
  return {apply_auto(alpha, BiPoly::x()), apply_auto(alpha, BiPoly::y())};
}

inline bool same_map(const TameAuto& a, const TameAuto& b) { return images(a) == images(b); }

/// Apply alpha first, then beta.
inline TameAuto compose(const TameAuto& alpha, const TameAuto& beta) {
  TameAuto out = alpha;
  out.steps.insert(out.steps.end(), beta.steps.begin(), beta.steps.end());
  return out;
}

inline AutoStep invert(const AutoStep& step) {
  return std::visit(
      [](const auto& s) -> AutoStep {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Affine>) {
          const Rat d = s.det();
          if (sgn(d) == 0) throw DegenerateLinear("affine step with zero determinant");
          // Inverse matrix, then undo the translation.
          const Rat i1 = s.b2 / d, i2 = -s.a2 / d, j1 = -s.b1 / d, j2 = s.a1 / d;
          return Affine{i1, i2, -(i1 * s.a3 + i2 * s.b3), j1, j2, -(j1 * s.a3 + j2 * s.b3)};
        } else {
          return S{-s.f};
        }
      },
      step);
}

inline TameAuto invert(const TameAuto& alpha) {
  TameAuto out;
  for (auto it = alpha.steps.rbegin(); it != alpha.steps.rend(); ++it) out.steps.push_back(invert(*it));
  return out;
}

namespace detail {

inline Affine affine_from_images(const BiPoly& gx, const BiPoly& gy) {
  return {gx.coeff(1, 0), gx.coeff(0, 1), gx.coeff(0, 0), gy.coeff(1, 0), gy.coeff(0, 1), gy.coeff(0, 0)};
}

inline bool is_trivial(const AutoStep& s) {
  if (const auto* a = std::get_if<Affine>(&s)) return a->is_identity();
  if (const auto* e = std::get_if<ElemX>(&s)) return e->f.is_zero();
  return std::get<ElemY>(s).f.is_zero();
}

}  // namespace detail

/// Same map with adjacent affine steps fused, adjacent same-kind elementary
/// steps summed, and identity steps dropped.
inline TameAuto simplify(const TameAuto& alpha) {
  std::vector<AutoStep> out;
  for (const auto& step : alpha.steps) {
    out.push_back(step);
    while (!out.empty()) {
      if (detail::is_trivial(out.back())) {
        out.pop_back();
        continue;
      }
      if (out.size() < 2) break;
      AutoStep& prev = out[out.size() - 2];
      const AutoStep& last = out.back();
      std::optional<AutoStep> merged;
      if (std::holds_alternative<Affine>(prev) && std::holds_alternative<Affine>(last)) {
        auto [gx, gy] = images(TameAuto{{prev, last}});
        merged = detail::affine_from_images(gx, gy);
      } else if (std::holds_alternative<ElemX>(prev) && std::holds_alternative<ElemX>(last)) {
        merged = ElemX{std::get<ElemX>(prev).f + std::get<ElemX>(last).f};
      } else if (std::holds_alternative<ElemY>(prev) && std::holds_alternative<ElemY>(last)) {
        merged = ElemY{std::get<ElemY>(prev).f + std::get<ElemY>(last).f};
      }
      if (!merged) break;
      out.pop_back();
      out.back() = *merged;
    }
  }
  return TameAuto{std::move(out)};
}

/// Jung-van der Kulk decomposition: a TameAuto with alpha(x) = g1 and
/// alpha(y) = g2, or nullopt when (g1, g2) is not an automorphism.
///
/// While the pair is not affine, the higher-degree component is stripped by
/// the unique mu*(other)^d sharing its leading form; what remains must be an
/// invertible affine pair.
inline std::optional<TameAuto> decompose(BiPoly g1, BiPoly g2) {
  std::vector<AutoStep> prefix;
  while (g1.total_degree() > 1 || g2.total_degree() > 1) {
    const bool strip_first = g1.total_degree() >= g2.total_degree();
    BiPoly& big = strip_first ? g1 : g2;
    const BiPoly& small = strip_first ? g2 : g1;
    const int db = big.total_degree(), ds = small.total_degree();
    if (ds < 1 || db % ds != 0) return std::nullopt;
    const auto d = static_cast<unsigned>(db / ds);
    BiPoly small_pow = small.pow(d);
    BiPoly lead_big = big.leading_form();
    BiPoly lead_pow = small_pow.leading_form();
    if (lead_big.leading_term().first != lead_pow.leading_term().first) return std::nullopt;
    const Rat mu = lead_big.leading_coeff() / lead_pow.leading_coeff();
    if (!(lead_big == lead_pow * mu)) return std::nullopt;
    big -= small_pow * mu;
    if (strip_first) {
      prefix.push_back(ElemX{UniPoly::monomial(mu, d)});
    } else {
      prefix.push_back(ElemY{UniPoly::monomial(mu, d)});
    }
  }
  Affine tail = detail::affine_from_images(g1, g2);
  if (sgn(tail.det()) == 0) return std::nullopt;
  prefix.push_back(tail);
  return simplify(TameAuto{std::move(prefix)});
}

// ---------------------------------------------------------------------------
// Triangular reduction and canonical forms

struct TriangularReduction {
  BiPoly result;
  AutoStep step;
};

// The reduction needs a root that is not rational.
struct FieldObstruction {
  std::string required_root;
};

struct NoReduction {};

using ReduceOutcome = std::variant<NoReduction, TriangularReduction, FieldObstruction>;

namespace detail {

// Weighted leading form restricted to a line: coefficient of t^e for every
// boundary term i*m + j*n = m*n, with e = i (x side) or e = j (y side).
inline UniPoly boundary_polynomial(const BiPoly& p, const TriangularForm& prof, bool by_x_exponent) {
  std::vector<Rat> coeffs;
  const std::uint64_t n = prof.n, m = prof.m;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.i * m + mono.j * n != m * n) continue;
    const std::uint32_t e = by_x_exponent ? mono.i : mono.j;
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] = c;
  }
  return UniPoly(std::move(coeffs));
}

// Highest multiplicity first, then positive, then smaller magnitude.
inline std::optional<Rat> preferred_root(const UniPoly& f) {
  auto roots = rational_roots(f);
  if (roots.empty()) return std::nullopt;
  std::stable_sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    if ((sgn(a.first) > 0) != (sgn(b.first) > 0)) return sgn(a.first) > 0;
    return abs(a.first) < abs(b.first);
  });
  return roots.front().first;
}

}  // namespace detail

/// One degree-lowering substitution for a triangular polynomial whose pure
/// degrees divide one another. If m = k*n the step is x -> x + mu*y^k with mu
/// a rational root of the boundary form sum c_ij mu^i (a*mu^n + b when there
/// are no mixed boundary terms); n = k*m is the mirror image. k = 1 gives an
/// Affine step.
inline ReduceOutcome reduce_triangular_once(const BiPoly& p) {
  const auto prof = triangular_profile(p);
  if (!prof) throw NotTriangularInput("reduce_triangular_once needs a triangular polynomial");
  const bool along_x = prof->m % prof->n == 0;
  const bool along_y = !along_x && prof->n % prof->m == 0;
  if (!along_x && !along_y) return NoReduction{};
  const UniPoly boundary = detail::boundary_polynomial(p, *prof, along_x);
  const auto mu = detail::preferred_root(boundary);
  if (!mu) return FieldObstruction{"root of " + boundary.to_string("mu")};
  AutoStep step;
  if (along_x) {
    const unsigned k = prof->m / prof->n;
    if (k == 1) {
      step = Affine{1, *mu, 0, 0, 1, 0};
    } else {
      step = ElemX{UniPoly::monomial(*mu, k)};
    }
  } else {
    const unsigned k = prof->n / prof->m;
    step = ElemY{UniPoly::monomial(*mu, k)};
  }
  return TriangularReduction{apply_step(step, p), step};
}

enum class CanonStatus { Canonical, LinearPoly, NonTriangular, FieldObstruction };

inline const char* to_string(CanonStatus s) {
  switch (s) {
    case CanonStatus::Canonical: return "canonical";
    case CanonStatus::LinearPoly: return "linear";
    case CanonStatus::NonTriangular: return "non_triangular";
    case CanonStatus::FieldObstruction: return "field_obstruction";
  }
  return "?";
}

struct Canonicalization {
  BiPoly result;
  TameAuto automorphism;  // apply_auto(automorphism, input) == result
  CanonStatus status = CanonStatus::Canonical;
  std::optional<TriangularForm> profile;
  std::string obstruction;
};

/// Greedy reduction to a canonical model. Each step lowers n + m, so the loop
/// terminates.
inline Canonicalization canonicalize(const BiPoly& p) {
  Canonicalization out{p, {}, CanonStatus::Canonical, std::nullopt, {}};
  for (;;) {
    out.profile = triangular_profile(out.result);
    if (!out.profile) {
      out.status = out.result.total_degree() <= 1 ? CanonStatus::LinearPoly : CanonStatus::NonTriangular;
      return out;
    }
    auto outcome = reduce_triangular_once(out.result);
    if (std::holds_alternative<NoReduction>(outcome)) {
      out.status = CanonStatus::Canonical;
      return out;
    }
    if (auto* obstruction = std::get_if<FieldObstruction>(&outcome)) {
      out.status = CanonStatus::FieldObstruction;
      out.obstruction = obstruction->required_root;
      return out;
    }
    auto& red = std::get<TriangularReduction>(outcome);
    out.result = std::move(red.result);
    out.automorphism.steps.push_back(red.step);
  }
}

/// No automorphism lowers the degree: triangular with m, n >= 2 and neither
/// dividing the other.
inline bool degree_irreducible(const BiPoly& p) {
  const auto prof = triangular_profile(p);
  return prof && prof->n >= 2 && prof->m >= 2 && prof->m % prof->n != 0 && prof->n % prof->m != 0;
}

struct InequivalenceCheck {
  bool inequivalent = false;  // false means inconclusive
  std::string note;
  Canonicalization p_canon;
  Canonicalization q_canon;
};

/// Sufficient test for inequivalence: both canonical models are triangular
/// with non-dividing degrees and their maximal degrees differ.
inline InequivalenceCheck inequivalent_by_canonical_degree(const BiPoly& p, const BiPoly& q) {
  InequivalenceCheck out{false, {}, canonicalize(p), canonicalize(q)};
  const auto& cp = out.p_canon;
  const auto& cq = out.q_canon;
  if (cp.status == CanonStatus::FieldObstruction || cq.status == CanonStatus::FieldObstruction) {
    out.note = "canonicalization needs an irrational root: " +
               (cp.status == CanonStatus::FieldObstruction ? cp.obstruction : cq.obstruction);
    return out;
  }
  if (cp.status != CanonStatus::Canonical || cq.status != CanonStatus::Canonical) {
    out.note = "a canonical model with non-dividing degrees was not reached";
    return out;
  }
  const auto mp = std::max(cp.profile->n, cp.profile->m);
  const auto mq = std::max(cq.profile->n, cq.profile->m);
  if (mp == mq) {
    out.note = "canonical models share maximal degree " + std::to_string(mp);
    return out;
  }
  out.inequivalent = true;
  out.note = "canonical maximal degrees " + std::to_string(mp) + " and " + std::to_string(mq) + " differ";
  return out;
}

}  // namespace planeauto
