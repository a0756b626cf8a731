#pragma once

#include <type_traits>
#include <algorithm>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "planeauto/unipoly.hpp"

namespace planeauto {

// (u, v) -> (u + mu*v^k, v), mu != 0, k >= 2
struct AddPower1 {
  Rat mu;
  unsigned k = 2;
  friend bool operator==(const AddPower1&, const AddPower1&) = default;
};

// (u, v) -> (u, v + mu*u^k), mu != 0, k >= 2
struct AddPower2 {
  Rat mu;
  unsigned k = 2;
  friend bool operator==(const AddPower2&, const AddPower2&) = default;
};

// (u, v) -> (a1*u + a2*v, b1*u + b2*v), a1*b2 - a2*b1 != 0
struct LinearET {
  Rat a1 = 1, a2 = 0, b1 = 0, b2 = 1;
  Rat det() const { return a1 * b2 - a2 * b1; }
  friend bool operator==(const LinearET&, const LinearET&) = default;
};

using ETStep = std::variant<AddPower1, AddPower2, LinearET>;

struct PolyPair {
  UniPoly u;
  UniPoly v;
  friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

struct ReductionTrace {
  std::vector<ETStep> steps;
  std::vector<int> degree_profile;  // max degree after each step
};

inline int max_degree(const PolyPair& p) { return std::max(p.u.degree(), p.v.degree()); }

/// Reduction measure: (max degree, number of components attaining it).
/// A Linear step cancelling equal leading terms lowers the second entry, which
/// is how "(u, v) -> (u - v, v) reduces the maximum" becomes a strict decrease.
struct PeakMeasure {
  int max_degree = kZeroDegree;
  int at_max = 0;
  friend auto operator<=>(const PeakMeasure&, const PeakMeasure&) = default;
};

inline PeakMeasure peak_measure(const PolyPair& p) {
  const int d = max_degree(p);
  if (d == kZeroDegree) return {};
  return {d, (p.u.degree() == d ? 1 : 0) + (p.v.degree() == d ? 1 : 0)};
}

inline void validate(const ETStep& step) {
  std::visit(
      [](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, LinearET>) {
          if (sgn(s.det()) == 0) throw DegenerateLinear("linear ET with zero determinant");
        } else {
          if (sgn(s.mu) == 0) throw InvalidArgument("ET coefficient mu must be nonzero");
          if (s.k < 2) throw InvalidArgument("ET exponent k must be at least 2");
        }
      },
      step);
}

inline PolyPair apply_et(const PolyPair& pair, const ETStep& step) {
  validate(step);
  return std::visit(
      [&](const auto& s) -> PolyPair {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, AddPower1>) {
          return {pair.u + pair.v.pow(s.k) * s.mu, pair.v};
        } else if constexpr (std::is_same_v<S, AddPower2>) {
          return {pair.u, pair.v + pair.u.pow(s.k) * s.mu};
        } else {
          return {pair.u * s.a1 + pair.v * s.a2, pair.u * s.b1 + pair.v * s.b2};
        }
      },
      step);
}

inline ETStep inverse(const ETStep& step) {
  validate(step);
  return std::visit(
      [](const auto& s) -> ETStep {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, LinearET>) {
          Rat d = s.det();
          return LinearET{s.b2 / d, -s.a2 / d, -s.b1 / d, s.a1 / d};
        } else {
          return S{-s.mu, s.k};
        }
      },
      step);
}

/// A single ET lowering the peak measure, or nullopt. The only candidates are
/// leading-term cancellations: AddPower when one degree is a k-fold multiple
/// (k >= 2) of the other, Linear when the degrees are equal.
inline std::optional<ETStep> find_reducing_et(const PolyPair& pair) {
  const int du = pair.u.degree(), dv = pair.v.degree();
  if (du == kZeroDegree || dv == kZeroDegree) return std::nullopt;
  if (du > dv && dv >= 1 && du % dv == 0) {
    const auto k = static_cast<unsigned>(du / dv);
    return AddPower1{-pair.u.leading_coeff() / rat_pow(pair.v.leading_coeff(), k), k};
  }
  if (dv > du && du >= 1 && dv % du == 0) {
    const auto k = static_cast<unsigned>(dv / du);
    return AddPower2{-pair.v.leading_coeff() / rat_pow(pair.u.leading_coeff(), k), k};
  }
  if (du == dv) return LinearET{1, -pair.u.leading_coeff() / pair.v.leading_coeff(), 0, 1};
  return std::nullopt;
}

/// Greedy peak reduction; the result admits no reducing ET.
inline std::pair<PolyPair, ReductionTrace> peak_reduce(PolyPair pair) {
  ReductionTrace trace;
  while (auto step = find_reducing_et(pair)) {
    pair = apply_et(pair, *step);
    trace.steps.push_back(*step);
    trace.degree_profile.push_back(max_degree(pair));
  }
  return {std::move(pair), std::move(trace)};
}

namespace detail {

// Steps whose leading terms interact with the pair, plus a few generic ones.
inline std::vector<ETStep> oracle_candidates(const PolyPair& p, unsigned max_k) {
  std::vector<ETStep> out;
  const bool u_nz = !p.u.is_zero(), v_nz = !p.v.is_zero();
  for (unsigned k = 2; k <= max_k; ++k) {
    std::vector<Rat> mus1{Rat(1), Rat(-1)}, mus2{Rat(1), Rat(-1)};
    if (u_nz && v_nz) {
      mus1.push_back(-p.u.leading_coeff() / rat_pow(p.v.leading_coeff(), k));
      mus2.push_back(-p.v.leading_coeff() / rat_pow(p.u.leading_coeff(), k));
    }
    for (const auto& mu : mus1) out.push_back(AddPower1{mu, k});
    for (const auto& mu : mus2) out.push_back(AddPower2{mu, k});
  }
  out.push_back(LinearET{0, 1, 1, 0});
  out.push_back(LinearET{1, 1, 0, 1});
  out.push_back(LinearET{1, -1, 0, 1});
  out.push_back(LinearET{1, 0, 1, 1});
  out.push_back(LinearET{1, 0, -1, 1});
  if (u_nz && v_nz) {
    out.push_back(LinearET{1, -p.u.leading_coeff() / p.v.leading_coeff(), 0, 1});
    out.push_back(LinearET{1, 0, -p.v.leading_coeff() / p.u.leading_coeff(), 1});
  }
  return out;
}

// Whether applying `step` to `p` could possibly land below `target`; false
// only when the result's degree is forced above it.
inline bool may_land_below(const PolyPair& p, const ETStep& step, const PeakMeasure& target) {
  const int du = p.u.degree(), dv = p.v.degree();
  if (const auto* s = std::get_if<AddPower1>(&step)) {
    if (dv > target.max_degree) return false;
    const long lifted = dv == kZeroDegree ? kZeroDegree : static_cast<long>(s->k) * dv;
    return lifted <= du || lifted <= target.max_degree;
  }
  if (const auto* s = std::get_if<AddPower2>(&step)) {
    if (du > target.max_degree) return false;
    const long lifted = du == kZeroDegree ? kZeroDegree : static_cast<long>(s->k) * du;
    return lifted <= dv || lifted <= target.max_degree;
  }
  return true;
}

inline bool search(const PolyPair& p, unsigned depth_left, unsigned max_k, const PeakMeasure& target) {
  for (const auto& step : oracle_candidates(p, max_k)) {
    if (depth_left == 1 && !may_land_below(p, step, target)) continue;
    PolyPair next = apply_et(p, step);
    if (peak_measure(next) < target) return true;
    if (depth_left > 1 && search(next, depth_left - 1, max_k, target)) return true;
  }
  return false;
}

}  // namespace detail

/// Brute force: can some sequence of at most `depth` ETs, drawn from a finite
/// candidate set with k <= max(2, max degree), lower the peak measure?
inline bool sequence_reducible_oracle(const PolyPair& pair, unsigned depth) {
  if (depth > 3) throw SearchBudgetExceeded("oracle depth is limited to 3");
  if (depth == 0) return false;
  const unsigned max_k = static_cast<unsigned>(std::max(2, max_degree(pair)));
  return detail::search(pair, depth, max_k, peak_measure(pair));
}

}  // namespace planeauto
