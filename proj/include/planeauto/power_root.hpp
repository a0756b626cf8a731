#pragma once

#include <numeric>
#include <optional>

#include "planeauto/bipoly.hpp"

namespace planeauto {

struct PowerDecomposition {
  BiPoly root;     // normalized
  unsigned mult;   // maximal exponent
};

namespace detail {

// Monic e-th root of a graded-lex monic polynomial, term by term from the top:
// once t1..tk are fixed, the leading term of R - (t1+..+tk)^e is e*t1^(e-1)*t(k+1).
inline std::optional<BiPoly> monic_root(const BiPoly& monic, unsigned e) {
  const Mono lead = monic.leading_term().first;
  if (lead.i % e != 0 || lead.j % e != 0) return std::nullopt;
  const Mono top{lead.i / e, lead.j / e};
  const Mono scale{top.i * (e - 1), top.j * (e - 1)};
  BiPoly root = BiPoly::monomial(1, top.i, top.j);
  Mono last = top;
  GradedLex less;
  for (;;) {
    BiPoly diff = monic - root.pow(e);
    if (diff.is_zero()) return root;
    const auto& [dm, dc] = diff.leading_term();
    if (dm.i < scale.i || dm.j < scale.j) return std::nullopt;
    Mono next{dm.i - scale.i, dm.j - scale.j};
    if (!less(next, last)) return std::nullopt;
    root.add_term(next, dc / e);
    last = next;
  }
}

}  // namespace detail

/// R = c * root^mult with mult maximal and root normalized.
inline PowerDecomposition perfect_power_root(const BiPoly& r) {
  if (r.is_constant()) throw ConstantInput("perfect_power_root of a constant");
  BiPoly monic = r * (Rat(1) / r.leading_coeff());
  const Mono lead = monic.leading_term().first;
  const unsigned g = std::gcd(lead.i, lead.j);
  for (unsigned e = g; e >= 2; --e) {
    if (g % e != 0) continue;
    if (auto root = detail::monic_root(monic, e)) return {normalize(*root), e};
  }
  return {normalize(r), 1};
}

}  // namespace planeauto
