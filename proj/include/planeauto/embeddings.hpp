#pragma once

#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "planeauto/tame_auto.hpp"

namespace planeauto {

/// primes = [p0, p1, ..., pk], distinct, with p0 > p1*...*pk.
struct FamilySpec {
  unsigned k = 2;
  std::vector<unsigned> primes;
};

namespace detail {

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// p_from * ... * p_to, 1 when empty.
inline unsigned prime_product(const FamilySpec& s, unsigned from, unsigned to) {
  unsigned out = 1;
  for (unsigned i = from; i <= to && i <= s.k; ++i) out *= s.primes[i];
  return out;
}

}  // namespace detail

inline void validate(const FamilySpec& s) {
  if (s.k < 2) throw InvalidFamilySpec("k must be at least 2");
  if (s.primes.size() != s.k + 1)
    throw InvalidFamilySpec("expected " + std::to_string(s.k + 1) + " primes, got " + std::to_string(s.primes.size()));
  std::set<unsigned> seen;
  for (unsigned p : s.primes) {
    if (!detail::is_prime(p)) throw InvalidFamilySpec(std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) throw InvalidFamilySpec("primes must be distinct");
  }
  std::uint64_t prod = 1;
  for (unsigned i = 1; i <= s.k; ++i) prod *= s.primes[i];
  if (s.primes[0] <= prod)
    throw InvalidFamilySpec("p0 = " + std::to_string(s.primes[0]) + " must exceed " + std::to_string(prod));
}

/// f_j = y - (x^p0 - y^(pj...pk))^(p1...p(j-1)), j = 1..k.
inline std::vector<BiPoly> family(const FamilySpec& s) {
  validate(s);
  std::vector<BiPoly> out;
  for (unsigned j = 1; j <= s.k; ++j) {
    const unsigned q = detail::prime_product(s, j, s.k);
    const unsigned r = detail::prime_product(s, 1, j - 1);
    BiPoly base = BiPoly::monomial(1, s.primes[0], 0) - BiPoly::monomial(1, 0, q);
    out.push_back(BiPoly::y() - base.pow(r));
  }
  return out;
}

/// Ring maps between K[x,y]/(f) and K[x,y]/(g), given by images of x and y.
struct IsoWitness {
  std::pair<BiPoly, BiPoly> forward;   // K[x,y]/(f) -> K[x,y]/(g)
  std::pair<BiPoly, BiPoly> backward;  // K[x,y]/(g) -> K[x,y]/(f)
};

/// Witness between f_j and f_(j+1): forward y -> (x^p0 - y^(p(j+1)...pk))^(p1...p(j-1)),
/// backward y -> y^pj, x fixed both ways.
inline IsoWitness tietze_witness(const FamilySpec& s, unsigned j) {
  validate(s);
  if (j < 1 || j >= s.k) throw BadIndex("junction index must lie in [1, " + std::to_string(s.k - 1) + "]");
  const unsigned q = detail::prime_product(s, j + 1, s.k);
  const unsigned r = detail::prime_product(s, 1, j - 1);
  BiPoly base = BiPoly::monomial(1, s.primes[0], 0) - BiPoly::monomial(1, 0, q);
  return {{BiPoly::x(), base.pow(r)}, {BiPoly::x(), BiPoly::monomial(1, 0, s.primes[j])}};
}

inline IsoWitness identity_witness() { return {{BiPoly::x(), BiPoly::y()}, {BiPoly::x(), BiPoly::y()}}; }

/// Chains a witness f -> g with a witness g -> h.
inline IsoWitness chain(const IsoWitness& fg, const IsoWitness& gh) {
  auto through = [](const std::pair<BiPoly, BiPoly>& outer, const std::pair<BiPoly, BiPoly>& inner) {
    return std::pair{substitute(inner.first, outer.first, outer.second),
                     substitute(inner.second, outer.first, outer.second)};
  };
  // x -> fg(x) -> gh applied to it.
  return {through(gh.forward, fg.forward), through(fg.backward, gh.backward)};
}

namespace detail {

inline bool divides(const BiPoly& d, const BiPoly& p) {
  if (p.is_zero()) return true;
  return exact_divide(p, d).has_value();
}

}  // namespace detail

/// Principal-ideal membership checks that the two maps are well defined and
/// mutually inverse.
inline bool verify_isomorphism(const BiPoly& f, const BiPoly& g, const IsoWitness& w) {
  const auto& [fx, fy] = w.forward;
  const auto& [bx, by] = w.backward;
  if (!detail::divides(g, substitute(f, fx, fy))) return false;
  if (!detail::divides(f, substitute(g, bx, by))) return false;
  // forward then backward, read in K[x,y]/(f)
  if (!detail::divides(f, substitute(fx, bx, by) - BiPoly::x())) return false;
  if (!detail::divides(f, substitute(fy, bx, by) - BiPoly::y())) return false;
  if (!detail::divides(g, substitute(bx, fx, fy) - BiPoly::x())) return false;
  if (!detail::divides(g, substitute(by, fx, fy) - BiPoly::y())) return false;
  return true;
}

struct PairReport {
  std::size_t i = 0;
  std::size_t j = 0;
  TriangularForm profile_i;
  TriangularForm profile_j;
  std::string note;
};

/// Every pair must be inequivalent by the canonical-degree criterion.
inline std::vector<PairReport> verify_family_inequivalent(const std::vector<BiPoly>& fs) {
  std::vector<Canonicalization> canon;
  for (const auto& f : fs) canon.push_back(canonicalize(f));
  std::vector<PairReport> out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const auto& a = canon[i];
      const auto& b = canon[j];
      if (a.status != CanonStatus::Canonical || b.status != CanonStatus::Canonical)
        throw VerificationFailed("member " + std::to_string(i + 1) + " or " + std::to_string(j + 1) +
                                 " has no canonical model with non-dividing degrees");
      const auto ma = std::max(a.profile->n, a.profile->m);
      const auto mb = std::max(b.profile->n, b.profile->m);
      if (ma == mb)
        throw VerificationFailed("members " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                 " share canonical maximal degree " + std::to_string(ma));
      out.push_back({i, j, *a.profile, *b.profile,
                     "canonical maximal degrees " + std::to_string(ma) + " and " + std::to_string(mb) + " differ"});
    }
  }
  return out;
}

/// u(x) + v(y) with nonconstant u, v of coprime degrees is irreducible.
inline bool irreducible_by_axis_sum(const BiPoly& p) {
  std::uint32_t du = 0, dv = 0;
  for (const auto& [m, c] : p.terms()) {
    if (m.i && m.j) return false;
    du = std::max(du, m.i);
    dv = std::max(dv, m.j);
  }
  return du > 0 && dv > 0 && std::gcd(du, dv) == 1;
}

}  // namespace planeauto
