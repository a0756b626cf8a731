#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planeauto/et_engine.hpp"
#include "planeauto/groebner.hpp"
#include "planeauto/power_root.hpp"
#include "planeauto/resultant.hpp"
#include "planeauto/tame_auto.hpp"

namespace planeauto {

/// x = u(t), y = v(t).
struct ParamCurve {
  UniPoly u;
  UniPoly v;
};

struct ImplicitResult {
  BiPoly p;           // normalized
  unsigned mult = 1;  // p^mult is the resultant up to a constant
};

/// Minimal polynomial of the curve through Res_t(u(t) - x, v(t) - y).
inline ImplicitResult implicitize(const ParamCurve& c) {
  if (c.u.is_constant() && c.v.is_constant()) throw DegenerateCurve("both coordinates are constant");
  BiPoly r = resultant_any(curve_component_minus(c.u, BiPoly::x()), curve_component_minus(c.v, BiPoly::y()));
  auto [p, mult] = perfect_power_root(r);
  return {std::move(p), mult};
}

/// The plane automorphism whose action on the minimal polynomial mirrors the
/// ET on the parametrization.
inline AutoStep et_step_to_auto(const ETStep& step) {
  validate(step);
  return std::visit(
      [](const auto& s) -> AutoStep {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, AddPower1>) {
          return ElemX{UniPoly::monomial(-s.mu, s.k)};
        } else if constexpr (std::is_same_v<S, AddPower2>) {
          return ElemY{UniPoly::monomial(-s.mu, s.k)};
        } else {
          const Rat d = s.det();
          return Affine{s.b2 / d, -s.a2 / d, 0, -s.b1 / d, s.a1 / d, 0};
        }
      },
      step);
}

struct NormalizedCurve {
  ParamCurve curve;
  ReductionTrace trace;
  TameAuto automorphism;  // carries implicitize(input).p to implicitize(curve).p
};

inline NormalizedCurve normalize_curve(const ParamCurve& c) {
  auto [pair, trace] = peak_reduce(PolyPair{c.u, c.v});
  TameAuto alpha;
  for (const auto& s : trace.steps) alpha.steps.push_back(et_step_to_auto(s));
  return {ParamCurve{pair.u, pair.v}, std::move(trace), std::move(alpha)};
}

// ---------------------------------------------------------------------------
// Equivalence

enum class Verdict { Equivalent, Inequivalent, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::Inequivalent: return "Inequivalent";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

/// For Equivalent: apply_auto(*witness, p) == scale * q.
struct EquivDecision {
  Verdict verdict = Verdict::Unknown;
  std::optional<TameAuto> witness;
  Rat scale = 1;
  std::string reason;
};

namespace detail {

// Bivariate polynomial whose coefficients are polynomials in the unknowns.
class SymBi {
 public:
  using TermMap = std::map<Mono, MultiPoly, GradedLex>;

  explicit SymBi(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  void add_term(const Mono& m, const MultiPoly& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  const TermMap& terms() const { return terms_; }

  SymBi operator*(const SymBi& o) const {
    SymBi out(vars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) out.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
    return out;
  }

  SymBi one() const {
    SymBi out(vars_);
    out.add_term({0, 0}, MultiPoly::constant(vars_, 1));
    return out;
  }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

inline std::vector<SymBi> sym_powers(const SymBi& base, unsigned top) {
  std::vector<SymBi> out{base.one()};
  for (unsigned e = 1; e <= top; ++e) out.push_back(out.back() * base);
  return out;
}

struct StabilizerSolve {
  enum class Outcome { Solved, Inconsistent, NoRationalPoint } outcome;
  TameAuto sigma;
  Rat scale = 1;
};

// Exponents (alpha, beta) with m*beta - n*alpha = 1, alpha in [0, m).
inline std::pair<long, long> torus_exponents(unsigned n, unsigned m) {
  for (long alpha = 0; alpha < static_cast<long>(m); ++alpha)
    if ((1 + static_cast<long>(n) * alpha) % m == 0) return {alpha, (1 + static_cast<long>(n) * alpha) / m};
  return {0, 0};
}

inline Rat rat_ipow(const Rat& r, long e) { return e >= 0 ? rat_pow(r, e) : Rat(1) / rat_pow(r, -e); }

// Looks for sigma = (x -> a*x + s, y -> b*y + g(x)) with sigma(p) = c*q, or the
// mirror (x -> a*x + g(y), y -> b*y + s) when x_major is false. deg g <= d.
// Comparing x^n coefficients fixes c = A*a^n/A'.
inline StabilizerSolve solve_stabilizer(const BiPoly& p, const BiPoly& q, const TriangularForm& fp,
                                        const TriangularForm& fq, bool x_major, unsigned d, std::size_t budget) {
  std::vector<std::string> vars{"z"};
  for (unsigned k = 0; k <= d; ++k) vars.push_back("g" + std::to_string(k));
  for (const char* name : {"s", "b", "a"}) vars.emplace_back(name);
  const std::size_t iz = 0, ig = 1, is = d + 2, ib = d + 3, ia = d + 4;
  auto var = [&](std::size_t i) { return MultiPoly::variable(vars, i); };

  SymBi lin(vars), poly(vars);
  // lin = a*x + s (x_major) or b*y + s; poly = b*y + g(x) or a*x + g(y).
  if (x_major) {
    lin.add_term({1, 0}, var(ia));
    lin.add_term({0, 0}, var(is));
    poly.add_term({0, 1}, var(ib));
    for (unsigned k = 0; k <= d; ++k) poly.add_term({k, 0}, var(ig + k));
  } else {
    lin.add_term({0, 1}, var(ib));
    lin.add_term({0, 0}, var(is));
    poly.add_term({1, 0}, var(ia));
    for (unsigned k = 0; k <= d; ++k) poly.add_term({0, k}, var(ig + k));
  }
  const SymBi& X = x_major ? lin : poly;
  const SymBi& Y = x_major ? poly : lin;
  const auto xs = sym_powers(X, static_cast<unsigned>(std::max(0, p.degree_x())));
  const auto ys = sym_powers(Y, static_cast<unsigned>(std::max(0, p.degree_y())));

  SymBi image(vars);
  for (const auto& [m, c] : p.terms()) {
    SymBi term = xs[m.i] * ys[m.j];
    for (const auto& [tm, tc] : term.terms()) image.add_term(tm, tc * MultiPoly::constant(vars, c));
  }
  const Rat ratio = fp.a / fq.a;
  const MultiPoly cv = var(ia).pow(fp.n) * MultiPoly::constant(vars, ratio);
  for (const auto& [m, c] : q.terms()) image.add_term(m, cv * MultiPoly::constant(vars, -c));

  std::vector<MultiPoly> eqs;
  for (const auto& [m, c] : image.terms()) eqs.push_back(c);
  eqs.push_back(var(iz) * var(ia) * var(ib) - MultiPoly::constant(vars, 1));

  StabilizerSolve out{StabilizerSolve::Outcome::Inconsistent, {}, 1};
  if (!is_consistent_over_closure(eqs, budget)) return out;

  // b^m = K*a^n is forced; a = K^alpha * t^m, b = K^beta * t^n solves it.
  detail::TrialHints hints(vars.size());
  const Rat K = fp.a * fq.b / (fq.a * fp.b);
  const auto [alpha, beta] = torus_exponents(fp.n, fp.m);
  for (const Rat& t : {Rat(1), Rat(-1), Rat(2), Rat(-2), make_rat(1, 2), make_rat(-1, 2)}) {
    hints[ia].push_back(rat_ipow(K, alpha) * rat_pow(t, fp.m));
    hints[ib].push_back(rat_ipow(K, beta) * rat_pow(t, fp.n));
  }
  const auto point = find_rational_point(eqs, budget, hints);
  if (!point) {
    out.outcome = StabilizerSolve::Outcome::NoRationalPoint;
    return out;
  }
  const auto& pt = *point;
  const Rat a = pt[ia], b = pt[ib], s = pt[is];
  std::vector<Rat> high(d + 1);
  for (unsigned k = 2; k <= d; ++k) high[k] = pt[ig + k];
  UniPoly tail(std::move(high));
  if (x_major) {
    out.sigma.steps = {Affine{a, 0, s, pt[ig + 1], b, pt[ig]}, ElemY{tail * (Rat(1) / b)}};
  } else {
    out.sigma.steps = {Affine{a, pt[ig + 1], pt[ig], 0, b, s}, ElemX{tail * (Rat(1) / a)}};
  }
  out.sigma = simplify(out.sigma);
  out.scale = ratio * rat_pow(a, fp.n);
  out.outcome = StabilizerSolve::Outcome::Solved;
  return out;
}

// Affine map F with F(x) = l for a linear nonconstant l.
inline Affine affine_sending_x_to(const BiPoly& l) {
  const Rat al = l.coeff(1, 0), be = l.coeff(0, 1), ga = l.coeff(0, 0);
  if (sgn(al) != 0) return {al, be, ga, 0, 1, 0};
  return {al, be, ga, 1, 0, 0};
}

inline std::optional<Rat> constant_multiple(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero() || p.size() != q.size()) return std::nullopt;
  if (p.leading_term().first != q.leading_term().first) return std::nullopt;
  const Rat c = q.leading_coeff() / p.leading_coeff();
  if (!(p * c == q)) return std::nullopt;
  return c;
}

inline EquivDecision equivalent_with(TameAuto witness, const BiPoly& p, const BiPoly& q, const Rat& scale,
                                     std::string reason) {
  witness = simplify(witness);
  if (!(apply_auto(witness, p) == q * scale))
    throw Error("InternalError", "equivalence witness failed verification");
  return {Verdict::Equivalent, std::move(witness), scale, std::move(reason)};
}

}  // namespace detail

/// Decides whether a plane automorphism takes p to a nonzero multiple of q.
///
/// Both sides are canonicalized. Different canonical maximal degrees settle
/// inequivalence. Otherwise the remaining freedom is the stabilizer of the
/// triangle shape, whose coefficients are found with Groebner bases.
inline EquivDecision decide_equivalence(const BiPoly& p, const BiPoly& q,
                                        std::size_t budget = kDefaultGroebnerBudget) {
  if (p.is_constant() || q.is_constant()) throw ConstantInput("decide_equivalence needs nonconstant polynomials");
  if (auto c = detail::constant_multiple(p, q))
    return detail::equivalent_with({}, p, q, Rat(1) / *c, "q is a constant multiple of p");

  const auto cp = canonicalize(p);
  const auto cq = canonicalize(q);
  for (const auto* cz : {&cp, &cq}) {
    if (cz->status == CanonStatus::FieldObstruction)
      return {Verdict::Unknown, std::nullopt, 1, "canonicalization needs " + cz->obstruction};
    if (cz->status == CanonStatus::NonTriangular)
      return {Verdict::Unknown, std::nullopt, 1, "canonical reduction left the triangle form"};
  }
  const TameAuto back_q = invert(cq.automorphism);

  if (cp.status == CanonStatus::LinearPoly && cq.status == CanonStatus::LinearPoly) {
    TameAuto w = cp.automorphism;
    w.steps.push_back(invert(AutoStep{detail::affine_sending_x_to(cp.result)}));
    w.steps.push_back(detail::affine_sending_x_to(cq.result));
    return detail::equivalent_with(compose(w, back_q), p, q, 1, "both are coordinates");
  }
  if (cp.status != cq.status)
    return {Verdict::Inequivalent, std::nullopt, 1, "a coordinate is not equivalent to a degree-irreducible polynomial"};

  const TriangularForm fp = *cp.profile, fq = *cq.profile;
  const auto maxp = std::max(fp.n, fp.m), maxq = std::max(fq.n, fq.m);
  if (maxp != maxq)
    return {Verdict::Inequivalent, std::nullopt, 1,
            "canonical maximal degrees " + std::to_string(maxp) + " and " + std::to_string(maxq) + " differ"};

  // Put q's larger pure degree on the same axis as p's.
  TameAuto to_q = back_q;
  BiPoly target = cq.result;
  if ((fp.n > fp.m) != (fq.n > fq.m)) {
    target = apply_step(Affine::swap(), target);
    to_q.steps.insert(to_q.steps.begin(), Affine::swap());
  }
  const bool x_major = fp.n > fp.m;
  const unsigned d = x_major ? fp.n / fp.m : fp.m / fp.n;
  detail::StabilizerSolve solved;
  try {
    const TriangularForm ft = *triangular_profile(target);
    solved = detail::solve_stabilizer(cp.result, target, fp, ft, x_major, d, budget);
  } catch (const BudgetExhausted&) {
    return {Verdict::Unknown, std::nullopt, 1, "Groebner budget exhausted"};
  }
  switch (solved.outcome) {
    case detail::StabilizerSolve::Outcome::Inconsistent:
      return {Verdict::Inequivalent, std::nullopt, 1, "residual system is inconsistent over the closure"};
    case detail::StabilizerSolve::Outcome::NoRationalPoint:
      return {Verdict::Unknown, std::nullopt, 1, "equivalent over closure, no rational witness"};
    case detail::StabilizerSolve::Outcome::Solved:
      break;
  }
  TameAuto w = compose(compose(cp.automorphism, solved.sigma), to_q);
  return detail::equivalent_with(std::move(w), p, q, solved.scale, "residual system solved");
}

/// True when p is an automorphic image of x; nullopt when canonicalization
/// cannot settle it.
inline std::optional<bool> is_coordinate(const BiPoly& p) {
  if (p.is_constant()) throw ConstantInput("is_coordinate of a constant");
  const auto c = canonicalize(p);
  switch (c.status) {
    case CanonStatus::LinearPoly: return true;
    case CanonStatus::Canonical: return false;
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Screening for simply connected fibers

enum class ScreenKind { Candidate, Reject, Undetermined };

struct ZLScreen {
  ScreenKind kind = ScreenKind::Reject;
  unsigned k = 0;
  unsigned l = 0;
  std::vector<std::string> reasons;
};

namespace detail {

inline ZLScreen screen_pair(unsigned k, unsigned l, int deg) {
  ZLScreen out{ScreenKind::Candidate, k, l, {}};
  const unsigned g = std::gcd(k, l);
  if (g != 1)
    out.reasons.push_back("(c) gcd(" + std::to_string(k) + "," + std::to_string(l) + ") = " + std::to_string(g) +
                          " != 1");
  if (static_cast<int>(std::max(k, l)) > deg)
    out.reasons.push_back("(a) max(k,l) = " + std::to_string(std::max(k, l)) + " > deg p = " + std::to_string(deg));
  if (deg % static_cast<int>(k) != 0 && deg % static_cast<int>(l) != 0)
    out.reasons.push_back("(b) neither " + std::to_string(k) + " nor " + std::to_string(l) + " divides " +
                          std::to_string(deg));
  if (!out.reasons.empty()) out.kind = ScreenKind::Reject;
  return out;
}

}  // namespace detail

/// Necessary conditions for p to have an irreducible simply connected fiber,
/// with canonical model x^k - y^l.
inline ZLScreen zl_screen(const BiPoly& p) {
  if (p.is_constant()) throw ConstantInput("zl_screen of a constant");
  const int deg = p.total_degree();
  if (deg <= 1) return {ScreenKind::Candidate, 1, 1, {}};
  const auto prof = triangular_profile(p);
  if (!prof) return {ScreenKind::Reject, 0, 0, {"(c) Newton polygon is neither a triangle nor a line segment"}};
  const bool dividing = prof->m % prof->n == 0 || prof->n % prof->m == 0;
  if (!dividing) return detail::screen_pair(prof->n, prof->m, deg);

  if (std::min(prof->n, prof->m) >= 2) {
    BiPoly leading;
    for (const auto& [mono, c] : p.terms())
      if (std::uint64_t{mono.i} * prof->m + std::uint64_t{mono.j} * prof->n == std::uint64_t{prof->m} * prof->n)
        leading.add_term(mono, c);
    if (perfect_power_root(leading).mult < 2)
      return {ScreenKind::Reject, 0, 0, {"(c) leading part is not a proper power"}};
  }
  const auto canon = canonicalize(p);
  switch (canon.status) {
    case CanonStatus::LinearPoly:
      return {ScreenKind::Candidate, 1, 1, {}};
    case CanonStatus::Canonical:
      return detail::screen_pair(canon.profile->n, canon.profile->m, deg);
    case CanonStatus::NonTriangular:
      return {ScreenKind::Reject, 0, 0, {"(c) a reduction step leaves the triangle form"}};
    case CanonStatus::FieldObstruction:
      break;
  }
  return {ScreenKind::Undetermined, 0, 0, {"reduction needs " + canon.obstruction}};
}

inline const char* to_string(ScreenKind k) {
  switch (k) {
    case ScreenKind::Candidate: return "Candidate";
    case ScreenKind::Reject: return "Reject";
    case ScreenKind::Undetermined: return "Undetermined";
  }
  return "?";
}

}  // namespace planeauto
