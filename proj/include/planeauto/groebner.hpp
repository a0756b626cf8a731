#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "planeauto/multipoly.hpp"
#include "planeauto/unipoly.hpp"

namespace planeauto {

enum class OrderKind { Lex, GrLex };

/// Monomial order on exponent vectors. ranking[0] is the most significant
/// variable index.
struct MonOrder {
  OrderKind kind = OrderKind::GrLex;
  std::vector<std::size_t> ranking;

  static MonOrder lex(std::size_t arity) { return {OrderKind::Lex, identity(arity)}; }
  static MonOrder grlex(std::size_t arity) { return {OrderKind::GrLex, identity(arity)}; }

  bool less(const Exponent& a, const Exponent& b) const {
    if (kind == OrderKind::GrLex) {
      std::uint64_t da = 0, db = 0;
      for (auto e : a) da += e;
      for (auto e : b) db += e;
      if (da != db) return da < db;
    }
    for (std::size_t r : ranking)
      if (a[r] != b[r]) return a[r] < b[r];
    return false;
  }

  bool valid_for(std::size_t arity) const {
    if (ranking.size() != arity) return false;
    std::vector<std::size_t> sorted = ranking;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < arity; ++i)
      if (sorted[i] != i) return false;
    return true;
  }

 private:
  static std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> r(n);
    std::iota(r.begin(), r.end(), 0);
    return r;
  }
};

struct IdealBasis {
  std::vector<MultiPoly> generators;
  MonOrder order;
};

inline constexpr std::size_t kDefaultGroebnerBudget = 2'000'000;

namespace detail {

using Term = std::pair<Exponent, Rat>;

// Terms sorted descending under the active order.
struct OrderedPoly {
  std::vector<Term> terms;
  bool is_zero() const { return terms.empty(); }
  const Exponent& lm() const { return terms.front().first; }
  const Rat& lc() const { return terms.front().second; }
};

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

inline bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && b[k]) return false;
  return true;
}

class Engine {
 public:
  Engine(std::size_t arity, MonOrder order, std::size_t budget)
      : arity_(arity), order_(std::move(order)), budget_(budget) {}

  OrderedPoly from(const MultiPoly& f) const {
    OrderedPoly p;
    for (const auto& [e, c] : f.terms()) p.terms.emplace_back(e, c);
    sort(p);
    return p;
  }

  MultiPoly to_multi(const OrderedPoly& p, const std::vector<std::string>& vars) const {
    MultiPoly out(vars);
    for (const auto& [e, c] : p.terms) out.add_term(e, c);
    return out;
  }

  // Full reduction of f by the reducers.
  OrderedPoly reduce(const OrderedPoly& f, const std::vector<OrderedPoly>& reducers) {
    Desc desc{&order_};
    std::map<Exponent, Rat, Desc> work(desc);
    for (const auto& t : f.terms) work.emplace(t.first, t.second);
    OrderedPoly rem;
    Exponent shift(arity_);
    while (!work.empty()) {
      auto lead = work.begin();
      const OrderedPoly* hit = nullptr;
      for (const auto& g : reducers) {
        if (!g.is_zero() && divides(g.lm(), lead->first)) {
          hit = &g;
          break;
        }
      }
      if (!hit) {
        rem.terms.emplace_back(lead->first, lead->second);
        work.erase(lead);
        continue;
      }
      charge();
      Rat q = lead->second / hit->lc();
      for (std::size_t k = 0; k < arity_; ++k) shift[k] = lead->first[k] - hit->lm()[k];
      work.erase(lead);
      Exponent e(arity_);
      for (std::size_t t = 1; t < hit->terms.size(); ++t) {
        const auto& [ge, gc] = hit->terms[t];
        for (std::size_t k = 0; k < arity_; ++k) e[k] = ge[k] + shift[k];
        auto [it, inserted] = work.try_emplace(e, 0);
        it->second -= q * gc;
        if (sgn(it->second) == 0) work.erase(it);
      }
    }
    return rem;
  }

  OrderedPoly s_poly(const OrderedPoly& f, const OrderedPoly& g) const {
    Exponent l = exp_lcm(f.lm(), g.lm());
    std::map<Exponent, Rat, Desc> work(Desc{&order_});
    auto add_scaled = [&](const OrderedPoly& p, const Rat& k) {
      Exponent e(arity_);
      for (const auto& [pe, pc] : p.terms) {
        for (std::size_t i = 0; i < arity_; ++i) e[i] = pe[i] + l[i] - p.lm()[i];
        auto [it, inserted] = work.try_emplace(e, 0);
        it->second += k * pc;
        if (sgn(it->second) == 0) work.erase(it);
      }
    };
    add_scaled(f, Rat(1) / f.lc());
    add_scaled(g, Rat(-1) / g.lc());
    OrderedPoly out;
    for (auto& [e, c] : work) out.terms.emplace_back(e, c);
    return out;
  }

  static void make_primitive(OrderedPoly& p) {
    if (p.is_zero()) return;
    Int den = 1, num = 0;
    for (const auto& [e, c] : p.terms) den = int_lcm(den, c.get_den());
    for (const auto& [e, c] : p.terms) num = int_gcd(num, Rat(c * den).get_num());
    Rat k(den, num);
    k.canonicalize();
    if (sgn(p.lc()) < 0) k = -k;
    for (auto& [e, c] : p.terms) c *= k;
  }

  static void make_monic(OrderedPoly& p) {
    if (p.is_zero()) return;
    Rat k = Rat(1) / p.lc();
    for (auto& [e, c] : p.terms) c *= k;
  }

  static bool is_unit(const OrderedPoly& p) {
    if (p.terms.size() != 1) return false;
    for (auto e : p.lm())
      if (e) return false;
    return true;
  }

  std::vector<OrderedPoly> groebner(std::vector<OrderedPoly> input) {
    std::vector<OrderedPoly> basis;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add = [&](OrderedPoly p) {
      make_primitive(p);
      const std::size_t idx = basis.size();
      basis.push_back(std::move(p));
      for (std::size_t i = 0; i < idx; ++i) pending.emplace(i, idx);
    };
    for (auto& p : input) {
      if (p.is_zero()) continue;
      if (is_unit(p)) return unit_basis();
      add(std::move(p));
    }
    while (!pending.empty()) {
      // Normal strategy: the pair with the smallest lcm goes first.
      auto best = pending.begin();
      Exponent best_lcm = exp_lcm(basis[best->first].lm(), basis[best->second].lm());
      for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
        Exponent l = exp_lcm(basis[it->first].lm(), basis[it->second].lm());
        if (order_.less(l, best_lcm)) {
          best = it;
          best_lcm = std::move(l);
        }
      }
      auto [i, j] = *best;
      pending.erase(best);
      if (coprime(basis[i].lm(), basis[j].lm())) continue;
      if (chain_criterion(i, j, best_lcm, basis, pending)) continue;
      OrderedPoly r = reduce(s_poly(basis[i], basis[j]), basis);
      if (r.is_zero()) continue;
      if (r.terms.front().first == Exponent(arity_, 0)) return unit_basis();
      add(std::move(r));
    }
    return reduced(std::move(basis));
  }

 private:
  struct Desc {
    const MonOrder* order;
    bool operator()(const Exponent& a, const Exponent& b) const { return order->less(b, a); }
  };

  void sort(OrderedPoly& p) const {
    std::sort(p.terms.begin(), p.terms.end(),
              [&](const Term& a, const Term& b) { return order_.less(b.first, a.first); });
  }

  void charge() {
    if (++steps_ > budget_) throw BudgetExhausted("Groebner step budget exhausted");
  }

  std::vector<OrderedPoly> unit_basis() const {
    OrderedPoly one;
    one.terms.emplace_back(Exponent(arity_, 0), Rat(1));
    return {one};
  }

  static bool chain_criterion(std::size_t i, std::size_t j, const Exponent& l,
                              const std::vector<OrderedPoly>& basis,
                              const std::set<std::pair<std::size_t, std::size_t>>& pending) {
    auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == i || k == j) continue;
      if (!divides(basis[k].lm(), l)) continue;
      if (pending.count(key(i, k)) || pending.count(key(j, k))) continue;
      return true;
    }
    return false;
  }

  std::vector<OrderedPoly> reduced(std::vector<OrderedPoly> basis) {
    // Drop generators whose leading monomial is divisible by another's.
    std::vector<OrderedPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j) continue;
        if (divides(basis[j].lm(), basis[i].lm()) && (basis[j].lm() != basis[i].lm() || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<OrderedPoly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      OrderedPoly lead_only;
      lead_only.terms.push_back(minimal[i].terms.front());
      OrderedPoly tail;
      tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
      OrderedPoly tail_nf = reduce(tail, others);
      lead_only.terms.insert(lead_only.terms.end(), tail_nf.terms.begin(), tail_nf.terms.end());
      make_monic(lead_only);
      minimal[i] = std::move(lead_only);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const OrderedPoly& a, const OrderedPoly& b) { return order_.less(a.lm(), b.lm()); });
    return minimal;
  }

  std::size_t arity_;
  MonOrder order_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

inline std::size_t common_arity(const std::vector<MultiPoly>& polys, const MonOrder& order) {
  if (polys.empty()) return order.ranking.size();
  const auto& vars = polys.front().vars();
  for (const auto& p : polys)
    if (p.vars() != vars) throw InvalidArgument("generators over different variable lists");
  if (!order.valid_for(vars.size())) throw InvalidArgument("monomial order ranking is not a permutation of the variables");
  return vars.size();
}

}  // namespace detail

/// Remainder of f under multivariate division by the generators, tried in the
/// order given.
inline MultiPoly normal_form(const MultiPoly& f, const IdealBasis& basis) {
  std::vector<MultiPoly> all = basis.generators;
  all.push_back(f);
  const std::size_t arity = detail::common_arity(all, basis.order);
  detail::Engine engine(arity, basis.order, static_cast<std::size_t>(-1));
  std::vector<detail::OrderedPoly> reducers;
  for (const auto& g : basis.generators) reducers.push_back(engine.from(g));
  return engine.to_multi(engine.reduce(engine.from(f), reducers), f.vars());
}

/// Reduced Groebner basis (monic, no leading term divisible by another's).
/// Throws BudgetExhausted after `budget` reduction steps.
inline IdealBasis buchberger(const IdealBasis& basis, std::size_t budget = kDefaultGroebnerBudget) {
  const std::size_t arity = detail::common_arity(basis.generators, basis.order);
  if (basis.generators.empty()) return basis;
  detail::Engine engine(arity, basis.order, budget);
  std::vector<detail::OrderedPoly> input;
  for (const auto& g : basis.generators) input.push_back(engine.from(g));
  IdealBasis out{{}, basis.order};
  for (const auto& g : engine.groebner(std::move(input)))
    out.generators.push_back(engine.to_multi(g, basis.generators.front().vars()));
  return out;
}

/// Weak Nullstellensatz: solvable over the algebraic closure iff the reduced
/// basis is not {1}.
inline bool is_consistent_over_closure(const std::vector<MultiPoly>& generators,
                                       std::size_t budget = kDefaultGroebnerBudget) {
  if (generators.empty()) return true;
  auto gb = buchberger({generators, MonOrder::grlex(generators.front().arity())}, budget);
  for (const auto& g : gb.generators)
    if (g.is_constant() && !g.is_zero()) return false;
  return true;
}

namespace detail {

inline bool only_uses(const MultiPoly& p, std::size_t var) {
  for (const auto& [e, c] : p.terms())
    for (std::size_t k = 0; k < e.size(); ++k)
      if (k != var && e[k]) return false;
  return true;
}

inline bool mentions(const std::vector<MultiPoly>& polys, std::size_t var) {
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms())
      if (e[var]) return true;
  return false;
}

inline UniPoly as_univariate(const MultiPoly& p, std::size_t var) {
  std::vector<Rat> coeffs;
  for (const auto& [e, c] : p.terms()) {
    if (coeffs.size() <= e[var]) coeffs.resize(e[var] + 1);
    coeffs[e[var]] += c;
  }
  return UniPoly(std::move(coeffs));
}

// Root preference: 1 first, then smaller magnitude, positives before negatives.
inline void sort_by_preference(std::vector<Rat>& values) {
  std::stable_sort(values.begin(), values.end(), [](const Rat& a, const Rat& b) {
    auto key = [](const Rat& r) { return std::make_tuple(r != 1, Rat(abs(r)), sgn(r) < 0); };
    return key(a) < key(b);
  });
}

using TrialHints = std::vector<std::vector<Rat>>;

inline bool solve_from(std::vector<MultiPoly> polys, int var, std::vector<Rat>& point, std::size_t budget,
                       const TrialHints& hints) {
  if (var < 0) {
    for (const auto& p : polys)
      if (!p.is_zero()) return false;
    return true;
  }
  const std::size_t arity = point.size();
  IdealBasis gb = buchberger({polys, MonOrder::lex(arity)}, budget);
  for (const auto& g : gb.generators)
    if (g.is_constant() && !g.is_zero()) return false;
  const auto v = static_cast<std::size_t>(var);
  std::vector<Rat> candidates;
  if (!mentions(gb.generators, v)) {
    candidates = {Rat(0)};
  } else {
    const MultiPoly* univariate = nullptr;
    for (const auto& g : gb.generators)
      if (!g.is_zero() && only_uses(g, v)) {
        univariate = &g;
        break;
      }
    if (univariate) {
      for (const auto& [r, mult] : rational_roots(as_univariate(*univariate, v))) candidates.push_back(r);
    } else {
      candidates = {Rat(1), Rat(0), Rat(-1), Rat(2), Rat(-2), Rat(3), Rat(-3), make_rat(1, 2), make_rat(-1, 2)};
      sort_by_preference(candidates);
      if (v < hints.size()) {
        std::vector<Rat> merged = hints[v];
        for (const auto& c : candidates)
          if (std::find(merged.begin(), merged.end(), c) == merged.end()) merged.push_back(c);
        candidates = std::move(merged);
      }
    }
    if (univariate) sort_by_preference(candidates);
  }
  for (const auto& value : candidates) {
    std::vector<MultiPoly> next;
    for (const auto& g : gb.generators) {
      MultiPoly s = g.substitute_value(v, value);
      if (!s.is_zero()) next.push_back(std::move(s));
    }
    point[v] = value;
    if (solve_from(std::move(next), var - 1, point, budget, hints)) return true;
  }
  return false;
}

}  // namespace detail

/// A rational solution of the system, found by lex elimination and
/// back-substitution from the last variable up. Free variables get small
/// trial values, hints[v] first. nullopt means none was found, not that none
/// exists.
inline std::optional<std::vector<Rat>> find_rational_point(const std::vector<MultiPoly>& generators,
                                                           std::size_t budget = kDefaultGroebnerBudget,
                                                           const detail::TrialHints& hints = {}) {
  if (generators.empty()) return std::vector<Rat>{};
  const std::size_t arity = generators.front().arity();
  std::vector<Rat> point(arity);
  if (!detail::solve_from(generators, static_cast<int>(arity) - 1, point, budget, hints)) return std::nullopt;
  for (const auto& g : generators)
    if (sgn(g.eval(point)) != 0) return std::nullopt;
  return point;
}

}  // namespace planeauto
