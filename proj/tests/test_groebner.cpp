#include <gtest/gtest.h>

#include "support.hpp"

namespace planeauto {
namespace {

using testing::Rng;

const std::vector<std::string> kXY{"x", "y"};

MultiPoly P(const std::string& s, const std::vector<std::string>& vars = kXY) { return parse_multi(s, vars); }

// Leading exponent under `order`, computed independently of the engine.
Exponent lead(const MultiPoly& p, const MonOrder& order) {
  Exponent best = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    if (order.less(best, e)) best = e;
  return best;
}

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g, const MonOrder& order) {
  const Exponent lf = lead(f, order), lg = lead(g, order);
  Exponent l(lf.size());
  for (std::size_t k = 0; k < l.size(); ++k) l[k] = std::max(lf[k], lg[k]);
  MultiPoly mf(f.vars()), mg(g.vars());
  Exponent ef(l.size()), eg(l.size());
  for (std::size_t k = 0; k < l.size(); ++k) {
    ef[k] = l[k] - lf[k];
    eg[k] = l[k] - lg[k];
  }
  mf.add_term(ef, Rat(1) / f.terms().at(lf));
  mg.add_term(eg, Rat(1) / g.terms().at(lg));
  return mf * f - mg * g;
}

TEST(NormalForm, Examples) {
  IdealBasis lex{{P("x - y")}, MonOrder::lex(2)};
  EXPECT_EQ(normal_form(P("x^2*y"), lex), P("y^3"));
  EXPECT_TRUE(normal_form(MultiPoly(kXY), lex).is_zero());
  EXPECT_EQ(normal_form(P("x"), {{P("y")}, MonOrder::grlex(2)}), P("x"));
}

TEST(Buchberger, Examples) {
  auto gb = buchberger({{P("x", {"x"}), P("x - 1", {"x"})}, MonOrder::grlex(1)});
  ASSERT_EQ(gb.generators.size(), 1u);
  EXPECT_EQ(gb.generators[0], MultiPoly::constant({"x"}, 1));
  gb = buchberger({{P("x - y")}, MonOrder::lex(2)});
  ASSERT_EQ(gb.generators.size(), 1u);
  EXPECT_EQ(gb.generators[0], P("x - y"));
  gb = buchberger({{P("x^2 + 1", {"x"})}, MonOrder::grlex(1)});
  ASSERT_EQ(gb.generators.size(), 1u);
  EXPECT_EQ(gb.generators[0], P("x^2 + 1", {"x"}));
}

TEST(Buchberger, KnownBasis) {
  // Cox-Little-O'Shea: x^3 - 2xy, x^2y - 2y^2 + x under grlex.
  auto gb = buchberger({{P("x^3 - 2*x*y"), P("x^2*y - 2*y^2 + x")}, MonOrder::grlex(2)});
  EXPECT_EQ(gb.generators, (std::vector<MultiPoly>{P("y^2 - 1/2*x"), P("x*y"), P("x^2")}));
}

std::vector<MultiPoly> random_system(Rng& rng, std::size_t arity, int count) {
  std::vector<std::string> vars;
  for (std::size_t k = 0; k < arity; ++k) vars.push_back(std::string(1, static_cast<char>('a' + k)));
  std::vector<MultiPoly> out;
  for (int g = 0; g < count; ++g) {
    MultiPoly p(vars);
    const int terms = static_cast<int>(testing::uniform(rng, 2, 4));
    for (int t = 0; t < terms; ++t) {
      Exponent e(arity);
      long budget = testing::uniform(rng, 0, 3);
      for (auto& x : e) {
        x = static_cast<std::uint32_t>(testing::uniform(rng, 0, budget));
        budget -= x;
      }
      p.add_term(e, testing::nonzero_rat(rng));
    }
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

TEST(Buchberger, CriterionAndReducedness) {
  Rng rng(41);
  for (int it = 0; it < 60; ++it) {
    const std::size_t arity = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    auto gens = random_system(rng, arity, static_cast<int>(testing::uniform(rng, 1, 3)));
    if (gens.empty()) continue;
    const MonOrder order = it % 2 ? MonOrder::lex(arity) : MonOrder::grlex(arity);
    auto gb = buchberger({gens, order});
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
      const auto& g = gb.generators[i];
      EXPECT_EQ(g.terms().at(lead(g, order)), 1);
      for (std::size_t j = 0; j < gb.generators.size(); ++j) {
        if (i == j) continue;
        EXPECT_TRUE(normal_form(s_poly(g, gb.generators[j], order), gb).is_zero());
        const Exponent li = lead(g, order), lj = lead(gb.generators[j], order);
        bool divides = true;
        for (std::size_t k = 0; k < li.size(); ++k) divides = divides && li[k] <= lj[k];
        EXPECT_FALSE(divides);
      }
    }
    // Membership: combinations of the inputs reduce to zero.
    MultiPoly combo(gens.front().vars());
    for (const auto& g : gens) {
      auto mult = random_system(rng, arity, 1);
      if (!mult.empty()) combo += g * mult.front();
    }
    EXPECT_TRUE(normal_form(combo, gb).is_zero());
    for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
  }
}

TEST(Consistency, Examples) {
  EXPECT_FALSE(is_consistent_over_closure({P("x", {"x"}), P("x - 1", {"x"})}));
  EXPECT_TRUE(is_consistent_over_closure({P("x^2 + 1", {"x"})}));
  EXPECT_TRUE(is_consistent_over_closure({}));
}

TEST(Consistency, GridSolutionImpliesConsistent) {
  Rng rng(42);
  int with_solution = 0;
  for (int it = 0; it < 80; ++it) {
    auto gens = random_system(rng, 2, 2);
    if (gens.empty()) continue;
    // Force a grid solution at (r, s).
    const Rat r = testing::small_rat(rng, 2), s = testing::small_rat(rng, 2);
    for (auto& g : gens) g -= MultiPoly::constant(g.vars(), g.eval({r, s}));
    bool any = true;
    for (const auto& g : gens) any = any && !g.is_zero();
    if (!any) continue;
    ++with_solution;
    EXPECT_TRUE(is_consistent_over_closure(gens));
    auto pt = find_rational_point(gens);
    if (pt) {
      for (const auto& g : gens) EXPECT_EQ(sgn(g.eval(*pt)), 0);
    }
  }
  EXPECT_GT(with_solution, 40);
}

TEST(RationalPoint, BackSubstitution) {
  const std::vector<std::string> v{"a", "b"};
  auto pt = find_rational_point({P("a^2 - 4", v), P("a*b - 1", v)});
  ASSERT_TRUE(pt);
  EXPECT_EQ((*pt)[0] * (*pt)[1], 1);
  EXPECT_FALSE(find_rational_point({P("a^2 - 2", v), P("b", v)}));
  EXPECT_FALSE(find_rational_point({P("a", v), P("a - 1", v)}));
}

TEST(Budget, Exhaustion) {
  const std::vector<std::string> v{"a", "b", "c"};
  std::vector<MultiPoly> gens{P("a^3 - b*c + 1", v), P("b^3 - a*c - 2", v), P("c^3 - a*b + 3", v)};
  EXPECT_THROW(buchberger({gens, MonOrder::lex(3)}, 5), BudgetExhausted);
}

TEST(MonOrder, Validity) {
  EXPECT_TRUE(MonOrder::lex(3).valid_for(3));
  MonOrder bad{OrderKind::Lex, {0, 0}};
  EXPECT_FALSE(bad.valid_for(2));
}

}  // namespace
}  // namespace planeauto
