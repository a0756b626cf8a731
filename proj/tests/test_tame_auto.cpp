#include <gtest/gtest.h>

#include "support.hpp"

namespace planeauto {
namespace {

using testing::Rng;

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

TEST(ApplyAuto, Examples) {
  EXPECT_EQ(apply_auto({{ElemX{UniPoly({0, 0, 1})}}}, X.pow(2) - Y.pow(4)), X.pow(2) + BiPoly(2) * X * Y.pow(2));
  BiPoly p = X.pow(3) * Y - Y + BiPoly(4);
  EXPECT_EQ(apply_auto({}, p), p);
  EXPECT_EQ(apply_auto({{Affine::swap()}}, X.pow(2) - Y.pow(3)), Y.pow(2) - X.pow(3));
}

TEST(ApplyAuto, ComposeConvention) {
  Rng rng(31);
  for (int it = 0; it < 100; ++it) {
    TameAuto a = testing::random_auto(rng, 3, 2, 8), b = testing::random_auto(rng, 3, 2, 8);
    BiPoly p = testing::random_bipoly(rng, 3, 4);
    EXPECT_EQ(apply_auto(compose(a, b), p), apply_auto(b, apply_auto(a, p)));
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(std::get<ElemX>(invert(AutoStep{ElemX{UniPoly({0, 0, 1})}})), (ElemX{UniPoly({0, 0, -1})}));
  EXPECT_EQ(std::get<Affine>(invert(AutoStep{Affine::swap()})), Affine::swap());
}

TEST(Invert, ComposeWithInverseIsIdentity) {
  Rng rng(32);
  for (int it = 0; it < 200; ++it) {
    TameAuto a = testing::random_auto(rng, 4, 3, 16);
    auto [gx, gy] = images(compose(a, invert(a)));
    EXPECT_EQ(gx, X);
    EXPECT_EQ(gy, Y);
    auto [hx, hy] = images(compose(invert(a), a));
    EXPECT_EQ(hx, X);
    EXPECT_EQ(hy, Y);
  }
}

TEST(Simplify, SameMap) {
  Rng rng(33);
  for (int it = 0; it < 200; ++it) {
    TameAuto a = testing::random_auto(rng, 6, 2, 16);
    TameAuto s = simplify(a);
    EXPECT_TRUE(same_map(a, s));
    EXPECT_LE(s.steps.size(), a.steps.size());
  }
  EXPECT_TRUE(simplify({{Affine{}, ElemX{UniPoly()}}}).steps.empty());
}

TEST(Decompose, Examples) {
  auto a = decompose(X + Y.pow(2), Y);
  ASSERT_TRUE(a);
  ASSERT_EQ(a->steps.size(), 1u);
  EXPECT_EQ(std::get<ElemX>(a->steps[0]), (ElemX{UniPoly({0, 0, 1})}));
  a = decompose(Y, X);
  ASSERT_TRUE(a);
  ASSERT_EQ(a->steps.size(), 1u);
  EXPECT_EQ(std::get<Affine>(a->steps[0]), Affine::swap());
  EXPECT_FALSE(decompose(X.pow(2), Y));
}

TEST(Decompose, RejectsNonAutomorphisms) {
  EXPECT_FALSE(decompose(X + Y, BiPoly(2) * X + BiPoly(2) * Y));
  EXPECT_FALSE(decompose(X * Y, Y));
  EXPECT_FALSE(decompose(X + Y.pow(2), Y + X.pow(2)));
  EXPECT_FALSE(decompose(X, BiPoly(1)));
}

TEST(Decompose, RoundTrip) {
  Rng rng(34);
  for (int it = 0; it < 200; ++it) {
    TameAuto a = testing::random_auto(rng, 5, 3, 32);
    auto [gx, gy] = images(a);
    auto d = decompose(gx, gy);
    ASSERT_TRUE(d);
    EXPECT_TRUE(same_map(*d, a));
  }
}

// The leading forms fix mu and d: no other (mu', d') lowers the degree.
TEST(Decompose, StrippingPairIsUnique) {
  Rng rng(35);
  for (int it = 0; it < 100; ++it) {
    TameAuto a = testing::random_auto(rng, 4, 3, 24);
    auto [g1, g2] = images(a);
    if (g1.total_degree() < g2.total_degree()) std::swap(g1, g2);
    if (g1.total_degree() <= 1 || g2.total_degree() < 1) continue;
    int hits = 0;
    for (int d = 1; d <= g1.total_degree(); ++d) {
      BiPoly pw = g2.pow(static_cast<unsigned>(d));
      if (pw.leading_form().leading_term().first != g1.leading_form().leading_term().first) continue;
      const Rat mu = g1.leading_form().leading_coeff() / pw.leading_form().leading_coeff();
      if ((g1 - pw * mu).total_degree() < g1.total_degree()) ++hits;
      // any other multiple keeps the leading term
      EXPECT_EQ((g1 - pw * (mu + 1)).total_degree(), g1.total_degree());
    }
    EXPECT_EQ(hits, 1);
  }
}

TEST(ReduceTriangular, Examples) {
  auto r = reduce_triangular_once(X.pow(2) - Y.pow(4) + Y);
  ASSERT_TRUE(std::holds_alternative<TriangularReduction>(r));
  auto& red = std::get<TriangularReduction>(r);
  EXPECT_EQ(red.result, X.pow(2) + BiPoly(2) * X * Y.pow(2) + Y);
  EXPECT_EQ(std::get<ElemX>(red.step), (ElemX{UniPoly({0, 0, 1})}));
  EXPECT_TRUE(std::holds_alternative<NoReduction>(reduce_triangular_once(X.pow(2) - Y.pow(3))));
  auto o = reduce_triangular_once(X.pow(2) - BiPoly(2) * Y.pow(2));
  ASSERT_TRUE(std::holds_alternative<FieldObstruction>(o));
  EXPECT_EQ(std::get<FieldObstruction>(o).required_root, "root of mu^2 - 2");
  EXPECT_THROW(reduce_triangular_once(X.pow(2) + X * Y.pow(5)), NotTriangularInput);
}

TEST(ReduceTriangular, GeneralLeadingCoefficient) {
  // 4x^2 - 9y^2: a*mu^2 = -b gives mu = 3/2.
  auto r = reduce_triangular_once(BiPoly(4) * X.pow(2) - BiPoly(9) * Y.pow(2) + X);
  ASSERT_TRUE(std::holds_alternative<TriangularReduction>(r));
  const auto& red = std::get<TriangularReduction>(r);
  EXPECT_EQ(std::get<Affine>(red.step), (Affine{1, make_rat(3, 2), 0, 0, 1, 0}));
  EXPECT_LT(red.result.total_degree() + 0, 3);
  // mirrored: y^2 - x^4 reduces along y
  auto s = reduce_triangular_once(Y.pow(2) - X.pow(4) + X);
  ASSERT_TRUE(std::holds_alternative<TriangularReduction>(s));
  EXPECT_TRUE(std::holds_alternative<ElemY>(std::get<TriangularReduction>(s).step));
}

TEST(ReduceTriangular, LowersPureDegree) {
  Rng rng(36);
  int reduced = 0;
  for (int it = 0; it < 300; ++it) {
    const unsigned n = static_cast<unsigned>(testing::uniform(rng, 1, 3));
    const unsigned k = static_cast<unsigned>(testing::uniform(rng, 1, 3));
    const Rat mu = testing::nonzero_rat(rng, 2);
    // (x + mu*y^k)^n plus terms strictly under the triangle
    BiPoly p = (X + Y.pow(k) * mu).pow(n);
    p += BiPoly::monomial(testing::nonzero_rat(rng), 0, 1);
    if (!triangular_profile(p)) continue;
    auto r = reduce_triangular_once(p);
    if (!std::holds_alternative<TriangularReduction>(r)) continue;
    ++reduced;
    const auto& red = std::get<TriangularReduction>(r);
    EXPECT_EQ(apply_step(red.step, p), red.result);
    EXPECT_LT(red.result.degree_y(), p.degree_y());
  }
  EXPECT_GT(reduced, 250);
}

TEST(Canonicalize, Examples) {
  auto c = canonicalize(X + Y.pow(3) + Y);
  EXPECT_EQ(c.result, X);
  EXPECT_EQ(c.status, CanonStatus::LinearPoly);
  ASSERT_EQ(c.automorphism.steps.size(), 2u);
  EXPECT_EQ(std::get<ElemX>(c.automorphism.steps[0]), (ElemX{UniPoly({0, 0, 0, -1})}));

  c = canonicalize(X.pow(2) - Y.pow(3));
  EXPECT_EQ(c.result, X.pow(2) - Y.pow(3));
  EXPECT_TRUE(c.automorphism.steps.empty());
  EXPECT_EQ(c.status, CanonStatus::Canonical);

  c = canonicalize(X.pow(2) - Y.pow(4));
  EXPECT_EQ(c.result, X.pow(2) + BiPoly(2) * X * Y.pow(2));
  ASSERT_EQ(c.automorphism.steps.size(), 1u);
  EXPECT_EQ(c.status, CanonStatus::NonTriangular);

  c = canonicalize(X.pow(2) - BiPoly(2) * Y.pow(2));
  EXPECT_EQ(c.status, CanonStatus::FieldObstruction);
}

TEST(Canonicalize, AutomorphismReproducesResult) {
  Rng rng(37);
  for (int it = 0; it < 150; ++it) {
    // automorphic images of x^2 - y^3 + xy
    TameAuto a = testing::random_auto(rng, 3, 2, 6);
    BiPoly p = apply_auto(a, X.pow(2) - Y.pow(3) + X * Y);
    auto c = canonicalize(p);
    EXPECT_EQ(apply_auto(c.automorphism, p), c.result);
    if (c.status == CanonStatus::Canonical) {
      EXPECT_TRUE(degree_irreducible(c.result));
      auto again = canonicalize(c.result);
      EXPECT_EQ(again.result, c.result);
      EXPECT_TRUE(again.automorphism.steps.empty());
    }
  }
}

TEST(DegreeIrreducible, Examples) {
  EXPECT_TRUE(degree_irreducible(X.pow(2) - Y.pow(3) + X * Y));
  EXPECT_FALSE(degree_irreducible(X.pow(2) - Y.pow(4)));
  EXPECT_FALSE(degree_irreducible(X + Y.pow(2)));
}

TEST(DegreeIrreducible, NoAutomorphismLowersDegree) {
  Rng rng(38);
  const BiPoly ps[] = {X.pow(2) - Y.pow(3) + X * Y, X.pow(3) - Y.pow(5) + X * Y.pow(2) + BiPoly(1),
                       Y.pow(7) - X.pow(4) + Y};
  for (const auto& p : ps) {
    ASSERT_TRUE(degree_irreducible(p));
    for (int it = 0; it < 40; ++it) {
      TameAuto a = testing::random_auto(rng, 3, 3, 9);
      EXPECT_GE(apply_auto(a, p).total_degree(), p.total_degree());
    }
  }
}

TEST(TriangularClosure, ElementaryStepKeepsTriangle) {
  Rng rng(39);
  int checked = 0;
  while (checked < 300) {
    const unsigned n = static_cast<unsigned>(testing::uniform(rng, 1, 6));
    const unsigned m = static_cast<unsigned>(testing::uniform(rng, 1, 6));
    BiPoly p = BiPoly::monomial(testing::nonzero_rat(rng), n, 0) + BiPoly::monomial(testing::nonzero_rat(rng), 0, m);
    for (int t = 0; t < 4; ++t) {
      const auto i = static_cast<std::uint32_t>(testing::uniform(rng, 0, n));
      const auto j = static_cast<std::uint32_t>(testing::uniform(rng, 0, m));
      if (under_triangle({i, j}, n, m) && !(i == n && j == 0) && !(i == 0 && j == m))
        p.add_term({i, j}, testing::small_rat(rng));
    }
    const unsigned k = static_cast<unsigned>(testing::uniform(rng, 1, 4));
    if (k * n == m) continue;
    const BiPoly q = apply_step(ElemX{UniPoly::monomial(testing::nonzero_rat(rng), k)}, p);
    const auto prof = triangular_profile(q);
    ASSERT_TRUE(prof) << p << " -> " << q;
    const std::uint64_t nn = prof->n, mm = prof->m;
    EXPECT_EQ(mm, std::max<std::uint64_t>(m, std::uint64_t{k} * n));
    for (const auto& [mono, c] : q.terms()) EXPECT_LE(mono.i * mm + mono.j * nn, mm * nn);
    ++checked;
  }
}

TEST(CanonicalDegreeCriterion, Examples) {
  auto r = inequivalent_by_canonical_degree(Y - X.pow(7) + Y.pow(6), Y - (X.pow(7) - Y.pow(3)).pow(2));
  EXPECT_TRUE(r.inequivalent);
  EXPECT_FALSE(inequivalent_by_canonical_degree(X.pow(2) - Y.pow(3), X.pow(3) - Y.pow(2)).inequivalent);
  EXPECT_FALSE(inequivalent_by_canonical_degree(X.pow(2) - Y.pow(3), X.pow(2) - Y.pow(3)).inequivalent);
  auto o = inequivalent_by_canonical_degree(X.pow(2) - BiPoly(2) * Y.pow(2), X.pow(2) - Y.pow(3));
  EXPECT_FALSE(o.inequivalent);
  EXPECT_NE(o.note.find("irrational"), std::string::npos);
}

}  // namespace
}  // namespace planeauto
