#include "test_support.hpp"

using namespace scherk;
using namespace scherk::testing;

namespace {

Isometry glide() { return Isometry(Matrix{{1, 0}, {0, -1}}, vec({1, 0})); }
Isometry half_turn() { return Isometry(Matrix{{-1, 0}, {0, -1}}, vec({0, 0})); }
Reflection mirror_x_eq(long c) { return Reflection(e(2, 0), pt({c, 0})); }
Reflection mirror_y_eq(long c) { return Reflection(e(2, 1), pt({0, c})); }
AffineSubspaceE x_axis() { return AffineSubspaceE(pt({0, 0}), span({e(2, 0)}, 2)); }
AffineSubspaceE y_axis() { return AffineSubspaceE(pt({0, 0}), span({e(2, 1)}, 2)); }

} // namespace

TEST(FactorElliptic, Examples) {
  EXPECT_EQ(factor_elliptic(Isometry::identity(3)).length(), 0u);

  std::vector<AffineSubspaceE> chain{AffineSubspaceE::whole(2), x_axis(),
                                     AffineSubspaceE::singleton(pt({0, 0}))};
  auto f = factor_elliptic(half_turn(), chain);
  ASSERT_EQ(f.length(), 2u);
  EXPECT_EQ(f.product(), half_turn());
  // The last factor acts first and its fix-set is the x-axis.
  EXPECT_EQ(f.factors[1], mirror_y_eq(0));
  EXPECT_EQ(f.factors[0], Reflection(y_axis()));

  auto r = mirror_x_eq(3);
  auto fr = factor_elliptic(r.isometry());
  ASSERT_EQ(fr.length(), 1u);
  EXPECT_EQ(fr.factors[0], r);
}

TEST(FactorElliptic, Errors) {
  EXPECT_THROW(factor_elliptic(translation(vec({1, 0}))), InvalidArgument);
  auto origin = AffineSubspaceE::singleton(pt({0, 0}));
  // Wrong length.
  EXPECT_THROW(factor_elliptic(half_turn(), std::vector{AffineSubspaceE::whole(2), origin}),
               InvalidChain);
  // Not nested.
  auto shifted = AffineSubspaceE(pt({0, 1}), span({e(2, 0)}, 2));
  EXPECT_THROW(factor_elliptic(half_turn(), std::vector{AffineSubspaceE::whole(2), shifted, origin}),
               InvalidChain);
  // Wrong end.
  auto other = AffineSubspaceE::singleton(pt({1, 0}));
  EXPECT_THROW(factor_elliptic(half_turn(), std::vector{AffineSubspaceE::whole(2), x_axis(), other}),
               InvalidChain);
  // Wrong codimensions.
  EXPECT_THROW(factor_elliptic(half_turn(), std::vector{x_axis(), x_axis(), origin}),
               InvalidChain);
}

TEST(FactorHyperbolic, Examples) {
  auto t = translation(vec({2, 0}));
  auto f = factor_hyperbolic(t);
  ASSERT_EQ(f.length(), 2u);
  EXPECT_EQ(f.factors[0], mirror_x_eq(1));
  EXPECT_EQ(f.factors[1], mirror_x_eq(0));
  EXPECT_EQ(f.product(), t);

  auto g = factor_hyperbolic(glide());
  EXPECT_EQ(g.length(), 3u);
  EXPECT_EQ(g.product(), glide());
  EXPECT_TRUE(verify_minimal(g));

  auto t1 = translation(vec({5}));
  auto f1 = factor_hyperbolic(t1);
  ASSERT_EQ(f1.length(), 2u);
  EXPECT_EQ(f1.product(), t1);
  for (const auto &r : f1.factors) EXPECT_EQ(r.mirror().dim(), 0u);

  EXPECT_THROW(factor_hyperbolic(half_turn()), InvalidArgument);
}

TEST(ChainToFactorization, Examples) {
  auto t = translation(vec({2, 0}));
  std::vector<PosetElement> chain{inv_map(t), PosetElement::elliptic(y_axis()),
                                  PosetElement::bottom(2)};
  EXPECT_EQ(chain[0], PosetElement::hyperbolic(standard_form(LinearSubspace::zero(2), vec({2, 0}))));
  auto f = chain_to_factorization(chain, t);
  ASSERT_EQ(f.length(), 2u);
  EXPECT_EQ(f.factors[0], mirror_x_eq(1));
  EXPECT_EQ(f.factors[1], mirror_x_eq(0));

  std::vector<PosetElement> ell{inv_map(half_turn()), PosetElement::elliptic(x_axis()),
                                PosetElement::bottom(2)};
  auto fe = chain_to_factorization(ell, half_turn());
  EXPECT_EQ(fe.product(), half_turn());
  EXPECT_EQ(factorization_to_chain(fe), ell);

  std::vector<PosetElement> trivial{PosetElement::bottom(2)};
  EXPECT_EQ(chain_to_factorization(trivial, Isometry::identity(2)).length(), 0u);
}

TEST(ChainToFactorization, HyperbolicStepLandsOnChosenMoveSet) {
  // Glide with Mov = {(1, t)}; step down to the single motion (1, 2).
  auto target = PosetElement::hyperbolic(standard_form(LinearSubspace::zero(2), vec({1, 2})));
  auto below = PosetElement::elliptic(AffineSubspaceE(pt({0, 0}), span({vec({2, -1})}, 2)));
  std::vector<PosetElement> chain{inv_map(glide()), target, below, PosetElement::bottom(2)};
  auto f = chain_to_factorization(chain, glide());
  EXPECT_EQ(f.factors[0], Reflection(e(2, 1), pt({0, 1})));
  EXPECT_EQ(inv_map(f.product(1, 3)), target);
  EXPECT_EQ(f.product(1, 3), translation(vec({1, 2})));
  EXPECT_EQ(factorization_to_chain(f), chain);
}

TEST(ChainToFactorization, Errors) {
  auto t = translation(vec({2, 0}));
  auto bottom = PosetElement::bottom(2);
  // Not maximal.
  std::vector<PosetElement> short_chain{inv_map(t), bottom};
  EXPECT_THROW(chain_to_factorization(short_chain, t), InvalidChain);
  // Top mismatch.
  std::vector<PosetElement> wrong_top{inv_map(glide()), PosetElement::elliptic(y_axis()), bottom};
  EXPECT_THROW(chain_to_factorization(wrong_top, t), InvalidChain);
  // Not a chain: x-axis is not below h^{(2,0)}.
  std::vector<PosetElement> not_chain{inv_map(t), PosetElement::elliptic(x_axis()), bottom};
  EXPECT_THROW(chain_to_factorization(not_chain, t), InvalidChain);
  // Does not end at the bottom.
  std::vector<PosetElement> no_bottom{inv_map(t), PosetElement::elliptic(y_axis())};
  EXPECT_THROW(chain_to_factorization(no_bottom, t), InvalidChain);
}

TEST(FactorizationToChain, Examples) {
  EXPECT_EQ(factorization_to_chain(Factorization{Isometry::identity(2), {}}),
            std::vector<PosetElement>{PosetElement::bottom(2)});

  auto t = translation(vec({2, 0}));
  auto c = factorization_to_chain(factor_hyperbolic(t));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.front(), inv_map(t));
  EXPECT_EQ(c.back(), PosetElement::bottom(2));

  auto r = mirror_y_eq(2);
  auto cr = factorization_to_chain(Factorization{r.isometry(), {r}});
  EXPECT_EQ(cr, (std::vector<PosetElement>{PosetElement::elliptic(r.mirror()),
                                           PosetElement::bottom(2)}));
}

TEST(FactorizationToChain, RejectsNonMinimal) {
  auto r = mirror_x_eq(0);
  EXPECT_THROW(factorization_to_chain(Factorization{Isometry::identity(2), {r, r}}),
               InvalidChain);
  EXPECT_THROW(factorization_to_chain(Factorization{glide(), {r}}), InvalidChain);
}

TEST(RewriteShift, Examples) {
  auto t = translation(vec({2, 0}));
  auto f = factor_hyperbolic(t);
  auto g = rewrite_shift(f, {1}, true);
  EXPECT_EQ(g.product(), t);
  EXPECT_EQ(g.factors[0], f.factors[1]);
  EXPECT_NE(g.factors[1], f.factors[0]);
  EXPECT_EQ(g.factors[1].root(), e(2, 0));

  EXPECT_EQ(rewrite_shift(f, {0, 1}, true).factors, f.factors);
  EXPECT_EQ(rewrite_shift(f, {}, true).factors, f.factors);
  EXPECT_EQ(rewrite_shift(f, {}, false).factors, f.factors);
  EXPECT_THROW(rewrite_shift(f, {2}, true), InvalidArgument);
  EXPECT_THROW(rewrite_shift(f, {1, 1}, true), InvalidArgument);
}

TEST(VerifyMinimal, Examples) {
  EXPECT_TRUE(verify_minimal(factor_elliptic(half_turn())));
  auto r = mirror_x_eq(0);
  EXPECT_FALSE(verify_minimal(Factorization{Isometry::identity(2), {r, r}}));
  EXPECT_TRUE(verify_minimal(factor_hyperbolic(glide())));
  EXPECT_FALSE(verify_minimal(Factorization{glide(), {r}}));
}

class CorpusFactorization : public ::testing::TestWithParam<std::size_t> {};

TEST_P(CorpusFactorization, DefaultFactorizationIsMinimal) {
  const std::size_t n = GetParam();
  Rng rng(600 + n);
  for (int i = 0; i < 200; ++i) {
    auto w = random_corpus_isometry(n, rng);
    auto c = classify(w);
    auto f = factor(w);
    ASSERT_EQ(f.product(), w);
    ASSERT_EQ(f.length(), c.length);
    EXPECT_TRUE(verify_minimal(f));
    auto chain = factorization_to_chain(f);
    for (std::size_t k = 0; k < chain.size(); ++k) EXPECT_EQ(rank(chain[k]), f.length() - k);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) EXPECT_TRUE(less(chain[k + 1], chain[k]));
    if (c.elliptic()) {
      auto fix = AffineSubspaceE::whole(n);
      for (const auto &r : f.factors) fix = *intersect_affine(fix, r.mirror());
      EXPECT_EQ(fix, c.min_set);
    }
  }
}

TEST_P(CorpusFactorization, ChainRoundTrip) {
  const std::size_t n = GetParam();
  Rng rng(700 + n);
  for (int i = 0; i < 60; ++i) {
    auto w = random_corpus_isometry(n, rng);
    for (int j = 0; j < 3; ++j) {
      auto chain = random_maximal_chain(w, rng);
      auto f = chain_to_factorization(chain, w);
      EXPECT_EQ(f.product(), w);
      EXPECT_TRUE(verify_minimal(f));
      EXPECT_EQ(factorization_to_chain(f), chain);
    }
  }
}

TEST_P(CorpusFactorization, RewriteShiftKeepsReflectionsBelow) {
  const std::size_t n = GetParam();
  Rng rng(800 + n);
  for (int i = 0; i < 60; ++i) {
    auto w = random_corpus_isometry(n, rng);
    auto f = random_minimal_factorization(w, rng);
    std::vector<std::size_t> pos;
    for (std::size_t k = 0; k < f.length(); ++k)
      if (rng.coin()) pos.push_back(k);
    bool front = rng.coin();
    auto g = rewrite_shift(f, pos, front);
    EXPECT_EQ(g.product(), w);
    EXPECT_EQ(g.length(), f.length());
    EXPECT_TRUE(verify_minimal(g));
    for (std::size_t k = 0; k < pos.size(); ++k) {
      auto slot = front ? k : g.length() - pos.size() + k;
      EXPECT_EQ(g.factors[slot], f.factors[pos[k]]);
    }
    for (const auto &r : g.factors) EXPECT_TRUE(is_reflection_below(r, w));
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, CorpusFactorization, ::testing::Range<std::size_t>(1, 7));

TEST(Injectivity, SuffixesOfManyFactorizations) {
  Rng rng(900);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      auto w = random_corpus_isometry(n, rng);
      std::vector<std::pair<PosetElement, Isometry>> seen;
      for (int k = 0; k < 50; ++k) {
        auto f = random_minimal_factorization(w, rng);
        auto suffix = Isometry::identity(n);
        for (std::size_t i = f.length() + 1; i-- > 0;) {
          if (i < f.length()) suffix = f.factors[i] * suffix;
          seen.emplace_back(inv_map(suffix), suffix);
        }
      }
      std::size_t collisions = 0;
      for (std::size_t a = 0; a < seen.size(); ++a)
        for (std::size_t b = a + 1; b < seen.size(); ++b)
          if (seen[a].first == seen[b].first) {
            ++collisions;
            EXPECT_EQ(seen[a].second, seen[b].second);
          }
      EXPECT_GT(collisions, 0u);
    }
}
