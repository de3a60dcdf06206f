#include "test_support.hpp"

#include "scherk/oracle.hpp"

using namespace scherk;
using namespace scherk::testing;

namespace {

PosetElement ell(Point p, std::initializer_list<Vector> dirs) {
  const auto n = p.from_origin().size();
  return PosetElement::elliptic(AffineSubspaceE(std::move(p), span(dirs, n)));
}

PosetElement hyp(Vector mu, std::initializer_list<Vector> dirs) {
  const auto n = mu.size();
  return PosetElement::hyperbolic(standard_form(span(dirs, n), mu));
}

// Plane z = 1 in R³ and the bowtie pieces below it.
PosetElement plane_z1() { return hyp(vec({0, 0, 1}), {e(3, 0), e(3, 1)}); }
PosetElement line_y0() { return hyp(vec({0, 0, 1}), {e(3, 0)}); }
PosetElement line_y1() { return hyp(vec({0, 1, 1}), {e(3, 0)}); }
PosetElement wall_x0() { return ell(pt({0, 0, 0}), {e(3, 1), e(3, 2)}); }
PosetElement wall_x1() { return ell(pt({1, 0, 0}), {e(3, 1), e(3, 2)}); }

Isometry glide() { return Isometry(Matrix{{1, 0}, {0, -1}}, vec({1, 0})); }

} // namespace

TEST(InvMap, Examples) {
  EXPECT_EQ(inv_map(Isometry::identity(3)), PosetElement::bottom(3));
  EXPECT_EQ(inv_map(translation(vec({2, 0}))), hyp(vec({2, 0}), {}));
  Reflection r(vec({1, 1}), pt({1, 0}));
  EXPECT_EQ(inv_map(r.isometry()), PosetElement::elliptic(r.mirror()));
  EXPECT_EQ(inv_map(glide()), hyp(vec({1, 0}), {e(2, 1)}));
}

TEST(Leq, Examples) {
  EXPECT_TRUE(leq(PosetElement::bottom(3), plane_z1()));
  EXPECT_TRUE(leq(PosetElement::bottom(3), line_y0()));
  EXPECT_FALSE(leq(line_y0(), wall_x0()));
  EXPECT_FALSE(leq(plane_z1(), PosetElement::bottom(3)));
  EXPECT_TRUE(leq(wall_x0(), line_y0()));
  EXPECT_TRUE(leq(line_y0(), plane_z1()));
  EXPECT_FALSE(leq(plane_z1(), line_y0()));
  // Reverse inclusion on elliptics.
  auto point = ell(pt({0, 0, 0}), {});
  EXPECT_TRUE(leq(wall_x0(), point));
  EXPECT_FALSE(leq(point, wall_x0()));
  EXPECT_FALSE(leq(wall_x0(), wall_x1()));
}

TEST(Leq, AugmentedClauses) {
  auto n1 = PosetElement::added(span({e(3, 0)}, 3));
  auto n2 = PosetElement::added(span({e(3, 0), e(3, 1)}, 3));
  EXPECT_TRUE(leq(n1, n2));
  EXPECT_FALSE(leq(n2, n1));
  EXPECT_TRUE(leq(n1, line_y0()));
  EXPECT_FALSE(leq(n2, line_y0()));
  EXPECT_TRUE(leq(wall_x0(), n1));
  EXPECT_FALSE(leq(line_y0(), n2));
  EXPECT_FALSE(leq(n1, wall_x0()));
}

TEST(Leq, DimensionMismatch) {
  EXPECT_THROW(leq(PosetElement::bottom(2), PosetElement::bottom(3)), DimensionMismatch);
}

TEST(Elements, RejectInvalid) {
  EXPECT_THROW(PosetElement::hyperbolic(standard_form(span({e(2, 0)}, 2), Vector(2))),
               InvalidPoset);
  EXPECT_THROW(PosetElement::added(LinearSubspace::zero(3)), InvalidPoset);
  EXPECT_THROW(PosetContext(PosetElement::added(span({e(3, 0)}, 3))), InvalidPoset);
  EXPECT_THROW(PosetContext(PosetElement::bottom(2), true), InvalidPoset);
}

TEST(Rank, Examples) {
  PosetContext ctx(plane_z1(), true);
  EXPECT_EQ(rank(PosetElement::bottom(3), ctx), 0u);
  EXPECT_EQ(rank(hyp(vec({0, 0, 1}), {}), ctx), 2u);
  EXPECT_EQ(rank(wall_x0(), ctx), 1u);
  EXPECT_EQ(rank(PosetElement::added(span({e(3, 0)}, 3)), ctx), 2u);
  EXPECT_EQ(rank(plane_z1(), ctx), 4u);
  EXPECT_THROW(rank(hyp(vec({1, 0, 0}), {}), ctx), InvalidPoset);
}

TEST(Meet, Examples) {
  PosetContext plane(plane_z1());
  auto x = ell(pt({1, 0, 1}), {});
  auto hull = meet(x, ell(pt({0, 0, 1}), {}), plane);
  EXPECT_EQ(std::get<PosetElement>(hull), ell(pt({0, 0, 1}), {e(3, 0)}));
  EXPECT_EQ(std::get<PosetElement>(meet(x, x, plane)), x);

  auto m3 = hyp(vec({0, 1, 1}), {});
  EXPECT_EQ(std::get<PosetElement>(meet(line_y1(), hyp(vec({0, 1, 1}), {e(3, 1)}), plane)),
            m3);

  auto family = std::get<MeetFamily>(meet(line_y0(), line_y1(), plane));
  EXPECT_EQ(family.orth, span({e(3, 0)}, 3));
  EXPECT_TRUE(in_family(family, wall_x0()));
  EXPECT_TRUE(in_family(family, wall_x1()));
  EXPECT_FALSE(in_family(family, PosetElement::bottom(3)));

  // h ∧ e: Dir(C) spans Dir(B) and Span(M)⊥.
  auto c = std::get<PosetElement>(meet(line_y0(), ell(pt({0, 0, 1}), {}), plane));
  EXPECT_EQ(c, ell(pt({0, 0, 1}), {e(3, 1)}));
  EXPECT_THROW(meet(line_y0(), hyp(vec({1, 0, 0}), {}), plane), InvalidPoset);
}

TEST(Meet, DisjointMoveSetsWithTrivialSpanIntersection) {
  PosetContext ctx(hyp(vec({0, 0, 1}), {e(3, 0), e(3, 1)}));
  auto r = meet(hyp(vec({0, 0, 1}), {}), hyp(vec({1, 0, 1}), {}), ctx);
  EXPECT_EQ(std::get<PosetElement>(r), PosetElement::bottom(3));
}

TEST(Join, Examples) {
  PosetContext plane(plane_z1());
  auto a = ell(pt({0, 0, 0}), {e(3, 1), e(3, 2)});
  auto b = ell(pt({0, 0, 0}), {e(3, 0), e(3, 2)});
  EXPECT_EQ(std::get<PosetElement>(join(a, b, plane)), ell(pt({0, 0, 0}), {e(3, 2)}));
  EXPECT_EQ(std::get<PosetElement>(join(line_y0(), plane_z1(), plane)), plane_z1());
  EXPECT_EQ(std::get<PosetElement>(join(wall_x0(), plane_z1(), plane)), plane_z1());

  // Parallel walls under a one-dimensional move-set: the top is the join.
  PosetContext line(line_y0());
  EXPECT_EQ(std::get<PosetElement>(join(wall_x0(), wall_x1(), line)), line_y0());

  // Under the plane they have a family of minimal upper bounds.
  auto fam = std::get<JoinFamily>(join(wall_x0(), wall_x1(), plane));
  EXPECT_EQ(fam.dir, span({e(3, 0)}, 3));
  EXPECT_TRUE(in_family(fam, line_y0(), plane));
  EXPECT_TRUE(in_family(fam, line_y1(), plane));
}

TEST(Join, EllipticContextAlwaysHasJoins) {
  // Everything below e^B contains B, so joins always exist here.
  PosetContext ctx(ell(pt({0, 0}), {}));
  auto l1 = ell(pt({0, 0}), {e(2, 0)});
  auto l2 = ell(pt({0, 0}), {e(2, 1)});
  EXPECT_EQ(std::get<PosetElement>(join(l1, l2, ctx)), ctx.top());
}

TEST(IsLattice, Examples) {
  EXPECT_TRUE(is_lattice(PosetContext(PosetElement::bottom(3))));
  EXPECT_TRUE(is_lattice(PosetContext(ell(pt({1, 2}), {}))));
  EXPECT_TRUE(is_lattice(PosetContext(inv_map(glide()))));
  EXPECT_TRUE(is_lattice(PosetContext(hyp(vec({2, 0}), {}))));
  EXPECT_FALSE(is_lattice(PosetContext(plane_z1())));
  EXPECT_TRUE(is_lattice(PosetContext(plane_z1(), true)));
}

TEST(FindBowtie, Examples) {
  PosetContext ctx(plane_z1());
  auto t = find_bowtie(ctx, span({e(3, 0)}, 3));
  EXPECT_EQ(t.a, line_y0());
  EXPECT_EQ(t.b, line_y1());
  EXPECT_EQ(t.c, wall_x0());
  EXPECT_EQ(t.d, wall_x1());
  EXPECT_TRUE(is_bowtie(t, ctx));
  for (auto *lo : {&t.c, &t.d})
    for (auto *hi : {&t.a, &t.b}) EXPECT_TRUE(leq(*lo, *hi));

  auto t2 = find_bowtie(ctx, span({e(3, 1)}, 3));
  EXPECT_TRUE(is_bowtie(t2, ctx));
  EXPECT_NE(t2.a, t.a);
  EXPECT_TRUE(is_bowtie(find_bowtie(ctx), ctx));
  EXPECT_TRUE(is_bowtie(find_bowtie(ctx, span({vec({1, 1, 0})}, 3)), ctx));

  EXPECT_THROW(find_bowtie(PosetContext(line_y0())), InvalidPoset);
  EXPECT_THROW(find_bowtie(PosetContext(plane_z1(), true)), InvalidPoset);
  EXPECT_THROW(find_bowtie(ctx, span({e(3, 2)}, 3)), InvalidPoset);
  EXPECT_THROW(find_bowtie(ctx, span({e(3, 0), e(3, 1)}, 3)), InvalidPoset);
}

TEST(FindBowtie, HigherDimensionalMoveSets) {
  auto top = hyp(vec({0, 0, 0, 1}), {e(4, 0), e(4, 1), e(4, 2)});
  PosetContext ctx(top);
  EXPECT_FALSE(is_lattice(ctx));
  EXPECT_TRUE(is_bowtie(find_bowtie(ctx), ctx));
  EXPECT_TRUE(is_bowtie(find_bowtie(ctx, span({e(4, 0), e(4, 2)}, 4)), ctx));
}

TEST(IsBowtie, Rejections) {
  PosetContext ctx(plane_z1());
  auto t = find_bowtie(ctx);
  EXPECT_FALSE(is_bowtie({t.a, plane_z1(), t.c, t.d}, ctx));  // a < b
  EXPECT_FALSE(is_bowtie({t.a, t.b, t.c, t.c}, ctx));        // c = d
  EXPECT_FALSE(is_bowtie({t.b, t.a, PosetElement::bottom(3), t.d}, ctx));
  // Points of the lines are not above the walls.
  auto p0 = hyp(vec({0, 0, 1}), {});
  auto p1 = hyp(vec({0, 1, 1}), {});
  EXPECT_FALSE(is_bowtie({p0, p1, wall_x0(), wall_x1()}, ctx));
}

TEST(DmMeetJoin, Examples) {
  PosetContext ctx(plane_z1(), true);
  auto u = PosetElement::added(span({e(3, 0)}, 3));
  std::vector<PosetElement> lines{line_y0(), line_y1()};
  std::vector<PosetElement> walls{wall_x0(), wall_x1()};
  EXPECT_EQ(dm_meet(lines, ctx), u);
  EXPECT_EQ(dm_join(walls, ctx), u);
  for (const auto &p : {line_y0(), wall_x0(), u, plane_z1(), PosetElement::bottom(3)}) {
    std::vector<PosetElement> q{p};
    EXPECT_EQ(dm_meet(q, ctx), p);
    EXPECT_EQ(dm_join(q, ctx), p);
  }
  EXPECT_THROW(dm_meet(std::vector<PosetElement>{}, ctx), InvalidArgument);
  EXPECT_THROW(dm_join(std::vector<PosetElement>{}, ctx), InvalidArgument);

  // Points of the plane with no common direction meet at the bottom.
  std::vector<PosetElement> pts{hyp(vec({0, 0, 1}), {}), hyp(vec({1, 0, 1}), {})};
  EXPECT_EQ(dm_meet(pts, ctx), PosetElement::bottom(3));
  std::vector<PosetElement> both{walls[0], walls[1], line_y0()};
  EXPECT_EQ(dm_join(both, ctx), line_y0());
}

TEST(EllipticIso, Examples) {
  PosetContext ctx(ell(pt({0, 0}), {}));
  EXPECT_EQ(elliptic_to_subspace(ctx.top(), ctx), LinearSubspace::full(2));
  EXPECT_EQ(elliptic_to_subspace(PosetElement::bottom(2), ctx), LinearSubspace::zero(2));
  auto x_axis = ell(pt({0, 0}), {e(2, 0)});
  EXPECT_EQ(elliptic_to_subspace(x_axis, ctx), span({e(2, 1)}, 2));
  EXPECT_EQ(subspace_to_elliptic(span({e(2, 1)}, 2), ctx), x_axis);
  EXPECT_THROW(elliptic_to_subspace(x_axis, PosetContext(plane_z1())), InvalidPoset);
  EXPECT_THROW(elliptic_to_subspace(ell(pt({1, 1}), {}), ctx), InvalidPoset);

  PosetContext line(ell(pt({0, 1}), {e(2, 0)}));
  EXPECT_THROW(subspace_to_elliptic(span({e(2, 0)}, 2), line), InvalidPoset);
}

TEST(EllipticIso, BijectiveAndOrderPreservingOnCuratedFamilies) {
  for (const auto &u : curated_universes()) {
    if (u.ctx.hyperbolic()) continue;
    SCOPED_TRACE(u.name);
    for (const auto &p : u.elements) {
      auto w = elliptic_to_subspace(p, u.ctx);
      EXPECT_EQ(subspace_to_elliptic(w, u.ctx), p);
      for (const auto &q : u.elements)
        EXPECT_EQ(leq(p, q), w.is_subspace_of(elliptic_to_subspace(q, u.ctx)));
    }
  }
}

TEST(OrderAxioms, ExhaustiveOnCuratedUniverses) {
  for (const auto &u : curated_universes()) {
    SCOPED_TRACE(u.name);
    UniverseOracle o(u);
    const auto n = o.size();
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_TRUE(o.le(i, i));
      EXPECT_TRUE(u.ctx.contains(o.at(i)));
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) { EXPECT_FALSE(o.le(i, j) && o.le(j, i)); }
        for (std::size_t k = 0; k < n; ++k)
          if (o.le(i, j) && o.le(j, k)) { EXPECT_TRUE(o.le(i, k)); }
      }
    }
  }
}

TEST(OrderAxioms, RanksStrictlyIncreaseAlongTheOrder) {
  for (const auto &u : curated_universes()) {
    SCOPED_TRACE(u.name);
    for (const auto &p : u.elements)
      for (const auto &q : u.elements)
        if (less(p, q)) { EXPECT_LT(rank(p), rank(q)); }
  }
}

TEST(OrderPreservation, CoveringPairsFromFactorizations) {
  Rng rng(101);
  std::size_t pairs = 0;
  while (pairs < 1000) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    auto w = random_corpus_isometry(n, rng);
    if (w.is_identity()) continue;
    auto f = random_minimal_factorization(w, rng);
    auto rw = f.factors[0] * w;
    ASSERT_EQ(reflection_length(rw) + 1, reflection_length(w));
    EXPECT_TRUE(leq(inv_map(rw), inv_map(w)));
    EXPECT_EQ(rank(inv_map(rw)) + 1, rank(inv_map(w)));
    ++pairs;
  }
}

TEST(OrderPreservation, MotionReflectionsStepDown) {
  Rng rng(102);
  for (int i = 0; i < 300; ++i) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    auto w = random_corpus_isometry(n, rng);
    auto x = random_int_point(rng, n, 2);
    if (w(x) == x) continue;
    auto rw = motion_reflection(w, x) * w;
    EXPECT_EQ(reflection_length(rw) + 1, reflection_length(w));
    EXPECT_TRUE(less(inv_map(rw), inv_map(w)));
  }
}

TEST(IntervalIsomorphism, SampledIntervals) {
  Rng rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    auto n = static_cast<std::size_t>(rng.uniform(2, 3));
    auto w = random_corpus_isometry(n, rng);
    auto sample = sample_interval(w, rng.next(), 12);
    const auto top = inv_map(w);
    std::vector<PosetElement> invs;
    for (const auto &u : sample) {
      EXPECT_TRUE(interval_contains(w, u));
      invs.push_back(inv_map(u));
      EXPECT_TRUE(leq(invs.back(), top));
      EXPECT_EQ(rank(invs.back()), reflection_length(u));
    }
    for (std::size_t i = 0; i < sample.size(); ++i)
      for (std::size_t j = 0; j < sample.size(); ++j) {
        EXPECT_EQ(interval_leq(w, sample[i], sample[j]), leq(invs[i], invs[j]));
        if (invs[i] == invs[j]) { EXPECT_EQ(sample[i], sample[j]); }
      }
  }
}

TEST(MaximalChains, LengthEqualsReflectionLength) {
  Rng rng(104);
  for (int i = 0; i < 200; ++i) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    auto w = random_corpus_isometry(n, rng);
    auto chain = factorization_to_chain(factor(w));
    ASSERT_EQ(chain.size(), reflection_length(w) + 1);
    EXPECT_EQ(chain.front(), inv_map(w));
    EXPECT_EQ(chain.back(), PosetElement::bottom(n));
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      EXPECT_TRUE(less(chain[k + 1], chain[k]));
      EXPECT_EQ(rank(chain[k + 1]) + 1, rank(chain[k]));
    }
  }
}
