#include "test_support.hpp"

#include <fstream>

#include "scherk/json_io.hpp"

using namespace scherk;
using namespace scherk::testing;
using namespace scherk::json_io;

namespace {

json load(const std::string &name) {
  std::ifstream in(std::string(SCHERK_TEST_DATA) + "/" + name);
  return json::parse(in);
}

} // namespace

TEST(JsonScalars, RoundTripAndIntegers) {
  Scalar half(1, 2);
  EXPECT_EQ(to_json(half), "1/2");
  EXPECT_EQ(to_json(Scalar(-3)), "-3");
  EXPECT_EQ(scalar_from(json("1/2")), half);
  EXPECT_EQ(scalar_from(json("2/4")), half);
  EXPECT_EQ(scalar_from(json(-7)), Scalar(-7));
  EXPECT_THROW(scalar_from(json(0.5)), ParseError);
  EXPECT_THROW(scalar_from(json("1/0")), ParseError);
  EXPECT_THROW(scalar_from(json("abc")), ParseError);
}

TEST(JsonIsometry, RoundTrip) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    auto w = random_corpus_isometry(n, rng);
    EXPECT_EQ(isometry_from(to_json(w)), w);
    EXPECT_EQ(isometry_from(json::parse(to_json(w).dump())), w);
  }
}

TEST(JsonIsometry, ReflectionListActsRightToLeft) {
  Reflection r1(vec({1, 0}), pt({0, 0}));
  Reflection r2(vec({1, 1}), pt({1, 0}));
  json j{{"reflections", {to_json(r1), to_json(r2)}}};
  EXPECT_EQ(isometry_from(j), r1.isometry() * r2.isometry());
  EXPECT_NE(isometry_from(j), r2.isometry() * r1.isometry());

  json empty{{"reflections", json::array()}, {"dim", 3}};
  EXPECT_EQ(isometry_from(empty), Isometry::identity(3));
  EXPECT_THROW(isometry_from(json{{"reflections", json::array()}}), ParseError);
}

TEST(JsonIsometry, Errors) {
  EXPECT_THROW(isometry_from(load("not_orthogonal.json")), InvalidIsometry);
  EXPECT_THROW(isometry_from(json{{"dim", 2}, {"matrix", json::array({json::array({"1", "0"})})}, {"translation", {"0", "0"}}}),
               DimensionMismatch);
  EXPECT_THROW(isometry_from(json{{"matrix", json::array()}}), ParseError);
  EXPECT_THROW(isometry_from(json{{"dim", -1}, {"matrix", json::array()}, {"translation", json::array()}}),
               ParseError);
  json zero_root{{"reflections", {{{"root", {"0", "0"}}, {"point", {"0", "0"}}}}}};
  EXPECT_THROW(isometry_from(zero_root), InvalidIsometry);
  json mixed{{"reflections", {{{"root", {"1", "0"}}, {"point", {"0", "0"}}},
                              {{"root", {"1", "0", "0"}}, {"point", {"0", "0", "0"}}}}}};
  EXPECT_THROW(isometry_from(mixed), DimensionMismatch);
}

TEST(JsonIsometry, DataFiles) {
  auto glide = isometry_from(load("glide.json"));
  EXPECT_EQ(glide, Isometry(Matrix{{1, 0}, {0, -1}}, vec({1, 0})));
  EXPECT_EQ(isometry_from(load("identity.json")), Isometry::identity(3));
  EXPECT_THROW(load("malformed.json"), json::exception);
}

TEST(JsonSubspaces, RoundTripAndReduction) {
  auto u = span({vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 1, 0})}, 3);
  EXPECT_EQ(subspace_from(to_json(u)), u);
  EXPECT_EQ(to_json(u)["basis"].size(), 2u);

  AffineSubspaceE b(pt({1, 1, 1}), span({e(3, 0)}, 3));
  EXPECT_EQ(affine_e_from(to_json(b)), b);
  auto m = standard_form(span({e(3, 1)}, 3), vec({1, 5, 0}));
  EXPECT_EQ(affine_v_from(to_json(m)), m);
  EXPECT_EQ(to_json(m)["mu"], json({"1", "0", "0"}));
  EXPECT_THROW(affine_e_from(to_json(m)), ParseError);
}

TEST(JsonElements, RoundTripEveryCuratedElement) {
  for (const auto &u : curated_universes())
    for (const auto &p : u.elements) EXPECT_EQ(element_from(to_json(p)), p);
  EXPECT_THROW(element_from(json{{"kind", "x"}}), ParseError);
  auto linear = json{{"kind", "h"}, {"M", to_json(standard_form(span({e(2, 0)}, 2), Vector(2)))}};
  EXPECT_THROW(element_from(linear), InvalidPoset);
}

TEST(JsonElements, MixedDimensionsRejected) {
  json es = {to_json(PosetElement::bottom(2)), to_json(PosetElement::bottom(3))};
  EXPECT_THROW(elements_from(es), DimensionMismatch);
}

TEST(JsonFactorization, RoundTrip) {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    auto f = random_minimal_factorization(random_corpus_isometry(n, rng), rng);
    auto back = factorization_from(to_json(f));
    EXPECT_EQ(back.target, f.target);
    EXPECT_EQ(back.factors, f.factors);
  }
}

TEST(JsonResults, Encodings) {
  MeetResult fam = MeetFamily{span({e(3, 0)}, 3)};
  EXPECT_EQ(to_json(fam)["kind"], "meet_family");
  EXPECT_EQ(to_json(JoinResult{NoUpperBound{}}), json({{"kind", "none"}}));
  JoinResult el = PosetElement::bottom(2);
  EXPECT_EQ(to_json(el)["element"]["kind"], "e");
}

TEST(JsonUniverse, DataFileMatchesGenerator) {
  auto u = bowtie_universe();
  EXPECT_EQ(load("bowtie_universe.json"), to_json(u));
  auto j = load("bowtie_universe.json");
  auto ctx = context_from(j);
  EXPECT_EQ(ctx.top(), u.ctx.top());
  EXPECT_FALSE(ctx.augmented());
  EXPECT_TRUE(context_from(j, true).augmented());
  EXPECT_EQ(elements_from(j["elements"]), u.elements);
}
