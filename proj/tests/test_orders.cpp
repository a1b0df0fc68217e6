#include <gtest/gtest.h>

#include "oracles.hpp"
#include "weyltrunc/errors.hpp"
#include "weyltrunc/orders.hpp"

using namespace weyltrunc;

namespace {

template <class Leq>
void expect_partial_order(const std::vector<Weight>& pts, Leq leq) {
  for (const auto& a : pts) {
    ASSERT_TRUE(leq(a, a)) << a.to_string();
    for (const auto& b : pts) {
      if (a != b && leq(a, b)) ASSERT_FALSE(leq(b, a)) << a.to_string() << " " << b.to_string();
      if (!leq(a, b)) continue;
      for (const auto& c : pts)
        if (leq(b, c)) ASSERT_TRUE(leq(a, c)) << a.to_string() << " " << b.to_string() << " " << c.to_string();
    }
  }
}

}  // namespace

TEST(OrderTag, RoundTrip) {
  for (auto tag : {OrderTag::Dominance, OrderTag::Excellent, OrderTag::AntipodalExcellent, OrderTag::StrongLinkage})
    EXPECT_EQ(parse_order_tag(to_string(tag)), tag);
  EXPECT_EQ(to_string(OrderTag::AntipodalExcellent), "antipodal-excellent");
  EXPECT_THROW(parse_order_tag("bruhat"), ConfigError);
  EXPECT_THROW(OrderKind::from_tag(OrderTag::StrongLinkage, std::nullopt), ConfigError);
}

TEST(Dominance, Examples) {
  auto a2 = build_root_system({'A', 2});
  EXPECT_TRUE(dominance_leq(a2, Weight{0, 0}, Weight{1, 1}));
  EXPECT_FALSE(dominance_leq(a2, Weight{0, 0}, Weight{1, 0}));
  EXPECT_TRUE(dominance_leq(a2, Weight{-1, 2}, Weight{1, 1}));
  EXPECT_FALSE(dominance_leq(a2, Weight{1, 1}, Weight{-1, 2}));
  EXPECT_FALSE(dominance_less(a2, Weight{1, 1}, Weight{1, 1}));
}

TEST(Dominance, PartialOrderAndTranslationInvariance) {
  auto rs = build_root_system({'B', 2});
  auto pts = oracle::box(2, 2);
  expect_partial_order(pts, [&](const Weight& a, const Weight& b) { return dominance_leq(rs, a, b); });
  for (const auto& a : pts)
    for (const auto& b : pts)
      ASSERT_EQ(dominance_leq(rs, a, b), dominance_leq(rs, a + rs.rho(), b + rs.rho()));
}

TEST(Excellent, A1Examples) {
  auto a1 = build_root_system({'A', 1});
  EXPECT_TRUE(excellent_leq(a1, Weight{-2}, Weight{2}));
  EXPECT_FALSE(excellent_leq(a1, Weight{2}, Weight{-2}));
  EXPECT_TRUE(antipodal_excellent_leq(a1, Weight{2}, Weight{-2}));
  EXPECT_FALSE(antipodal_excellent_leq(a1, Weight{-2}, Weight{2}));
  // Tops 2 < 4: the orbit of 4 lies above the orbit of 2 regardless of sign.
  EXPECT_TRUE(excellent_leq(a1, Weight{2}, Weight{-4}));
  EXPECT_FALSE(excellent_leq(a1, Weight{-4}, Weight{2}));
}

TEST(Excellent, PartialOrderOnRank2Boxes) {
  for (auto spec : {RootSystemSpec{'A', 2}, RootSystemSpec{'B', 2}, RootSystemSpec{'G', 2}}) {
    auto rs = build_root_system(spec);
    auto pts = oracle::box(2, 2);
    expect_partial_order(pts, [&](const Weight& a, const Weight& b) { return excellent_leq(rs, a, b); });
    expect_partial_order(pts, [&](const Weight& a, const Weight& b) { return antipodal_excellent_leq(rs, a, b); });
  }
}

TEST(Excellent, ImpliesDominanceOfTops) {
  auto rs = build_root_system({'A', 3});
  auto pts = oracle::box(3, 1);
  for (const auto& a : pts)
    for (const auto& b : pts)
      if (excellent_leq(rs, a, b)) ASSERT_TRUE(dominance_leq(rs, dominant_weight(rs, a), dominant_weight(rs, b)));
}

TEST(Excellent, LongestElementInterchangesWithAntipodal) {
  // -w0 is a diagram automorphism, so x <=° x' iff w0 x <= w0 x'.
  for (auto spec : {RootSystemSpec{'A', 2}, RootSystemSpec{'B', 2}, RootSystemSpec{'A', 3}}) {
    auto rs = build_root_system(spec);
    auto w0 = longest_element(rs);
    auto pts = oracle::box(rs.rank(), rs.rank() == 2 ? 2 : 1);
    for (const auto& a : pts)
      for (const auto& b : pts)
        ASSERT_EQ(antipodal_excellent_leq(rs, a, b), excellent_leq(rs, apply(rs, w0, a), apply(rs, w0, b)))
            << spec.name() << " " << a.to_string() << " " << b.to_string();
  }
}

TEST(Excellent, SameOrbitUsesBruhatOfMinimalElements) {
  auto rs = build_root_system({'B', 2});
  for (const auto& a : oracle::orbit(rs, Weight{1, 1}))
    for (const auto& b : oracle::orbit(rs, Weight{1, 1}))
      ASSERT_EQ(excellent_leq(rs, a, b), bruhat_leq(rs, minimal_orbit_element(rs, a), minimal_orbit_element(rs, b)));
}

TEST(Excellent, CrossOrbitReadingIsCoarser) {
  auto rs = build_root_system({'A', 2});
  auto pts = oracle::box(2, 2);
  std::size_t extra = 0;
  for (const auto& a : pts)
    for (const auto& b : pts) {
      const bool same = excellent_leq(rs, a, b);
      const bool cross = excellent_leq(rs, a, b, ExcellentReading::CrossOrbit);
      if (same) ASSERT_TRUE(cross);
      extra += cross && !same;
    }
  EXPECT_GT(extra, 0u);
}

TEST(StrongLinkage, A1ChainIsNumericOrder) {
  auto ctx = AffineContext(build_root_system({'A', 1}), 5);
  std::vector<Weight> orbit;
  for (std::int64_t y = -30; y <= 30; ++y)
    if (in_principal_orbit(ctx, Weight{y})) orbit.push_back(Weight{y});
  for (const auto& a : orbit)
    for (const auto& b : orbit) EXPECT_EQ(strong_linkage_leq(ctx, a, b), a[0] <= b[0]) << a[0] << " " << b[0];
  // Dominance holds but the weights lie in different orbits.
  EXPECT_FALSE(strong_linkage_leq(ctx, Weight{0}, Weight{2}));
  EXPECT_EQ(affine_reflection_dot(ctx, 0, 1, Weight{8}), (Weight{0}));
}

TEST(StrongLinkage, ImpliesDominanceAndSameOrbit) {
  auto ctx = AffineContext(build_root_system({'A', 2}), 5);
  const auto& rs = ctx.root_system();
  std::vector<Weight> pts;
  for (const auto& y : oracle::box(2, 8))
    if (in_principal_orbit(ctx, y)) pts.push_back(y);
  ASSERT_FALSE(pts.empty());
  auto kind = OrderKind::strong_linkage(ctx);
  EXPECT_EQ(kind.tag(), OrderTag::StrongLinkage);
  for (const auto& a : pts)
    for (const auto& b : pts)
      if (kind.leq(rs, a, b)) ASSERT_TRUE(dominance_leq(rs, a, b));
  expect_partial_order(pts, [&](const Weight& a, const Weight& b) { return kind.leq(rs, a, b); });
  // Non-orbit weights are linked to nothing but themselves.
  EXPECT_TRUE(strong_linkage_leq(ctx, Weight{1, 0}, Weight{1, 0}));
  EXPECT_FALSE(strong_linkage_leq(ctx, Weight{0, 0}, Weight{1, 1}));
}

TEST(StrongLinkage, BudgetRaisesResourceError) {
  auto ctx = AffineContext(build_root_system({'A', 2}), 5);
  EXPECT_THROW(strong_linkage_leq(ctx, Weight{-40, -40}, Weight{40, 40}, 3), ResourceError);
}

TEST(OrderKind, DispatchesToFreeFunctions) {
  auto rs = build_root_system({'G', 2});
  auto pts = oracle::box(2, 1);
  auto dom = OrderKind::dominance();
  auto exc = OrderKind::excellent();
  auto anti = OrderKind::antipodal_excellent();
  for (const auto& a : pts)
    for (const auto& b : pts) {
      ASSERT_EQ(dom.leq(rs, a, b), dominance_leq(rs, a, b));
      ASSERT_EQ(exc.leq(rs, a, b), excellent_leq(rs, a, b));
      ASSERT_EQ(anti.leq(rs, a, b), antipodal_excellent_leq(rs, a, b));
    }
}
