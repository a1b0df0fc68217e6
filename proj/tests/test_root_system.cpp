#include <gtest/gtest.h>

#include <functional>
#include <limits>
#include <map>
#include <set>

#include "oracles.hpp"
#include "weyltrunc/errors.hpp"
#include "weyltrunc/root_system.hpp"
#include "weyltrunc/weyl.hpp"

using namespace weyltrunc;

namespace {

struct Expected {
  std::int64_t h;
  std::size_t positive;
  std::uint64_t order;
};

// Standard tables (Bourbaki, Planches).
const std::map<std::string, Expected> kTable = {
    {"A1", {2, 1, 2}},    {"A2", {3, 3, 6}},     {"A3", {4, 6, 24}},   {"A4", {5, 10, 120}},
    {"B2", {4, 4, 8}},    {"B3", {6, 9, 48}},    {"B4", {8, 16, 384}}, {"C2", {4, 4, 8}},
    {"C3", {6, 9, 48}},   {"C4", {8, 16, 384}},  {"D4", {6, 12, 192}}, {"F4", {12, 24, 1152}},
    {"G2", {6, 6, 12}},   {"E6", {12, 36, 51840}},
};

RootSystem make(char t, int n, int cap = kDefaultRankCap) { return build_root_system({t, n}, {cap}); }

}  // namespace

TEST(RootSystem, A1IsFullyForced) {
  auto rs = make('A', 1);
  EXPECT_EQ(rs.cartan(0, 0), 2);
  ASSERT_EQ(rs.positive_roots().size(), 1u);
  EXPECT_EQ(rs.positive_roots()[0], (Weight{2}));
  EXPECT_EQ(rs.rho(), (Weight{1}));
  EXPECT_EQ(rs.alpha0(), (Weight{2}));
  EXPECT_EQ(rs.coxeter_number(), 2);
  EXPECT_EQ(rs.weyl_order(), 2u);
}

TEST(RootSystem, CartanMatricesMatchBourbakiTables) {
  auto cartan = [](const RootSystem& rs) {
    std::vector<std::vector<std::int64_t>> m(rs.rank(), std::vector<std::int64_t>(rs.rank()));
    for (std::size_t i = 0; i < rs.rank(); ++i)
      for (std::size_t j = 0; j < rs.rank(); ++j) m[i][j] = rs.cartan(i, j);
    return m;
  };
  using M = std::vector<std::vector<std::int64_t>>;
  EXPECT_EQ(cartan(make('A', 2)), (M{{2, -1}, {-1, 2}}));
  // Row i holds <alpha_j, alpha_i^v>; alpha_2 short in B2, long in C2.
  EXPECT_EQ(cartan(make('B', 2)), (M{{2, -1}, {-2, 2}}));
  EXPECT_EQ(cartan(make('C', 2)), (M{{2, -2}, {-1, 2}}));
  EXPECT_EQ(cartan(make('G', 2)), (M{{2, -3}, {-1, 2}}));
  EXPECT_EQ(cartan(make('C', 3)), (M{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
  EXPECT_EQ(cartan(make('F', 4)), (M{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}));
  EXPECT_EQ(cartan(make('D', 4)), (M{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));
}

TEST(RootSystem, FixtureInvariants) {
  for (const auto& [name, want] : kTable) {
    auto rs = make(name[0], name[1] - '0', kHardRankCap);
    SCOPED_TRACE(name);
    EXPECT_EQ(rs.coxeter_number(), want.h);
    EXPECT_EQ(rs.positive_roots().size(), want.positive);
    EXPECT_EQ(static_cast<std::int64_t>(rs.positive_roots().size()), rs.coxeter_number() * static_cast<std::int64_t>(rs.rank()) / 2);
    EXPECT_EQ(rs.weyl_order(), want.order);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      auto k = find_positive_root(rs, rs.simple_root(i));
      ASSERT_TRUE(k.has_value());
      EXPECT_EQ(rs.pairing(rs.rho(), *k), 1);
    }
    EXPECT_EQ(rs.pairing_alpha0(rs.rho()), rs.coxeter_number() - 1);
    // Diagonal 2, off-diagonal non-positive.
    for (std::size_t i = 0; i < rs.rank(); ++i)
      for (std::size_t j = 0; j < rs.rank(); ++j)
        if (i == j) EXPECT_EQ(rs.cartan(i, j), 2);
        else EXPECT_LE(rs.cartan(i, j), 0);
  }
}

TEST(RootSystem, Alpha0IsDominantShortAndMaximal) {
  for (const auto& [name, want] : kTable) {
    auto rs = make(name[0], name[1] - '0', kHardRankCap);
    SCOPED_TRACE(name);
    EXPECT_TRUE(rs.alpha0().is_dominant());
    EXPECT_TRUE(rs.is_short(rs.alpha0_index()));
    // alpha0 - alpha is a non-negative combination of simple roots for every short positive alpha.
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      if (!rs.is_short(k)) continue;
      auto c = rs.solve_root_coefficients(rs.alpha0() - rs.positive_roots()[k]);
      ASSERT_TRUE(c.has_value());
      for (auto v : *c) EXPECT_GE(v, 0);
    }
  }
}

TEST(RootSystem, PositiveRootsCloseUnderNegationToFullRootSet) {
  // Every s_i permutes R = R+ ∪ -R+.
  for (auto spec : {RootSystemSpec{'B', 3}, RootSystemSpec{'G', 2}, RootSystemSpec{'F', 4}}) {
    auto rs = build_root_system(spec);
    std::set<Weight> roots;
    for (const auto& r : rs.positive_roots()) {
      roots.insert(r);
      roots.insert(-r);
    }
    for (const auto& r : roots)
      for (std::size_t i = 0; i < rs.rank(); ++i) EXPECT_TRUE(roots.count(rs.simple_reflection(i, r)));
  }
}

TEST(RootSystem, InvalidSpecsAreRejected) {
  EXPECT_THROW(make('H', 3), ConfigError);
  EXPECT_THROW(make('G', 3), ConfigError);
  EXPECT_THROW(make('F', 3), ConfigError);
  EXPECT_THROW(make('D', 3), ConfigError);
  EXPECT_THROW(make('E', 5, 6), ConfigError);
  EXPECT_THROW(make('A', 0), ConfigError);
  EXPECT_THROW(make('A', 5), ConfigError);        // default cap 4
  EXPECT_THROW(make('A', 7, 7), ConfigError);     // hard cap 6
  try {
    make('H', 3);
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("(H, 3)"), std::string::npos);
  }
  auto rs = make('A', 5, 6);
  EXPECT_EQ(rs.warnings().size(), 1u);
}

TEST(Pairing, Examples) {
  auto a1 = make('A', 1);
  EXPECT_EQ(pairing(a1, Weight{1}, 0), 1);
  for (std::int64_t k = -3; k <= 3; ++k) EXPECT_EQ(pairing(a1, k * a1.positive_roots()[0], 0), 2 * k);
  auto a2 = make('A', 2);
  EXPECT_EQ(pairing(a2, a2.rho(), a2.alpha0_index()), 2);
  EXPECT_THROW(pairing(a2, a2.rho(), 3), std::out_of_range);
  // Simple roots: pairing is the coordinate.
  auto b3 = make('B', 3);
  Weight x{4, -7, 2};
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(b3.pairing(x, *find_positive_root(b3, b3.simple_root(i))), x[i]);
}

TEST(Pairing, IsBilinearOnABox) {
  auto rs = make('G', 2);
  auto pts = oracle::box(2, 3);
  for (const auto& x : pts)
    for (const auto& y : pts)
      for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
        ASSERT_EQ(rs.pairing(x + y, k), rs.pairing(x, k) + rs.pairing(y, k));
}

TEST(RootLattice, Examples) {
  auto a1 = make('A', 1);
  EXPECT_TRUE(in_root_lattice(a1, Weight{2}));
  EXPECT_FALSE(in_root_lattice(a1, Weight{1}));
  auto a2 = make('A', 2);
  EXPECT_TRUE(in_root_lattice(a2, Weight{1, 1}));
  EXPECT_FALSE(in_root_lattice(a2, Weight{1, 0}));
}

TEST(RootLattice, IndexMatchesCartanDeterminant) {
  // |X / Y| = det(C): count lattice points in a fundamental box.
  for (auto spec : {RootSystemSpec{'A', 2}, RootSystemSpec{'B', 3}, RootSystemSpec{'D', 4}, RootSystemSpec{'G', 2}}) {
    auto rs = build_root_system(spec);
    const auto det = rs.cartan_determinant();
    std::int64_t hits = 0, total = 0;
    // All residues mod det in each coordinate: exactly det^(rank-1) lie in Y.
    Weight x(rs.rank());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == rs.rank()) {
        ++total;
        hits += in_root_lattice(rs, x);
        return;
      }
      for (std::int64_t v = 0; v < det; ++v) {
        x[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    EXPECT_EQ(hits * det, total) << spec.name();
  }
}

TEST(RootLattice, ClosedUnderSumsAndWeylAction) {
  auto rs = make('B', 2);
  std::vector<Weight> in_y;
  for (const auto& x : oracle::box(2, 4))
    if (in_root_lattice(rs, x)) in_y.push_back(x);
  for (const auto& x : in_y) {
    for (const auto& y : in_y) ASSERT_TRUE(in_root_lattice(rs, x + y));
    for (const auto& w : enumerate_group(rs)) ASSERT_TRUE(in_root_lattice(rs, apply(rs, w, x)));
  }
  for (const auto& x : oracle::box(2, 4))
    for (const auto& w : enumerate_group(rs)) ASSERT_EQ(in_root_lattice(rs, x), in_root_lattice(rs, apply(rs, w, x)));
}

TEST(DominantRep, Examples) {
  auto a1 = make('A', 1);
  auto r = dominant_rep(a1, Weight{-3});
  EXPECT_EQ(r.weight, (Weight{3}));
  EXPECT_EQ(r.w, simple_reflection_element(a1, 0));

  auto a2 = make('A', 2);
  auto fixed = dominant_rep(a2, Weight{2, 5});
  EXPECT_EQ(fixed.weight, (Weight{2, 5}));
  EXPECT_TRUE(fixed.w.is_identity());

  // Orbit brute force: the unique dominant point of the orbit of (-1, 2).
  std::vector<Weight> dominant;
  for (const auto& y : oracle::orbit(a2, Weight{-1, 2}))
    if (y.is_dominant()) dominant.push_back(y);
  ASSERT_EQ(dominant.size(), 1u);
  EXPECT_EQ(dominant[0], (Weight{1, 1}));
  EXPECT_EQ(dominant_rep(a2, Weight{-1, 2}).weight, (Weight{1, 1}));
}

TEST(DominantRep, IdempotentAndOrbitInvariant) {
  for (auto spec : {RootSystemSpec{'A', 2}, RootSystemSpec{'B', 2}, RootSystemSpec{'G', 2}, RootSystemSpec{'A', 3}}) {
    auto rs = build_root_system(spec);
    for (const auto& x : oracle::box(rs.rank(), 2)) {
      auto top = dominant_rep(rs, x);
      ASSERT_TRUE(top.weight.is_dominant());
      ASSERT_EQ(apply(rs, top.w, top.weight), x);
      ASSERT_EQ(dominant_rep(rs, top.weight).weight, top.weight);
      auto bottom = dominant_rep(rs, x, OrbitRep::Antidominant);
      ASSERT_TRUE(bottom.weight.is_antidominant());
      ASSERT_EQ(apply(rs, bottom.w, bottom.weight), x);
      for (const auto& w : enumerate_group(rs)) {
        ASSERT_EQ(dominant_rep(rs, apply(rs, w, x)).weight, top.weight);
        ASSERT_EQ(dominant_rep(rs, apply(rs, w, x), OrbitRep::Antidominant).weight, bottom.weight);
      }
    }
  }
}

TEST(Weight, CheckedArithmeticThrowsOnOverflow) {
  Weight big{std::numeric_limits<std::int64_t>::max()};
  EXPECT_THROW(big + Weight{1}, OverflowError);
  EXPECT_THROW(big * 2, OverflowError);
  EXPECT_THROW(-Weight{std::numeric_limits<std::int64_t>::min()}, OverflowError);
  EXPECT_THROW((Weight{1} + Weight{1, 2}), PreconditionError);
}
