#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "gentle/algebra.hpp"
#include "oracles.hpp"

using namespace gentle;

using oracle::brute_force_paths;

TEST(Algebra, DimensionMatchesEnumeration) {
  for (int mu = 1; mu <= 10; ++mu) {
    const PathAlgebra a(mu);
    const auto paths = brute_force_paths(mu);
    EXPECT_EQ(a.dimension(), paths.size()) << "mu=" << mu;
    EXPECT_EQ(a.dimension(), static_cast<std::size_t>(mu * mu));
    std::set<std::string> names;
    for (const auto& p : a.basis()) names.insert(to_string(p));
    EXPECT_EQ(names, paths);
  }
}

TEST(Algebra, RejectsNonPositiveMu) {
  EXPECT_THROW(build_algebra(0), std::invalid_argument);
  EXPECT_THROW(build_algebra(-3), std::invalid_argument);
}

TEST(Algebra, PathBasisExamples) {
  const PathAlgebra a(4);
  const auto p13 = a.path_basis(1, 3);
  ASSERT_EQ(p13.size(), 2u);
  EXPECT_EQ(to_string(p13[0]), "a1*a2");
  EXPECT_EQ(to_string(p13[1]), "b1*b2");
  const auto p14 = a.path_basis(1, 4);
  ASSERT_EQ(p14.size(), 2u);
  EXPECT_EQ(to_string(p14[0]), "a1*a2*a3");
  EXPECT_EQ(to_string(p14[1]), "b1*b2*b3");
  EXPECT_TRUE(a.path_basis(3, 1).empty());
  ASSERT_EQ(a.path_basis(2, 2).size(), 1u);
  EXPECT_EQ(to_string(a.path_basis(2, 2)[0]), "e2");
  EXPECT_THROW(a.path_basis(0, 2), std::out_of_range);
  EXPECT_THROW(a.path_basis(2, 5), std::out_of_range);
}

TEST(Algebra, PathBasisSizes) {
  for (int mu = 1; mu <= 6; ++mu) {
    const PathAlgebra a(mu);
    for (int j = 1; j <= mu; ++j)
      for (int i = 1; i <= mu; ++i) {
        const std::size_t expect = i == j ? 1 : (i > j ? 2 : 0);
        EXPECT_EQ(a.path_basis(j, i).size(), expect);
      }
  }
}

TEST(Algebra, BasisOrder) {
  const PathAlgebra a(3);
  std::vector<std::string> names;
  for (const auto& p : a.basis()) names.push_back(to_string(p));
  const std::vector<std::string> expect = {"e1", "a1", "b1", "a1*a2", "b1*b2", "e2", "a2", "b2", "e3"};
  EXPECT_EQ(names, expect);
}

TEST(Algebra, Multiply) {
  const PathAlgebra a(4);
  const auto ab = a.multiply(parse_path("a1"), parse_path("a2"));
  ASSERT_TRUE(ab);
  EXPECT_EQ(to_string(*ab), "a1*a2");
  EXPECT_FALSE(a.multiply(parse_path("a1"), parse_path("b2")));
  EXPECT_FALSE(a.multiply(parse_path("b1"), parse_path("a2")));
  EXPECT_FALSE(a.multiply(parse_path("a1"), parse_path("a3")));
  const auto ea = a.multiply(parse_path("e2"), parse_path("a2"));
  ASSERT_TRUE(ea);
  EXPECT_EQ(to_string(*ea), "a2");
  EXPECT_THROW(a.multiply(parse_path("a4"), parse_path("e4")), std::invalid_argument);
}

TEST(Algebra, MultiplicationAssociative) {
  for (int mu = 1; mu <= 5; ++mu) {
    const PathAlgebra a(mu);
    for (const auto& p : a.basis())
      for (const auto& q : a.basis())
        for (const auto& r : a.basis()) {
          const auto pq = a.multiply(p, q);
          const auto qr = a.multiply(q, r);
          const auto left = pq ? a.multiply(*pq, r) : std::nullopt;
          const auto right = qr ? a.multiply(p, *qr) : std::nullopt;
          ASSERT_EQ(left, right);
          if (left) {
            EXPECT_EQ(left->source, p.source);
            EXPECT_EQ(left->target, r.target);
          }
        }
  }
}

TEST(Algebra, ParsePath) {
  EXPECT_EQ(parse_path("e3"), trivial_path(3));
  EXPECT_EQ(parse_path("b2*b3"), (Path{2, 4, PathKind::beta}));
  EXPECT_THROW(parse_path("a1*b2"), std::invalid_argument);
  EXPECT_THROW(parse_path("a1*a3"), std::invalid_argument);
  EXPECT_THROW(parse_path("c1"), std::invalid_argument);
  EXPECT_THROW(parse_path(""), std::invalid_argument);
}

TEST(Algebra, PathComboRoundTrip) {
  const auto c = parse_path_combo("a1*a2 - b1*b2");
  EXPECT_EQ(c.from, 1);
  EXPECT_EQ(c.to, 3);
  EXPECT_EQ(c.combo.alpha, 1);
  EXPECT_EQ(c.combo.beta, -1);
  EXPECT_EQ(to_string(c.combo, 1, 3), "a1*a2 - b1*b2");
  const auto d = parse_path_combo("2/3*a1");
  EXPECT_EQ(to_string(d.combo, 1, 2), "2/3*a1");
  EXPECT_EQ(to_string(PathCombo{}, 1, 2), "0");
  EXPECT_THROW(parse_path_combo("a1 + a2"), std::invalid_argument);
}

TEST(Algebra, ComposeMatchesMultiplication) {
  const PathAlgebra a(5);
  for (const auto& p : a.basis())
    for (const auto& q : a.basis()) {
      if (p.target != q.source) continue;
      const PathCombo c = compose(PathCombo::of(p), PathCombo::of(q));
      const auto prod = a.multiply(p, q);
      if (!prod) {
        EXPECT_TRUE(c.is_zero());
      } else {
        EXPECT_EQ(c, PathCombo::of(*prod));
      }
    }
}
