#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gentle/braid.hpp"

using namespace gentle;

namespace {

GroupWord word(const std::string& letters, std::vector<int> shifts = {}) { return {parse_braid_word(letters), shifts}; }

// T_S^{-1} applied to every object of a collection.
ExcCollection inverse_twisted(const ExcCollection& e, const ProjComplex& s) {
  std::vector<ProjComplex> objs;
  for (const auto& x : e.objects) objs.push_back(twist_inverse(s, x));
  return make_collection(e.mu, std::move(objs), "twisted", true);
}

}  // namespace

TEST(GroupWord, Parse) {
  EXPECT_EQ(parse_braid_word("s1 s2^-1 s3"), (std::vector<BraidLetter>{{1, false}, {2, true}, {3, false}}));
  EXPECT_EQ(parse_braid_word("s2^2"), (std::vector<BraidLetter>{{2, false}, {2, false}}));
  EXPECT_TRUE(parse_braid_word("").empty());
  EXPECT_TRUE(parse_braid_word("e").empty());
  EXPECT_THROW(parse_braid_word("t1"), std::invalid_argument);
  EXPECT_THROW(parse_braid_word("s"), std::invalid_argument);
  EXPECT_THROW(parse_braid_word("s1^x"), std::invalid_argument);
  EXPECT_EQ(parse_shift_vector("0,1,-2,0"), (std::vector<int>{0, 1, -2, 0}));
  EXPECT_THROW(parse_shift_vector("0,a"), std::invalid_argument);
  EXPECT_THROW(word("s4").validate(4), std::invalid_argument);
  EXPECT_THROW(word("s1", {0, 0}).validate(4), std::invalid_argument);
  EXPECT_EQ(to_string(word("s1 s2^-1", {0, 1, 0})), "s1 s2^-1 [0,1,0]");
}

TEST(GroupWord, ProductPermutesShifts) {
  const GroupWord a = word("s1", {1, 2, 3});
  const GroupWord b = word("s2", {10, 20, 30});
  const GroupWord ab = product(a, b);
  EXPECT_EQ(ab.letters, parse_braid_word("s1 s2"));
  EXPECT_EQ(ab.shifts, (std::vector<int>{11, 23, 32}));
}

TEST(Collection, StandardIsFullStrongExceptional) {
  for (int mu = 1; mu <= 6; ++mu) {
    const ExcCollection e = standard_collection(PathAlgebra(mu));
    EXPECT_TRUE(is_exceptional_collection(e).holds);
    EXPECT_TRUE(is_strong(e).holds);
    EXPECT_TRUE(is_full(e).holds);
    for (int r = 0; r < mu; ++r)
      for (int c = 0; c < mu; ++c) {
        // Position r holds P(mu - r).
        GradedDims expect;
        expect.add(0, static_cast<int>(parallel_count(mu - c, mu - r)));
        EXPECT_EQ(e.rhom_cache[r][c], expect);
      }
  }
  const ExcCollection one = standard_collection(PathAlgebra(1));
  EXPECT_EQ(rhom_table(one)[0][0], (GradedDims{{0, 1}}));
}

TEST(Collection, ShiftBreaksStrongness) {
  const ExcCollection e = standard_collection(PathAlgebra(4));
  const ExcCollection s = act(e, word("", {1, 0, 0, 0}));
  EXPECT_FALSE(is_strong(s).holds);
  EXPECT_TRUE(is_exceptional_collection(s).holds);
  EXPECT_EQ(s.rhom_cache, compute_rhom_table(s.objects));
}

TEST(Action, InverseLettersCancel) {
  for (int mu = 3; mu <= 5; ++mu) {
    const ExcCollection e = standard_collection(PathAlgebra(mu));
    for (int i = 1; i < mu; ++i) {
      EXPECT_TRUE(collections_iso(act(e, word("s" + std::to_string(i) + " s" + std::to_string(i) + "^-1")), e));
      EXPECT_TRUE(collections_iso(act(e, word("s" + std::to_string(i) + "^-1 s" + std::to_string(i))), e));
    }
  }
}

TEST(Action, SigmaIsInverseTwist) {
  for (int mu = 3; mu <= 5; ++mu) {
    const ExcCollection e = standard_collection(PathAlgebra(mu));
    for (int i = 1; i < mu; ++i)
      EXPECT_TRUE(collections_iso(act(e, word("s" + std::to_string(i))), inverse_twisted(e, spherical_s(mu, i))))
          << mu << " " << i;
  }
}

TEST(Action, BraidRelations) {
  for (int mu = 3; mu <= 5; ++mu) {
    const ExcCollection e = standard_collection(PathAlgebra(mu));
    for (int i = 1; i + 1 < mu; ++i) {
      const std::string a = "s" + std::to_string(i), b = "s" + std::to_string(i + 1);
      EXPECT_TRUE(collections_iso(act(e, word(a + " " + b + " " + a)), act(e, word(b + " " + a + " " + b))));
    }
    for (int i = 1; i < mu; ++i)
      for (int j = i + 2; j < mu; ++j) {
        const std::string a = "s" + std::to_string(i), b = "s" + std::to_string(j);
        EXPECT_TRUE(collections_iso(act(e, word(a + " " + b)), act(e, word(b + " " + a))));
      }
  }
}

TEST(Action, SemidirectProductLaw) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 12; ++trial) {
    const int mu = 4 + trial % 2;
    const ExcCollection e = standard_collection(PathAlgebra(mu));
    auto random_word = [&] {
      GroupWord w;
      const int len = static_cast<int>(rng() % 3);
      for (int k = 0; k < len; ++k) w.letters.push_back({1 + static_cast<int>(rng() % static_cast<unsigned>(mu - 1)), rng() % 2 == 0});
      for (int k = 0; k < mu; ++k) w.shifts.push_back(static_cast<int>(rng() % 3) - 1);
      return w;
    };
    const GroupWord w1 = random_word(), w2 = random_word();
    const ExcCollection lhs = act(act(e, w1), w2);
    const ExcCollection rhs = act(e, product(w1, w2));
    EXPECT_TRUE(collections_iso(lhs, rhs)) << to_string(w1) << " | " << to_string(w2);
    EXPECT_EQ(lhs.rhom_cache, rhs.rhom_cache);
  }
}

TEST(Action, PureBraidsPreserveStrongness) {
  const ExcCollection e = standard_collection(PathAlgebra(4));
  for (const char* w : {"s1 s1", "s2^-1 s2^-1", "s1 s2 s2 s1^-1", "s3 s3 s1^-1 s1^-1"}) {
    const ExcCollection x = act(e, word(w));
    EXPECT_TRUE(is_strong(x).holds) << w;
    EXPECT_TRUE(is_full(x).holds);
  }
}

TEST(Twisted, KZeroIsStandard) {
  for (int mu = 4; mu <= 6; ++mu)
    EXPECT_TRUE(collections_iso(twisted_collection(PathAlgebra(mu), 0), standard_collection(PathAlgebra(mu))));
  EXPECT_THROW(twisted_collection(PathAlgebra(3), 1), std::invalid_argument);
}

TEST(Twisted, RhomRows) {
  const ExcCollection e1 = twisted_collection(PathAlgebra(5), 1);
  for (int c = 1; c <= 4; ++c) EXPECT_EQ(e1.rhom_cache[0][static_cast<std::size_t>(c)], (GradedDims{{0, 1}, {2, 1}}));
  const ExcCollection em2 = twisted_collection(PathAlgebra(5), -2);
  for (int c = 1; c <= 4; ++c) EXPECT_EQ(em2.rhom_cache[0][static_cast<std::size_t>(c)], (GradedDims{{-4, 1}, {0, 1}}));
  EXPECT_TRUE(is_exceptional_collection(e1).holds);
  EXPECT_TRUE(is_full(e1).holds);
  EXPECT_FALSE(is_strong(e1).holds);
}

TEST(Twisted, ShiftObstruction) {
  const ExcCollection ep = standard_collection(PathAlgebra(5));
  const ShiftDecision d0 = shift_strongness_obstruction(ep);
  ASSERT_TRUE(d0.achievable);
  EXPECT_EQ(d0.shifts, (std::vector<int>(5, 0)));

  const std::vector<int> n = {2, -1, 0, 3, 1};
  const ExcCollection moved = act(ep, word("", n));
  const ShiftDecision d1 = shift_strongness_obstruction(moved);
  ASSERT_TRUE(d1.achievable);
  for (std::size_t k = 1; k < n.size(); ++k) EXPECT_EQ(d1.shifts[k] - d1.shifts[0], -(n[k] - n[0]));
  EXPECT_TRUE(is_strong(act(moved, word("", d1.shifts))).holds);

  const ShiftDecision d2 = shift_strongness_obstruction(twisted_collection(PathAlgebra(5), 1));
  EXPECT_FALSE(d2.achievable);
  ASSERT_TRUE(d2.multi_degree);
  EXPECT_EQ(d2.multi_degree->first, 1);
}

TEST(Twisted, InconsistentCycle) {
  // Hand-made cache: 1->2 in degree 0, 2->3 in degree 0, 1->3 in degree 1.
  ExcCollection e;
  e.mu = 3;
  e.objects.resize(3, ProjComplex(3));
  e.rhom_cache.assign(3, std::vector<GradedDims>(3));
  e.rhom_cache[0][1] = {{0, 1}};
  e.rhom_cache[1][2] = {{0, 1}};
  e.rhom_cache[0][2] = {{1, 1}};
  const ShiftDecision d = shift_strongness_obstruction(e);
  EXPECT_FALSE(d.achievable);
  std::vector<int> cyc = d.cycle;
  std::sort(cyc.begin(), cyc.end());
  EXPECT_EQ(cyc, (std::vector<int>{1, 2, 3}));
}
