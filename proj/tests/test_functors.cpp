#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "gentle/functors.hpp"

using namespace gentle;

namespace {

ProjComplex P(int mu, int i, int degree = 0) { return ProjComplex::indecomposable(mu, i, degree); }

ProjComplex s_plus() { return from_module(fixture_s_plus(PathAlgebra(4))); }
ProjComplex s_minus() { return from_module(fixture_s_minus(PathAlgebra(4))); }

}  // namespace

TEST(Nakayama, ProjectivesGoToInjectives) {
  for (int mu = 4; mu <= 6; ++mu) {
    const PathAlgebra a(mu);
    for (int i = 1; i <= mu; ++i) {
      const RepComplex n = nakayama(P(mu, i));
      ASSERT_EQ(n.terms.size(), 1u);
      EXPECT_EQ(n.lo, 0);
      EXPECT_TRUE(is_isomorphic(n.terms[0], injective(a, i)));
    }
  }
  EXPECT_TRUE(nakayama(ProjComplex(4)).terms.empty());
}

TEST(Nakayama, IsAComplexAndFunctorial) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const ProjComplex x = corpus::random_object(rng, 4);
    EXPECT_TRUE(is_complex(nakayama(x)));
  }
  // nu(q) nu(q') = nu(q q') on the generators a2, a3.
  PathMatrix a2(1, 1), a3(1, 1), a23(1, 1);
  a2(0, 0).alpha = 1;
  a3(0, 0).alpha = 1;
  a23(0, 0).alpha = 1;
  for (int v = 1; v <= 4; ++v) {
    const Matrix lhs = nakayama_at(a2, {3}, {2}, v) * nakayama_at(a3, {4}, {3}, v);
    EXPECT_EQ(lhs, nakayama_at(a23, {4}, {2}, v));
  }
}

TEST(Nakayama, OfS1IsShiftedCokernel) {
  const PathAlgebra a(4);
  const auto h = cohomology_modules(nakayama(spherical_s(4, 1)));
  ASSERT_EQ(h.size(), 1u);
  ASSERT_EQ(h.begin()->first, -1);
  RepMap f1 = zero_map(projective(a, 4), projective(a, 3));
  f1.at[3](0, 0) = 1;
  f1.at[3](1, 0) = 1;
  EXPECT_TRUE(is_isomorphic(h.at(-1), cokernel(f1).module));
}

TEST(Spherical, SiAreOneSpherical) {
  for (int mu = 4; mu <= 6; ++mu)
    for (int i = 1; i < mu; ++i) {
      const auto cert = is_spherical(spherical_s(mu, i), 1);
      EXPECT_TRUE(cert.certified()) << mu << " " << i << " " << cert.reason;
      EXPECT_EQ(cert.endo_dims, (GradedDims{{0, 1}, {1, 1}}));
      EXPECT_FALSE(is_spherical(spherical_s(mu, i), 2).certified());
    }
}

TEST(Spherical, SPlusMinusAreThreeSpherical) {
  EXPECT_TRUE(is_spherical(s_plus(), 3).certified());
  EXPECT_TRUE(is_spherical(s_minus(), 3).certified());
}

TEST(Spherical, ProjectiveIsNot) {
  for (int m = -2; m <= 4; ++m) {
    const auto cert = is_spherical(P(4, 1), m);
    EXPECT_EQ(cert.status, SphericalStatus::not_spherical);
    EXPECT_EQ(cert.endo_dims, (GradedDims{{0, 1}}));
  }
  EXPECT_THROW(is_spherical(ProjComplex(4), 1), std::invalid_argument);
}

TEST(Twist, OnProjectives) {
  for (int mu = 3; mu <= 6; ++mu) {
    const ProjComplex s1 = spherical_s(mu, 1);
    EXPECT_TRUE(is_derived_iso(twist(s1, P(mu, mu)), P(mu, mu - 1)));
    for (int k = 1; k <= mu - 2; ++k) EXPECT_TRUE(is_derived_iso(twist(s1, P(mu, k)), P(mu, k)));
    EXPECT_TRUE(is_derived_iso(twist_inverse(s1, P(mu, mu - 1)), P(mu, mu)));
  }
}

TEST(Twist, OfSphericalObjectOnItself) {
  // T_S(S) = S[1 - m].
  for (int mu = 3; mu <= 5; ++mu)
    for (int i = 1; i < mu; ++i) {
      const ProjComplex s = spherical_s(mu, i);
      EXPECT_TRUE(is_derived_iso(twist(s, s), s));
    }
  EXPECT_TRUE(is_derived_iso(twist(s_plus(), s_plus()), shift(s_plus(), -2)));
}

TEST(Twist, InverseUndoesTwist) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const ProjComplex x = corpus::random_object(rng, 4);
    const ProjComplex s = (trial % 2 == 0) ? spherical_s(4, 1 + trial % 3) : s_plus();
    EXPECT_TRUE(is_derived_iso(twist_inverse(s, twist(s, x)), x));
    EXPECT_TRUE(is_derived_iso(twist(s, twist_inverse(s, x)), x));
  }
}

TEST(Twist, OutputsAreComplexes) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const ProjComplex x = corpus::random_object(rng, 4);
    EXPECT_TRUE(is_complex(twist(s_minus(), x)));
    EXPECT_TRUE(is_minimal(twist(s_minus(), x)));
    EXPECT_TRUE(is_chain_map(evaluation_map(s_plus(), x)));
    EXPECT_TRUE(is_chain_map(coevaluation_map(x, s_plus())));
  }
}

TEST(Twist, InverseTwistOfProjectiveInLargerAlgebra) {
  // T^{-1} of P(i) seen from P(5): {0:1, -2:1}.
  const ProjComplex sp = s_plus().embedded(5);
  for (int i = 1; i <= 4; ++i) {
    EXPECT_EQ(rhom_dims(P(5, 5), twist_inverse(sp, P(5, i))), (GradedDims{{-2, 1}, {0, 1}}));
    EXPECT_EQ(rhom_dims(P(5, 5), twist(sp, P(5, i))), (GradedDims{{0, 1}, {2, 1}}));
  }
}

TEST(Mutation, ZeroHomGivesShift) {
  // RHom(P(1), P(3)) = 0, so the triangle reads L -> 0 -> F -> L[1].
  const ProjComplex l = left_mutation(P(4, 1), P(4, 3));
  EXPECT_TRUE(is_derived_iso(l, P(4, 3, 1)));
  EXPECT_TRUE(is_derived_iso(right_mutation(P(4, 1), P(4, 3)), P(4, 1, -1)));
  EXPECT_FALSE(is_derived_iso(left_mutation(P(4, 3), P(4, 1)), P(4, 1, 1)));
}

TEST(Mutation, MatchesInverseTwist) {
  for (int mu = 3; mu <= 6; ++mu)
    for (int i = 1; i < mu; ++i) {
      const ProjComplex e = P(mu, mu - i + 1);
      const ProjComplex f = P(mu, mu - i);
      const ProjComplex s = spherical_s(mu, i);
      EXPECT_TRUE(is_derived_iso(left_mutation(e, f), twist_inverse(s, e)));
      EXPECT_TRUE(is_derived_iso(e, twist_inverse(s, f)));
      EXPECT_TRUE(is_derived_iso(right_mutation(e, f), twist(s, f)));
    }
}

TEST(Mutation, LeftThenRightRecovers) {
  for (int mu = 3; mu <= 5; ++mu)
    for (int i = 1; i < mu; ++i) {
      const ProjComplex e = P(mu, mu - i + 1);
      const ProjComplex f = P(mu, mu - i);
      EXPECT_TRUE(is_derived_iso(right_mutation(left_mutation(e, f), e), f));
    }
}
