#include <gtest/gtest.h>

#include "gentle/dsl.hpp"
#include "gentle/json_io.hpp"

using namespace gentle;

namespace {

ProjComplex P(int mu, int i, int degree = 0) { return ProjComplex::indecomposable(mu, i, degree); }

}  // namespace

TEST(Dsl, ProjectiveAtoms) {
  EXPECT_EQ(parse_object("P(3)", 4), P(4, 3));
  EXPECT_EQ(parse_object("P3", 4), P(4, 3));
  EXPECT_EQ(parse_object("  P( 2 ) ", 5), P(5, 2));
  EXPECT_EQ(parse_module("P(1)", 4).dims, (std::vector<std::size_t>{1, 2, 2, 2}));
}

TEST(Dsl, ModuleAtomsKeepTheirModule) {
  const PathAlgebra a(4);
  EXPECT_EQ(parse_module("I(2)", 4), injective(a, 2));
  EXPECT_EQ(parse_module("Simp(3)", 4), simple(a, 3));
  EXPECT_EQ(parse_module("S+", 4), fixture_s_plus(a));
  EXPECT_EQ(parse_module("S-", 4), fixture_s_minus(a));
  const Rep sum = parse_module("S+ (+) S-", 4);
  EXPECT_EQ(sum, direct_sum(fixture_s_plus(a), fixture_s_minus(a)).sum);
}

TEST(Dsl, ModulesResolve) {
  const ProjComplex r = parse_object("S+", 4);
  EXPECT_EQ(r.lo(), -3);
  EXPECT_EQ(r.term(-3), std::vector<int>{4});
  EXPECT_EQ(r.term(0), std::vector<int>{1});
  EXPECT_EQ(parse_object("res(S+)", 4), r);
}

TEST(Dsl, SignObjectsInLargerAlgebras) {
  const ProjComplex r = parse_object("S+", 6);
  EXPECT_EQ(r.mu(), 6);
  EXPECT_EQ(r, from_module(fixture_s_plus(PathAlgebra(4))).embedded(6));
  EXPECT_THROW(parse_module("S+", 6), ParseError);
  EXPECT_THROW(parse_object("S-", 3), ParseError);
}

TEST(Dsl, Spheres) {
  EXPECT_EQ(parse_object("Sph(2)", 5), spherical_s(5, 2));
  EXPECT_EQ(parse_object("S1", 5), spherical_s(5, 1));
  EXPECT_THROW(parse_object("S5", 5), ParseError);
}

TEST(Dsl, ShiftAndSum) {
  EXPECT_EQ(parse_object("shift(P(2), 3)", 4), P(4, 2, -3));
  EXPECT_EQ(parse_object("shift(P2, -1)", 4), P(4, 2, 1));
  EXPECT_EQ(parse_object("P1 (+) shift(P2, 1)", 4), direct_sum(P(4, 1), P(4, 2, -1)));
  EXPECT_EQ(parse_object("(P1 (+) P2)", 4), direct_sum(P(4, 1), P(4, 2)));
}

TEST(Dsl, ConeOfPathSum) {
  const ProjComplex c = parse_object("cone(P4 -(a3+b3)-> P3)", 4);
  EXPECT_EQ(c, spherical_s(4, 1));
  const ProjComplex d = parse_object("cone(P(4) -(a2*a3 - 2*b2*b3)-> P(2))", 4);
  EXPECT_EQ(d.term(-1), std::vector<int>{4});
  EXPECT_EQ(d.diff(-1)(0, 0), (PathCombo{0, 1, -2}));
  EXPECT_THROW(parse_object("cone(P4 -(a2)-> P3)", 4), ParseError);
  EXPECT_THROW(parse_object("cone(P4 (+) P4 -(a3)-> P3)", 4), ParseError);
  EXPECT_THROW(parse_object("cone(P4 -(a3+b3 P3)", 4), ParseError);
}

TEST(Dsl, Functors) {
  EXPECT_EQ(parse_object("twist(S+, 0, P(1))", 4), P(4, 1));
  EXPECT_EQ(parse_object("twist(S+, 1, P(1))", 4), twist(parse_object("S+", 4), P(4, 1)));
  EXPECT_EQ(parse_object("twist(S+, -2, P(1))", 4), twist_power(parse_object("S+", 4), -2, P(4, 1)));
  EXPECT_EQ(parse_object("Lmut(P3, P2)", 4), left_mutation(P(4, 3), P(4, 2)));
  EXPECT_EQ(parse_object("Rmut(P3, P2)", 4), right_mutation(P(4, 3), P(4, 2)));
}

TEST(Dsl, Collections) {
  const auto ep = parse_collection("EP", 5);
  ASSERT_EQ(ep.size(), 5u);
  EXPECT_EQ(ep[0], P(5, 5));
  EXPECT_EQ(ep[4], P(5, 1));
  const auto t = parse_collection("Eprime(1)", 5);
  EXPECT_EQ(t, twisted_collection(PathAlgebra(5), 1).objects);
  const auto tuple = parse_collection("(P2, shift(P1, 1))", 3);
  ASSERT_EQ(tuple.size(), 2u);
  EXPECT_EQ(tuple[1], P(3, 1, -1));
  EXPECT_THROW(parse_object("EP", 4), ParseError);
  EXPECT_THROW(parse_collection("P1", 4), ParseError);
  EXPECT_THROW(parse_object("EP (+) P1", 4), ParseError);
}

TEST(Dsl, Errors) {
  for (const char* bad : {"", "P(", "P(0)", "P(9)", "Q(1)", "P1 P2", "shift(P1)", "shift(P1, x)", "twist(S+, 1)",
                          "P1 (+)", "Simp(", "cone(P4)", "Eprime(1", "s1"}) {
    EXPECT_THROW(parse_value(bad, 4), ParseError) << bad;
  }
  try {
    parse_object("P(2) junk", 4);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 5u);
  }
}

TEST(Json, GradedDimsRoundTrip) {
  const GradedDims g{{-4, 1}, {0, 2}, {3, 1}};
  const Json j = to_json(g);
  EXPECT_EQ(j.dump(), R"({"-4":1,"0":2,"3":1})");
  EXPECT_EQ(graded_dims_from_json(j), g);
  EXPECT_EQ(to_json(GradedDims{}).dump(), "{}");
}

TEST(Json, RationalsAsStrings) {
  EXPECT_EQ(to_json(Rational(-3, 4)).get<std::string>(), "-3/4");
  EXPECT_EQ(to_json(Rational(5)).get<std::string>(), "5");
  EXPECT_EQ(rational_from_json(Json("6/8")), Rational(3, 4));
  EXPECT_THROW(rational_from_json(Json("1/0")), std::invalid_argument);
}

TEST(Json, RepRoundTrip) {
  const PathAlgebra a(4);
  for (const Rep& m : {projective(a, 1), injective(a, 3), fixture_s_minus(a), zero_rep(4)}) {
    EXPECT_EQ(rep_from_json(Json::parse(to_json(m).dump())), m);
  }
}

TEST(Json, ComplexRoundTrip) {
  for (const char* text : {"S+", "twist(S-, 2, P(3))", "cone(P4 -(a3+b3)-> P3) (+) shift(P1, 2)", "I(1)"}) {
    const ProjComplex x = parse_object(text, 4);
    const Json j = to_json(x);
    EXPECT_EQ(complex_from_json(Json::parse(j.dump())), x) << text;
  }
  const Json j = to_json(parse_object("S+", 4));
  EXPECT_EQ(j["terms"]["-3"], Json::parse("[0,0,0,1]"));
  EXPECT_EQ(j["differentials"]["-3"], Json::parse(R"([["b3"]])"));
}

TEST(Json, RhomTableKeys) {
  const RhomTable t = {{GradedDims{{0, 1}}, GradedDims{}}, {GradedDims{{2, 1}}, GradedDims{{0, 1}}}};
  EXPECT_EQ(to_json(t).dump(), R"({"1,1":{"0":1},"1,2":{},"2,1":{"2":1},"2,2":{"0":1}})");
}
