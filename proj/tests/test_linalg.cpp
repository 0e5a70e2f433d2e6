#include <gtest/gtest.h>

#include <random>

#include "gentle/invertible.hpp"
#include "gentle/linalg.hpp"

using namespace gentle;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int density = 2) {
  std::uniform_int_distribution<int> val(-3, 3), keep(0, density);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng) == 0) m(i, j) = val(rng);
  return m;
}

}  // namespace

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(parse_rational("-2/4")), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Linalg, RankNullityOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    const Matrix m = random_matrix(rng, r, c);
    const auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.size(), c);
    for (const auto& v : ns) {
      const Vector z = m * v;
      for (const auto& x : z) EXPECT_TRUE(is_zero(x));
    }
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Linalg, SolveAndDeterminant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Matrix a = random_matrix(rng, n, n, 1);
    const Matrix x = random_matrix(rng, n, 2, 1);
    const Matrix b = a * x;
    auto sol = solve(a, b);
    ASSERT_TRUE(sol);
    EXPECT_EQ(a * *sol, b);
    EXPECT_EQ(is_zero(determinant(a)), !is_invertible(a));
  }
  const Matrix a = Matrix::from_rows({{1, 2}, {2, 4}}, 2);
  EXPECT_FALSE(solve(a, Matrix::from_rows({{1}, {0}}, 1)));
  EXPECT_EQ(determinant(Matrix::from_rows({{0, 1}, {1, 0}}, 2)), -1);
}

TEST(Linalg, ComplementColumns) {
  const Matrix base = Matrix::from_rows({{1}, {0}, {0}}, 1);
  const Matrix cand = Matrix::identity(3);
  const Matrix ext = complement_columns(base, cand);
  EXPECT_EQ(ext.cols(), 2u);
  EXPECT_EQ(rank(hcat(base, ext)), 3u);
}

TEST(Invertible, PolynomialDeterminantMatchesNumeric) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const Matrix m = random_matrix(rng, n, n, 0);
    std::vector<std::vector<Polynomial>> p(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p[i][j] = Polynomial::constant(1, m(i, j));
    const Polynomial d = polynomial_determinant(p, 1);
    EXPECT_EQ(d.is_zero(), is_zero(determinant(m)));
  }
}

TEST(Invertible, SymbolicFallbackDecides) {
  // x E11 + y E22 is generically invertible; with rounds = 0 only the
  // symbolic path can say so.
  Matrix e11(2, 2), e22(2, 2), e12(2, 2);
  e11(0, 0) = 1;
  e22(1, 1) = 1;
  e12(0, 1) = 1;
  auto yes = find_invertible_combination({{e11, e22}}, 2, 0, 0);
  EXPECT_TRUE(yes.invertible);
  EXPECT_TRUE(yes.decided_symbolically);
  auto no = find_invertible_combination({{e11, e12}}, 2, 0, 0);
  EXPECT_FALSE(no.invertible);
  auto sampled = find_invertible_combination({{e11, e22}}, 2, 5);
  EXPECT_TRUE(sampled.invertible);
  ASSERT_TRUE(sampled.witness);
  // A non-square block is never invertible.
  EXPECT_FALSE(find_invertible_combination({{Matrix(1, 2)}}, 1, 0).invertible);
}

TEST(Invertible, SingularFamilyNeedsExpansion) {
  // Every member is [[x, y], [x, y]]: singular, yet no row or column is empty.
  Matrix a(2, 2), b(2, 2);
  a(0, 0) = 1;
  a(1, 0) = 1;
  b(0, 1) = 1;
  b(1, 1) = 1;
  auto r = find_invertible_combination({{a, b}}, 2, 1);
  EXPECT_FALSE(r.invertible);
  EXPECT_TRUE(r.decided_symbolically);
}
