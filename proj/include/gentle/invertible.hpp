#pragma once

// Deciding whether a linear family of block-diagonal maps contains an
// invertible member. Given basis maps B_1..B_n, each a list of square blocks,
// we ask whether some combination sum c_k B_k has every block invertible.
//
// The set of good coefficient vectors is Zariski open, so random integer
// points find one with high probability. When sampling fails the block
// determinants are expanded as polynomials in c, which settles the question.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "gentle/linalg.hpp"

namespace gentle {

// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  using Monomial = std::vector<std::uint16_t>;

  Polynomial() = default;

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p;
    if (!gentle::is_zero(c)) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }

  static Polynomial linear(const std::vector<Rational>& coeffs) {
    Polynomial p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (gentle::is_zero(coeffs[k])) continue;
      Monomial m(coeffs.size(), 0);
      m[k] = 1;
      p.terms_[m] = coeffs[k];
    }
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
      auto& slot = terms_[m];
      slot += c;
      if (gentle::is_zero(slot)) terms_.erase(m);
    }
    return *this;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(ma.size());
        for (std::size_t k = 0; k < m.size(); ++k) m[k] = static_cast<std::uint16_t>(ma[k] + mb[k]);
        auto& slot = p.terms_[m];
        slot += ca * cb;
        if (gentle::is_zero(slot)) p.terms_.erase(m);
      }
    return p;
  }

 private:
  std::map<Monomial, Rational> terms_;
};

// Determinant of a square matrix of polynomials, by expansion over column
// subsets (2^n n products). Fine for the block sizes that occur here.
inline Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(nvars, 1);
  if (n > 20) throw std::runtime_error("symbolic determinant too large");
  std::vector<Polynomial> table(std::size_t{1} << n);
  table[0] = Polynomial::constant(nvars, 1);
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    Polynomial acc;
    // Laplace expansion along the last row of the minor; cofactor sign is
    // (-1)^(row + position of j among the chosen columns).
    int sign = row % 2 == 0 ? 1 : -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const std::size_t rest = mask & ~(std::size_t{1} << j);
      if (!m[row][j].is_zero() && !table[rest].is_zero()) {
        Polynomial term = m[row][j] * table[rest];
        acc += sign > 0 ? term : -term;
      }
      sign = -sign;
    }
    table[mask] = std::move(acc);
  }
  return table.back();
}

struct InvertibilityResult {
  bool invertible = false;
  bool decided_symbolically = false;
  std::optional<std::vector<Rational>> witness;  // coefficients, when sampled
};

// blocks[b][k] is block b of basis map k. Every block must be square; a
// non-square block means no member can be invertible. Zero-size blocks are
// left out by the caller.
inline InvertibilityResult find_invertible_combination(const std::vector<std::vector<Matrix>>& blocks,
                                                       std::size_t nbasis, std::uint64_t seed,
                                                       int rounds = 32) {
  for (const auto& block : blocks) {
    if (block.size() != nbasis) throw std::invalid_argument("block/basis size mismatch");
  }
  // Only the zero map is left; it is invertible only when there are no blocks.
  if (nbasis == 0) {
    if (blocks.empty()) return {true, false, std::vector<Rational>{}};
    return {};
  }
  std::vector<std::size_t> sizes;
  for (const auto& block : blocks) {
    if (block[0].rows() != block[0].cols()) return {};
    sizes.push_back(block[0].rows());
  }

  std::mt19937_64 rng(seed);
  for (int round = 0; round < rounds; ++round) {
    const long bound = 3 + 4L * round;
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Rational> c(nbasis);
    for (auto& x : c) x = Rational(dist(rng));
    bool ok = true;
    for (std::size_t b = 0; b < blocks.size() && ok; ++b) {
      Matrix sum(sizes[b], sizes[b]);
      for (std::size_t k = 0; k < nbasis; ++k)
        if (!is_zero(c[k])) sum = sum + c[k] * blocks[b][k];
      ok = is_invertible(sum);
    }
    if (ok) return {true, false, std::move(c)};
  }

  // Decide block by block: the product of the block determinants is a nonzero
  // polynomial iff each factor is.
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t n = sizes[b];
    if (n == 0) continue;
    std::vector<std::size_t> used;
    for (std::size_t k = 0; k < nbasis; ++k)
      if (!blocks[b][k].is_zero()) used.push_back(k);
    if (used.empty()) return {false, true, std::nullopt};

    bool sampled = false;
    for (int round = 0; round < rounds && !sampled; ++round) {
      const long bound = 3 + 4L * round;
      std::uniform_int_distribution<long> dist(-bound, bound);
      Matrix sum(n, n);
      for (auto k : used) sum = sum + Rational(dist(rng)) * blocks[b][k];
      sampled = is_invertible(sum);
    }
    if (sampled) continue;

    // A zero row or column settles it without expansion.
    Matrix support(n, n);
    for (auto k : used)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!is_zero(blocks[b][k](i, j))) support(i, j) = 1;
    if (rank(support) < n) {
      bool empty_line = false;
      for (std::size_t i = 0; i < n && !empty_line; ++i) {
        bool row_empty = true, col_empty = true;
        for (std::size_t j = 0; j < n; ++j) {
          if (!is_zero(support(i, j))) row_empty = false;
          if (!is_zero(support(j, i))) col_empty = false;
        }
        empty_line = row_empty || col_empty;
      }
      if (empty_line) return {false, true, std::nullopt};
    }

    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> coeffs(used.size());
        for (std::size_t u = 0; u < used.size(); ++u) coeffs[u] = blocks[b][used[u]](i, j);
        m[i][j] = Polynomial::linear(coeffs);
      }
    if (polynomial_determinant(m, used.size()).is_zero()) return {false, true, std::nullopt};
  }
  // Every determinant is a nonzero polynomial, hence so is their product.
  return {true, true, std::nullopt};
}

}  // namespace gentle
