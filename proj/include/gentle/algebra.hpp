#pragma once

// The path algebra of the doubled A_mu quiver
//
//     1 ==> 2 ==> ... ==> mu      (arrows a_i, b_i : i -> i+1)
//
// modulo the relations a_i b_{i+1} = b_i a_{i+1} = 0. Paths compose left to
// right: a1*a2 runs a_1 first. A nonzero path from j to i (j < i) is therefore
// all-a or all-b, and every pair of vertices is joined by at most two paths.

#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gentle/rational.hpp"

namespace gentle {

enum class PathKind : std::uint8_t { trivial, alpha, beta };

struct Path {
  int source = 1;
  int target = 1;
  PathKind kind = PathKind::trivial;

  friend auto operator<=>(const Path&, const Path&) = default;
};

inline Path trivial_path(int v) { return {v, v, PathKind::trivial}; }

inline bool is_valid_path(const Path& p, int mu) {
  if (p.source < 1 || p.target > mu || p.source > p.target) return false;
  return (p.source == p.target) == (p.kind == PathKind::trivial);
}

// All nonzero paths from `from` to `to`, in basis order (a before b).
inline std::vector<Path> parallel_paths(int from, int to) {
  if (from == to) return {trivial_path(from)};
  if (from > to) return {};
  return {{from, to, PathKind::alpha}, {from, to, PathKind::beta}};
}

inline std::size_t parallel_count(int from, int to) { return from == to ? 1 : (from < to ? 2 : 0); }

// Position of p within parallel_paths(p.source, p.target).
inline std::size_t parallel_index(const Path& p) { return p.kind == PathKind::beta ? 1 : 0; }

// Concatenation p then q, or nullopt when the product vanishes.
inline std::optional<Path> concatenate(const Path& p, const Path& q) {
  if (p.target != q.source) return std::nullopt;
  if (p.kind == PathKind::trivial) return q;
  if (q.kind == PathKind::trivial) return p;
  if (p.kind != q.kind) return std::nullopt;
  return Path{p.source, q.target, p.kind};
}

inline std::string to_string(const Path& p) {
  if (p.kind == PathKind::trivial) return "e" + std::to_string(p.source);
  const char letter = p.kind == PathKind::alpha ? 'a' : 'b';
  std::string out;
  for (int v = p.source; v < p.target; ++v) {
    if (!out.empty()) out += '*';
    out += letter;
    out += std::to_string(v);
  }
  return out;
}

// Parses "e3", "a2", "a1*a2", "b2*b3". Mixed words are rejected as zero.
inline Path parse_path(const std::string& text) {
  std::vector<std::string> letters;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, '*')) {
    std::string t;
    for (char ch : piece)
      if (ch != ' ') t += ch;
    letters.push_back(t);
  }
  auto parse_index = [&](const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad path letter: " + s);
    for (std::size_t k = 1; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad path letter: " + s);
    return std::stoi(s.substr(1));
  };
  if (letters.empty()) throw std::invalid_argument("empty path literal");
  if (letters.size() == 1 && !letters[0].empty() && letters[0][0] == 'e') {
    const int v = parse_index(letters[0]);
    return trivial_path(v);
  }
  std::optional<Path> acc;
  for (const auto& l : letters) {
    if (l.empty() || (l[0] != 'a' && l[0] != 'b')) throw std::invalid_argument("bad path letter: " + l);
    const int i = parse_index(l);
    const Path arrow{i, i + 1, l[0] == 'a' ? PathKind::alpha : PathKind::beta};
    if (!acc) {
      acc = arrow;
      continue;
    }
    if (acc->target != arrow.source) throw std::invalid_argument("arrows do not compose: " + text);
    acc = concatenate(*acc, arrow);
    if (!acc) throw std::invalid_argument("path lies in the relation ideal: " + text);
  }
  return *acc;
}

// A linear combination of the parallel paths between two fixed vertices, i.e.
// an element of e_from A e_to. For from == to only `unit` may be nonzero; for
// from < to only `alpha` and `beta`. The vertices are carried by context.
//
// Read as a morphism, a combination of paths j -> i is an element of
// Hom(P(i), P(j)), and composition of morphisms is path concatenation
// (outer path first). The product below is symmetric in its arguments because
// e, the a-paths and the b-paths multiply like orthogonal idempotents.
struct PathCombo {
  Rational unit;
  Rational alpha;
  Rational beta;

  bool is_zero() const { return gentle::is_zero(unit) && gentle::is_zero(alpha) && gentle::is_zero(beta); }

  friend bool operator==(const PathCombo&, const PathCombo&) = default;

  PathCombo& operator+=(const PathCombo& o) {
    unit += o.unit;
    alpha += o.alpha;
    beta += o.beta;
    return *this;
  }
  PathCombo& operator-=(const PathCombo& o) {
    unit -= o.unit;
    alpha -= o.alpha;
    beta -= o.beta;
    return *this;
  }
  friend PathCombo operator+(PathCombo a, const PathCombo& b) { return a += b; }
  friend PathCombo operator-(PathCombo a, const PathCombo& b) { return a -= b; }
  friend PathCombo operator*(const Rational& s, const PathCombo& a) {
    return {s * a.unit, s * a.alpha, s * a.beta};
  }
  PathCombo operator-() const { return {-unit, -alpha, -beta}; }

  static PathCombo of(const Path& p, const Rational& c = 1) {
    PathCombo out;
    switch (p.kind) {
      case PathKind::trivial: out.unit = c; break;
      case PathKind::alpha: out.alpha = c; break;
      case PathKind::beta: out.beta = c; break;
    }
    return out;
  }
};

// Product of a combination of paths u -> v with one of paths v -> w.
inline PathCombo compose(const PathCombo& first, const PathCombo& second) {
  PathCombo out;
  if (!is_zero(first.unit)) {
    out.unit = first.unit * second.unit;
    out.alpha = first.unit * second.alpha;
    out.beta = first.unit * second.beta;
    return out;
  }
  if (!is_zero(second.unit)) {
    out.alpha = first.alpha * second.unit;
    out.beta = first.beta * second.unit;
    return out;
  }
  out.alpha = first.alpha * second.alpha;
  out.beta = first.beta * second.beta;
  return out;
}

// Coordinates in parallel_paths(from, to) order.
inline std::vector<Rational> coordinates(const PathCombo& c, int from, int to) {
  if (from == to) return {c.unit};
  if (from < to) return {c.alpha, c.beta};
  return {};
}

inline PathCombo from_coordinates(const std::vector<Rational>& xs, int from, int to) {
  PathCombo c;
  if (from == to) {
    c.unit = xs.at(0);
  } else if (from < to) {
    c.alpha = xs.at(0);
    c.beta = xs.at(1);
  }
  return c;
}

inline std::string to_string(const PathCombo& c, int from, int to) {
  std::string out;
  auto term = [&](const Rational& coeff, const Path& p) {
    if (is_zero(coeff)) return;
    Rational mag = abs(coeff);
    const bool neg = sgn(coeff) < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "*";
    out += to_string(p);
  };
  const auto paths = parallel_paths(from, to);
  const auto xs = coordinates(c, from, to);
  for (std::size_t k = 0; k < paths.size(); ++k) term(xs[k], paths[k]);
  return out.empty() ? "0" : out;
}

struct ParsedCombo {
  int from = 0;
  int to = 0;
  PathCombo combo;
};

// Parses "a3+b3", "a1*a2 - b1*b2", "2/3*a1", "-e2". All paths must be parallel.
inline ParsedCombo parse_path_combo(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw std::invalid_argument("empty path sum");
  ParsedCombo out;
  bool have_endpoints = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    Rational sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected + or - in path sum: " + text);
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    Rational coeff = 1;
    if (!term.empty() && (std::isdigit(static_cast<unsigned char>(term[0])) != 0)) {
      const auto star = term.find('*');
      if (star == std::string::npos) throw std::invalid_argument("coefficient without path: " + term);
      coeff = parse_rational(term.substr(0, star));
      term = term.substr(star + 1);
    }
    const Path p = parse_path(term);
    if (!have_endpoints) {
      out.from = p.source;
      out.to = p.target;
      have_endpoints = true;
    } else if (p.source != out.from || p.target != out.to) {
      throw std::invalid_argument("path sum mixes endpoints: " + text);
    }
    out.combo += PathCombo::of(p, sign * coeff);
  }
  return out;
}

class PathAlgebra {
 public:
  explicit PathAlgebra(int mu) : mu_(mu) {
    if (mu < 1) throw std::invalid_argument("mu must be positive");
    for (int s = 1; s <= mu; ++s)
      for (int t = s; t <= mu; ++t)
        for (const auto& p : parallel_paths(s, t)) basis_.push_back(p);
    const std::size_t n = basis_.size();
    table_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (auto prod = concatenate(basis_[i], basis_[j])) table_[i * n + j] = static_cast<int>(*index_of(*prod));
  }

  int mu() const { return mu_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }

  bool contains(const Path& p) const { return is_valid_path(p, mu_); }

  std::optional<std::size_t> index_of(const Path& p) const {
    if (!contains(p)) return std::nullopt;
    // Basis is grouped by source, then target, with two entries per proper pair.
    std::size_t idx = 0;
    for (int s = 1; s < p.source; ++s) idx += 1 + 2 * static_cast<std::size_t>(mu_ - s);
    if (p.target > p.source) idx += 1 + 2 * static_cast<std::size_t>(p.target - p.source - 1) + parallel_index(p);
    return idx;
  }

  // p then q through the multiplication table.
  std::optional<Path> multiply(const Path& p, const Path& q) const {
    const auto i = index_of(p);
    const auto j = index_of(q);
    if (!i || !j) throw std::invalid_argument("path does not belong to the algebra");
    const int k = table_[*i * basis_.size() + *j];
    if (k < 0) return std::nullopt;
    return basis_[static_cast<std::size_t>(k)];
  }

  // Paths from j to i; also a basis of Hom(P(i), P(j)).
  std::vector<Path> path_basis(int j, int i) const {
    if (j < 1 || j > mu_ || i < 1 || i > mu_) throw std::out_of_range("vertex out of range");
    return parallel_paths(j, i);
  }

 private:
  int mu_;
  std::vector<Path> basis_;
  std::vector<int> table_;
};

inline PathAlgebra build_algebra(int mu) { return PathAlgebra(mu); }

}  // namespace gentle
