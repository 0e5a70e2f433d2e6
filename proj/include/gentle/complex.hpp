#pragma once

// Bounded complexes of finitely generated projectives, and the calculus on
// them that computes the derived category: shifts, sums, cones, Hom
// complexes, minimal models and projective resolutions.
//
// Conventions
//   * Cohomological indexing, differentials raise degree: d^n : X^n -> X^{n+1}.
//   * X[k]^n = X^{n+k}, with differential (-1)^k d_X.
//   * A summand list names the vertex of each P(v) in a term. A differential
//     entry (row r, col c) lies in Hom(P(col vertex), P(row vertex)), i.e. it
//     is a combination of the paths row vertex -> col vertex.
//   * cone(f : X -> Y)^n = X^{n+1} + Y^n with d = [[-d_X, 0], [f, d_Y]].
//   * Hom complexes use d(f) = d_Y f - (-1)^{|f|} f d_X.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gentle/algebra.hpp"
#include "gentle/invertible.hpp"
#include "gentle/linalg.hpp"
#include "gentle/rep.hpp"

namespace gentle {

// ---------------------------------------------------------------------------
// GradedDims

// p |-> dim H^p of a complex of vector spaces. Only positive entries are kept.
class GradedDims {
 public:
  GradedDims() = default;
  GradedDims(std::initializer_list<std::pair<const int, int>> init) {
    for (const auto& [d, n] : init) add(d, n);
  }

  void add(int degree, int n) {
    if (n == 0) return;
    const int v = (entries_[degree] += n);
    if (v < 0) throw std::logic_error("negative graded dimension");
    if (v == 0) entries_.erase(degree);
  }

  int at(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? 0 : it->second;
  }

  bool empty() const { return entries_.empty(); }
  const std::map<int, int>& entries() const { return entries_; }

  // New object with every degree moved by `offset`.
  GradedDims translated(int offset) const {
    GradedDims g;
    for (const auto& [d, n] : entries_) g.add(d + offset, n);
    return g;
  }

  // Degrees negated: the graded dual.
  GradedDims dual() const {
    GradedDims g;
    for (const auto& [d, n] : entries_) g.add(-d, n);
    return g;
  }

  long euler() const {
    long chi = 0;
    for (const auto& [d, n] : entries_) chi += (d % 2 == 0 ? n : -n);
    return chi;
  }

  int total() const {
    int t = 0;
    for (const auto& [d, n] : entries_) t += n;
    return t;
  }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

 private:
  std::map<int, int> entries_;
};

inline std::string to_string(const GradedDims& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& [d, n] : g.entries()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(d) + ":" + std::to_string(n);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// PathMatrix

class PathMatrix {
 public:
  PathMatrix() = default;
  PathMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  PathCombo& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const PathCombo& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  PathMatrix scaled(const Rational& s) const {
    PathMatrix m = *this;
    for (auto& x : m.data_) x = s * x;
    return m;
  }

  // Composition: (outer * inner)(r, c) = sum_k outer(r, k) o inner(k, c).
  friend PathMatrix operator*(const PathMatrix& outer, const PathMatrix& inner) {
    if (outer.cols_ != inner.rows_) throw std::invalid_argument("path matrix product shape mismatch");
    PathMatrix p(outer.rows_, inner.cols_);
    for (std::size_t r = 0; r < outer.rows_; ++r)
      for (std::size_t k = 0; k < outer.cols_; ++k) {
        const PathCombo& a = outer(r, k);
        if (a.is_zero()) continue;
        for (std::size_t c = 0; c < inner.cols_; ++c) {
          const PathCombo& b = inner(k, c);
          if (!b.is_zero()) p(r, c) += compose(a, b);
        }
      }
    return p;
  }

  friend PathMatrix operator+(PathMatrix a, const PathMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("path matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend PathMatrix operator-(PathMatrix a, const PathMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("path matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const PathMatrix&, const PathMatrix&) = default;

  void erase_row(std::size_t r) {
    data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    --rows_;
  }

  void erase_col(std::size_t c) {
    std::vector<PathCombo> next;
    next.reserve(rows_ * (cols_ - 1));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k)
        if (k != c) next.push_back(std::move(data_[r * cols_ + k]));
    data_ = std::move(next);
    --cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<PathCombo> data_;
};

// Is c a legal element of Hom(P(to), P(from)), i.e. a combination of paths
// from -> to?
inline bool combo_fits(const PathCombo& c, int from, int to) {
  if (from == to) return is_zero(c.alpha) && is_zero(c.beta);
  if (from < to) return is_zero(c.unit);
  return c.is_zero();
}

// ---------------------------------------------------------------------------
// ProjComplex

class ProjComplex {
 public:
  ProjComplex() = default;
  explicit ProjComplex(int mu) : mu_(mu) {
    if (mu < 1) throw std::invalid_argument("mu must be positive");
  }

  // terms[k] and diffs[k] live in degree lo + k; diffs[k] maps terms[k] to
  // terms[k + 1] (or to zero for the last term). Validates shapes, entry
  // support and d o d = 0.
  ProjComplex(int mu, int lo, std::vector<std::vector<int>> terms, std::vector<PathMatrix> diffs)
      : mu_(mu), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)) {
    if (mu < 1) throw std::invalid_argument("mu must be positive");
    if (diffs_.size() < terms_.size()) diffs_.resize(terms_.size());
    if (diffs_.size() != terms_.size()) throw std::invalid_argument("one differential per term expected");
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const std::size_t rows = k + 1 < terms_.size() ? terms_[k + 1].size() : 0;
      if (diffs_[k].rows() == 0 && diffs_[k].cols() == 0) diffs_[k] = PathMatrix(rows, terms_[k].size());
      if (diffs_[k].rows() != rows || diffs_[k].cols() != terms_[k].size())
        throw std::invalid_argument("differential has wrong shape in degree " + std::to_string(lo + static_cast<int>(k)));
      for (int v : terms_[k])
        if (v < 1 || v > mu) throw std::invalid_argument("summand vertex out of range");
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < terms_[k].size(); ++c)
          if (!combo_fits(diffs_[k](r, c), terms_[k + 1][r], terms_[k][c]))
            throw std::invalid_argument("differential entry is not a combination of paths between its summands");
    }
    for (std::size_t k = 0; k + 1 < terms_.size(); ++k)
      if (!(diffs_[k + 1] * diffs_[k]).is_zero())
        throw std::logic_error("d o d != 0 in degree " + std::to_string(lo + static_cast<int>(k)));
    normalize();
  }

  // P(vertex) placed in one degree.
  static ProjComplex indecomposable(int mu, int vertex, int degree = 0) {
    if (vertex < 1 || vertex > mu) throw std::out_of_range("vertex out of range");
    return ProjComplex(mu, degree, {{vertex}}, {PathMatrix(0, 1)});
  }

  int mu() const { return mu_; }
  bool is_zero() const { return terms_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }

  const std::vector<int>& term(int n) const {
    static const std::vector<int> none;
    if (n < lo_ || n > hi()) return none;
    return terms_[static_cast<std::size_t>(n - lo_)];
  }

  // term(n) -> term(n + 1). Only meaningful for lo() <= n <= hi().
  const PathMatrix& diff(int n) const {
    static const PathMatrix none;
    if (n < lo_ || n > hi()) return none;
    return diffs_[static_cast<std::size_t>(n - lo_)];
  }

  std::vector<int> multiplicity(int n) const {
    std::vector<int> m(static_cast<std::size_t>(mu_), 0);
    for (int v : term(n)) ++m[static_cast<std::size_t>(v - 1)];
    return m;
  }

  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& t : terms_) s += t.size();
    return s;
  }

  // Same complex read in the algebra for a larger mu (vertices keep their
  // names; the full subcategory on P(1..mu) does not change).
  ProjComplex embedded(int mu) const {
    if (mu < mu_) throw std::invalid_argument("can only embed into a larger algebra");
    ProjComplex x = *this;
    x.mu_ = mu;
    return x;
  }

  const std::vector<std::vector<int>>& terms() const { return terms_; }
  const std::vector<PathMatrix>& diffs() const { return diffs_; }

  friend bool operator==(const ProjComplex&, const ProjComplex&) = default;

 private:
  void normalize() {
    std::size_t first = 0;
    while (first < terms_.size() && terms_[first].empty()) ++first;
    std::size_t last = terms_.size();
    while (last > first && terms_[last - 1].empty()) --last;
    if (first == last) {
      terms_.clear();
      diffs_.clear();
      lo_ = 0;
      return;
    }
    terms_ = std::vector<std::vector<int>>(terms_.begin() + static_cast<std::ptrdiff_t>(first),
                                           terms_.begin() + static_cast<std::ptrdiff_t>(last));
    diffs_ = std::vector<PathMatrix>(diffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                     diffs_.begin() + static_cast<std::ptrdiff_t>(last));
    diffs_.back() = PathMatrix(0, terms_.back().size());
    lo_ += static_cast<int>(first);
  }

  int mu_ = 1;
  int lo_ = 0;
  std::vector<std::vector<int>> terms_;
  std::vector<PathMatrix> diffs_;
};

// Assembles a complex from per-degree data; missing differentials are zero.
struct ComplexBuilder {
  int mu;
  std::map<int, std::vector<int>> terms;
  std::map<int, PathMatrix> diffs;

  ProjComplex build() const {
    if (terms.empty()) return ProjComplex(mu);
    const int lo = terms.begin()->first;
    const int hi = terms.rbegin()->first;
    std::vector<std::vector<int>> ts;
    std::vector<PathMatrix> ds;
    for (int n = lo; n <= hi; ++n) {
      auto t = terms.find(n);
      ts.push_back(t == terms.end() ? std::vector<int>{} : t->second);
    }
    for (int n = lo; n <= hi; ++n) {
      const std::size_t rows = n < hi ? ts[static_cast<std::size_t>(n + 1 - lo)].size() : 0;
      const std::size_t cols = ts[static_cast<std::size_t>(n - lo)].size();
      auto d = diffs.find(n);
      if (d != diffs.end() && n < hi) {
        ds.push_back(d->second);
      } else {
        ds.emplace_back(rows, cols);
      }
    }
    return ProjComplex(mu, lo, std::move(ts), std::move(ds));
  }
};

inline bool is_complex(const ProjComplex& x) {
  for (int n = x.lo(); n < x.hi(); ++n)
    if (!(x.diff(n + 1) * x.diff(n)).is_zero()) return false;
  return true;
}

inline ProjComplex shift(const ProjComplex& x, int k) {
  if (x.is_zero()) return x;
  const Rational sign = (k % 2 == 0) ? 1 : -1;
  std::vector<PathMatrix> ds;
  for (const auto& d : x.diffs()) ds.push_back(d.scaled(sign));
  return ProjComplex(x.mu(), x.lo() - k, x.terms(), std::move(ds));
}

inline ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y) {
  if (x.mu() != y.mu()) throw std::invalid_argument("direct sum across algebras");
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  ComplexBuilder b{x.mu(), {}, {}};
  const int lo = std::min(x.lo(), y.lo());
  const int hi = std::max(x.hi(), y.hi());
  for (int n = lo; n <= hi; ++n) {
    std::vector<int> t = x.term(n);
    t.insert(t.end(), y.term(n).begin(), y.term(n).end());
    b.terms[n] = std::move(t);
  }
  for (int n = lo; n < hi; ++n) {
    const auto& xs = x.term(n);
    const auto& ys = y.term(n);
    const auto& xn = x.term(n + 1);
    const auto& yn = y.term(n + 1);
    PathMatrix d(xn.size() + yn.size(), xs.size() + ys.size());
    if (!xs.empty() && !xn.empty())
      for (std::size_t r = 0; r < xn.size(); ++r)
        for (std::size_t c = 0; c < xs.size(); ++c) d(r, c) = x.diff(n)(r, c);
    if (!ys.empty() && !yn.empty())
      for (std::size_t r = 0; r < yn.size(); ++r)
        for (std::size_t c = 0; c < ys.size(); ++c) d(xn.size() + r, xs.size() + c) = y.diff(n)(r, c);
    b.diffs[n] = std::move(d);
  }
  return b.build();
}

// V (x) X = sum over p of V^p copies of X[-p].
inline ProjComplex tensor_graded(const GradedDims& v, const ProjComplex& x) {
  ProjComplex out(x.mu());
  for (const auto& [p, n] : v.entries())
    for (int k = 0; k < n; ++k) out = direct_sum(out, shift(x, -p));
  return out;
}

// ---------------------------------------------------------------------------
// Chain maps and cones

struct ChainMap {
  ProjComplex source;
  ProjComplex target;
  std::map<int, PathMatrix> at;  // at[n] : source^n -> target^n; absent = zero

  PathMatrix component(int n) const {
    auto it = at.find(n);
    if (it != at.end()) return it->second;
    return PathMatrix(target.term(n).size(), source.term(n).size());
  }
};

inline bool is_chain_map(const ChainMap& f) {
  const int lo = std::min(f.source.lo(), f.target.lo()) - 1;
  const int hi = std::max(f.source.hi(), f.target.hi()) + 1;
  for (int n = lo; n <= hi; ++n) {
    const PathMatrix fn = f.component(n);
    const PathMatrix fn1 = f.component(n + 1);
    if (fn.rows() != f.target.term(n).size() || fn.cols() != f.source.term(n).size()) return false;
    const auto& ts = f.target.term(n + 1);
    const auto& ss = f.source.term(n);
    if (ts.empty() || ss.empty()) continue;
    PathMatrix left = f.target.term(n).empty() ? PathMatrix(ts.size(), ss.size()) : f.target.diff(n) * fn;
    PathMatrix right = f.source.term(n + 1).empty() ? PathMatrix(ts.size(), ss.size()) : fn1 * f.source.diff(n);
    if (!(left - right).is_zero()) return false;
  }
  return true;
}

inline ChainMap identity_chain_map(const ProjComplex& x) {
  ChainMap f{x, x, {}};
  for (int n = x.lo(); n <= x.hi(); ++n) {
    const auto& t = x.term(n);
    PathMatrix m(t.size(), t.size());
    for (std::size_t k = 0; k < t.size(); ++k) m(k, k).unit = 1;
    f.at[n] = std::move(m);
  }
  return f;
}

inline ChainMap zero_chain_map(const ProjComplex& x, const ProjComplex& y) { return ChainMap{x, y, {}}; }

inline ProjComplex cone(const ChainMap& f) {
  const ProjComplex& x = f.source;
  const ProjComplex& y = f.target;
  if (x.mu() != y.mu()) throw std::invalid_argument("cone across algebras");
  if (x.is_zero()) return y;
  if (y.is_zero()) return shift(x, 1);
  ComplexBuilder b{x.mu(), {}, {}};
  const int lo = std::min(x.lo() - 1, y.lo());
  const int hi = std::max(x.hi() - 1, y.hi());
  for (int n = lo; n <= hi; ++n) {
    std::vector<int> t = x.term(n + 1);
    t.insert(t.end(), y.term(n).begin(), y.term(n).end());
    b.terms[n] = std::move(t);
  }
  for (int n = lo; n < hi; ++n) {
    const auto& x1 = x.term(n + 1);
    const auto& x2 = x.term(n + 2);
    const auto& y0 = y.term(n);
    const auto& y1 = y.term(n + 1);
    PathMatrix d(x2.size() + y1.size(), x1.size() + y0.size());
    if (!x1.empty() && !x2.empty()) {
      const PathMatrix& dx = x.diff(n + 1);
      for (std::size_t r = 0; r < x2.size(); ++r)
        for (std::size_t c = 0; c < x1.size(); ++c) d(r, c) = -dx(r, c);
    }
    if (!x1.empty() && !y1.empty()) {
      const PathMatrix fn = f.component(n + 1);
      for (std::size_t r = 0; r < y1.size(); ++r)
        for (std::size_t c = 0; c < x1.size(); ++c) d(x2.size() + r, c) = fn(r, c);
    }
    if (!y0.empty() && !y1.empty()) {
      const PathMatrix& dy = y.diff(n);
      for (std::size_t r = 0; r < y1.size(); ++r)
        for (std::size_t c = 0; c < y0.size(); ++c) d(x2.size() + r, x1.size() + c) = dy(r, c);
    }
    b.diffs[n] = std::move(d);
  }
  return b.build();
}

// The canonical triangle X -> Y -> cone(f) -> X[1].
struct Triangle {
  ProjComplex cone;
  ChainMap into_cone;    // Y -> cone(f)
  ChainMap out_of_cone;  // cone(f) -> X[1]
};

inline Triangle cone_triangle(const ChainMap& f) {
  Triangle t{cone(f), {}, {}};
  const ProjComplex& x = f.source;
  const ProjComplex& y = f.target;
  const ProjComplex x1 = shift(x, 1);
  t.into_cone = ChainMap{y, t.cone, {}};
  t.out_of_cone = ChainMap{t.cone, x1, {}};
  for (int n = t.cone.lo(); n <= t.cone.hi(); ++n) {
    const auto& xs = x.term(n + 1);
    const auto& ys = y.term(n);
    PathMatrix in(xs.size() + ys.size(), ys.size());
    for (std::size_t k = 0; k < ys.size(); ++k) in(xs.size() + k, k).unit = 1;
    PathMatrix out(xs.size(), xs.size() + ys.size());
    for (std::size_t k = 0; k < xs.size(); ++k) out(k, k).unit = 1;
    t.into_cone.at[n] = std::move(in);
    t.out_of_cone.at[n] = std::move(out);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Complexes of modules

struct RepComplex {
  int mu = 1;
  int lo = 0;
  std::vector<Rep> terms;
  std::vector<std::vector<Matrix>> diffs;  // diffs[k][v - 1] : terms[k]_v -> terms[k + 1]_v

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool in_range(int n) const { return n >= lo && n <= hi(); }
  const Rep& term(int n) const { return terms.at(static_cast<std::size_t>(n - lo)); }
  const Matrix& diff(int n, int v) const {
    return diffs.at(static_cast<std::size_t>(n - lo)).at(static_cast<std::size_t>(v - 1));
  }
};

// Sum of P(v) over the listed summands, as a representation.
inline Rep projective_sum(int mu, const std::vector<int>& summands) {
  std::vector<std::size_t> dims;
  for (int w = 1; w <= mu; ++w) {
    std::size_t d = 0;
    for (int v : summands) d += parallel_count(v, w);
    dims.push_back(d);
  }
  Rep m = zero_arrows_rep(mu, dims);
  for (int w = 1; w < mu; ++w) {
    std::size_t row = 0, col = 0;
    for (int v : summands) {
      const std::size_t nc = parallel_count(v, w);
      const std::size_t nr = parallel_count(v, w + 1);
      // Appending an arrow to a path v -> w: e_w goes to the arrow itself,
      // a proper path extends only by the arrow of its own letter.
      if (nc == 1 && nr == 2 && v == w) {
        m.alpha[static_cast<std::size_t>(w - 1)](row, col) = 1;
        m.beta[static_cast<std::size_t>(w - 1)](row + 1, col) = 1;
      } else if (nc == 2 && nr == 2) {
        m.alpha[static_cast<std::size_t>(w - 1)](row, col) = 1;
        m.beta[static_cast<std::size_t>(w - 1)](row + 1, col + 1) = 1;
      }
      row += nr;
      col += nc;
    }
  }
  return m;
}

// A matrix of path combinations between sums of projectives, evaluated at
// vertex w as a linear map.
inline Matrix evaluate_at(const PathMatrix& d, const std::vector<int>& source, const std::vector<int>& target, int w) {
  std::size_t rows = 0, cols = 0;
  for (int v : target) rows += parallel_count(v, w);
  for (int v : source) cols += parallel_count(v, w);
  Matrix m(rows, cols);
  std::size_t col = 0;
  for (std::size_t c = 0; c < source.size(); ++c) {
    const auto paths = parallel_paths(source[c], w);
    for (const auto& p : paths) {
      std::size_t row = 0;
      for (std::size_t r = 0; r < target.size(); ++r) {
        const std::size_t nr = parallel_count(target[r], w);
        const PathCombo& q = d(r, c);
        if (!q.is_zero() && nr > 0) {
          const auto xs = coordinates(compose(q, PathCombo::of(p)), target[r], w);
          for (std::size_t k = 0; k < nr; ++k) m(row + k, col) = xs[k];
        }
        row += nr;
      }
      ++col;
    }
  }
  return m;
}

inline RepMap evaluate(const PathMatrix& d, const std::vector<int>& source, const std::vector<int>& target, int mu) {
  RepMap f{projective_sum(mu, source), projective_sum(mu, target), {}};
  for (int w = 1; w <= mu; ++w) f.at.push_back(evaluate_at(d, source, target, w));
  return f;
}

inline RepComplex to_rep_complex(const ProjComplex& x) {
  RepComplex out;
  out.mu = x.mu();
  if (x.is_zero()) return out;
  out.lo = x.lo();
  for (int n = x.lo(); n <= x.hi(); ++n) {
    out.terms.push_back(projective_sum(x.mu(), x.term(n)));
    std::vector<Matrix> ds;
    for (int w = 1; w <= x.mu(); ++w) ds.push_back(evaluate_at(x.diff(n), x.term(n), x.term(n + 1), w));
    out.diffs.push_back(std::move(ds));
  }
  return out;
}

inline std::map<int, Rep> cohomology_modules(const RepComplex& x) {
  std::map<int, Rep> out;
  for (int n = x.lo; n <= x.hi(); ++n) {
    const Rep& t = x.term(n);
    std::vector<Matrix> sub, div;
    for (int v = 1; v <= x.mu; ++v) {
      sub.push_back(nullspace_matrix(x.diff(n, v)));
      div.push_back(x.in_range(n - 1) ? x.diff(n - 1, v) : Matrix(t.dim(v), 0));
    }
    Rep h = subquotient(t, sub, div).module;
    if (!h.is_zero()) out.emplace(n, std::move(h));
  }
  return out;
}

inline std::map<int, Rep> cohomology_modules(const ProjComplex& x) { return cohomology_modules(to_rep_complex(x)); }

// ---------------------------------------------------------------------------
// Hom complexes

namespace detail {
inline GradedDims cohomology_dims(int lo, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& ranks) {
  GradedDims g;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const std::size_t in = k > 0 ? ranks[k - 1] : 0;
    const std::size_t h = dims[k] - ranks[k] - in;
    g.add(lo + static_cast<int>(k), static_cast<int>(h));
  }
  return g;
}
}  // namespace detail

// Total Hom complex between two complexes of projectives. Degree n elements
// are families F_p : X^p -> Y^{p+n}; the basis runs over (p, source summand,
// target summand, parallel path).
class HomComplex {
 public:
  HomComplex(const ProjComplex& x, const ProjComplex& y) : x_(x), y_(y) {
    if (x.mu() != y.mu()) throw std::invalid_argument("hom complex across algebras");
    if (x.is_zero() || y.is_zero()) return;
    lo_ = y.lo() - x.hi();
    const int hi = y.hi() - x.lo();
    for (int n = lo_; n <= hi; ++n) layouts_.push_back(make_layout(n));
    for (int n = lo_; n <= hi; ++n) d_.push_back(make_differential(n));
  }

  bool is_zero() const { return layouts_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(layouts_.size()) - 1; }

  std::size_t dim(int n) const {
    if (n < lo_ || n > hi()) return 0;
    return layout(n).dim;
  }

  // d^n : C^n -> C^{n+1}; dim(n+1) x dim(n).
  const Matrix& differential(int n) const { return d_.at(static_cast<std::size_t>(n - lo_)); }

  GradedDims cohomology() const {
    std::vector<std::size_t> dims, ranks;
    for (int n = lo_; n <= hi(); ++n) {
      dims.push_back(dim(n));
      ranks.push_back(rank(differential(n)));
    }
    return detail::cohomology_dims(lo_, dims, ranks);
  }

  // Cocycles representing a basis of H^n.
  std::vector<Vector> cohomology_basis(int n) const {
    if (n < lo_ || n > hi()) return {};
    const Matrix z = nullspace_matrix(differential(n));
    const Matrix b = n > lo_ ? column_basis(differential(n - 1)) : Matrix(dim(n), 0);
    const Matrix reps = complement_columns(b, z);
    std::vector<Vector> out;
    for (std::size_t c = 0; c < reps.cols(); ++c) out.push_back(reps.col(c));
    return out;
  }

  // Degree-n element as the family of components F_p : X^p -> Y^{p+n}.
  std::map<int, PathMatrix> components(int n, const Vector& v) const {
    std::map<int, PathMatrix> out;
    const Layout& l = layout(n);
    for (int p = x_.lo(); p <= x_.hi(); ++p) {
      const auto& xs = x_.term(p);
      const auto& ys = y_.term(p + n);
      if (xs.empty() || ys.empty()) continue;
      PathMatrix m(ys.size(), xs.size());
      const auto& offs = l.offsets[static_cast<std::size_t>(p - x_.lo())];
      for (std::size_t c = 0; c < xs.size(); ++c)
        for (std::size_t r = 0; r < ys.size(); ++r) {
          const std::size_t off = offs[c * ys.size() + r];
          const std::size_t cnt = parallel_count(ys[r], xs[c]);
          std::vector<Rational> coords(v.begin() + static_cast<std::ptrdiff_t>(off),
                                       v.begin() + static_cast<std::ptrdiff_t>(off + cnt));
          m(r, c) = from_coordinates(coords, ys[r], xs[c]);
        }
      out.emplace(p, std::move(m));
    }
    return out;
  }

  // Coordinate of the unit path between summand c of X^p and summand r of
  // Y^{p+n}, which must share a vertex.
  std::size_t unit_index(int n, int p, std::size_t c, std::size_t r) const {
    const Layout& l = layout(n);
    return l.offsets[static_cast<std::size_t>(p - x_.lo())][c * y_.term(p + n).size() + r];
  }

 private:
  struct Layout {
    std::size_t dim = 0;
    std::vector<std::vector<std::size_t>> offsets;  // [p - x.lo][c * |Y^{p+n}| + r]
  };

  const Layout& layout(int n) const { return layouts_.at(static_cast<std::size_t>(n - lo_)); }

  Layout make_layout(int n) const {
    Layout l;
    for (int p = x_.lo(); p <= x_.hi(); ++p) {
      const auto& xs = x_.term(p);
      const auto& ys = y_.term(p + n);
      std::vector<std::size_t> offs(xs.size() * ys.size());
      for (std::size_t c = 0; c < xs.size(); ++c)
        for (std::size_t r = 0; r < ys.size(); ++r) {
          offs[c * ys.size() + r] = l.dim;
          l.dim += parallel_count(ys[r], xs[c]);
        }
      l.offsets.push_back(std::move(offs));
    }
    return l;
  }

  Matrix make_differential(int n) const {
    const Layout& src = layout(n);
    if (n + 1 > hi_bound()) return Matrix(0, src.dim);
    const Layout& dst = layout(n + 1);
    Matrix d(dst.dim, src.dim);
    const Rational sign = (n % 2 == 0) ? -1 : 1;  // -(-1)^n
    for (int p = x_.lo(); p <= x_.hi(); ++p) {
      const auto& xs = x_.term(p);
      const auto& ys = y_.term(p + n);
      if (xs.empty() || ys.empty()) continue;
      const auto& offs = src.offsets[static_cast<std::size_t>(p - x_.lo())];
      const auto& ys1 = y_.term(p + n + 1);
      const auto& xs0 = x_.term(p - 1);
      for (std::size_t c = 0; c < xs.size(); ++c)
        for (std::size_t r = 0; r < ys.size(); ++r) {
          const auto paths = parallel_paths(ys[r], xs[c]);
          for (std::size_t k = 0; k < paths.size(); ++k) {
            const std::size_t col = offs[c * ys.size() + r] + k;
            const PathCombo e = PathCombo::of(paths[k]);
            // d_Y o f, landing in the (p, c, r') block.
            if (!ys1.empty()) {
              const PathMatrix& dy = y_.diff(p + n);
              const auto& doffs = dst.offsets[static_cast<std::size_t>(p - x_.lo())];
              for (std::size_t r1 = 0; r1 < ys1.size(); ++r1) {
                const PathCombo& g = dy(r1, r);
                if (g.is_zero()) continue;
                const auto xs_ = coordinates(compose(g, e), ys1[r1], xs[c]);
                const std::size_t base = doffs[c * ys1.size() + r1];
                for (std::size_t q = 0; q < xs_.size(); ++q)
                  if (!gentle::is_zero(xs_[q])) d(base + q, col) += xs_[q];
              }
            }
            // -(-1)^n f o d_X, landing in the (p - 1, c', r) block.
            if (!xs0.empty()) {
              const PathMatrix& dx = x_.diff(p - 1);
              const auto& doffs = dst.offsets[static_cast<std::size_t>(p - 1 - x_.lo())];
              for (std::size_t c0 = 0; c0 < xs0.size(); ++c0) {
                const PathCombo& h = dx(c, c0);
                if (h.is_zero()) continue;
                const auto xs_ = coordinates(compose(e, h), ys[r], xs0[c0]);
                const std::size_t base = doffs[c0 * ys.size() + r];
                for (std::size_t q = 0; q < xs_.size(); ++q)
                  if (!gentle::is_zero(xs_[q])) d(base + q, col) += sign * xs_[q];
              }
            }
          }
        }
    }
    return d;
  }

  int hi_bound() const { return y_.hi() - x_.lo(); }

  ProjComplex x_, y_;
  int lo_ = 0;
  std::vector<Layout> layouts_;
  std::vector<Matrix> d_;
};

inline HomComplex hom_complex(const ProjComplex& x, const ProjComplex& y) { return HomComplex(x, y); }

inline GradedDims rhom_dims(const ProjComplex& x, const ProjComplex& y) { return HomComplex(x, y).cohomology(); }

// Hom complex from a complex of projectives into a complex of modules:
// degree n is the sum over p and over summands P(v) of X^p of (M^{p+n})_v.
class ModuleHomComplex {
 public:
  ModuleHomComplex(const ProjComplex& x, const RepComplex& m) {
    if (x.mu() != m.mu) throw std::invalid_argument("hom complex across algebras");
    if (x.is_zero() || m.terms.empty()) return;
    lo_ = m.lo - x.hi();
    const int hi = m.hi() - x.lo();
    auto offsets = [&](int n) {
      std::vector<std::vector<std::size_t>> offs;
      std::size_t total = 0;
      for (int p = x.lo(); p <= x.hi(); ++p) {
        std::vector<std::size_t> o;
        for (int v : x.term(p)) {
          o.push_back(total);
          if (m.in_range(p + n)) total += m.term(p + n).dim(v);
        }
        offs.push_back(std::move(o));
      }
      return std::make_pair(offs, total);
    };
    for (int n = lo_; n <= hi; ++n) {
      auto [src, sdim] = offsets(n);
      dims_.push_back(sdim);
      if (n == hi) {
        d_.emplace_back(0, sdim);
        continue;
      }
      auto [dst, ddim] = offsets(n + 1);
      Matrix d(ddim, sdim);
      const Rational sign = (n % 2 == 0) ? -1 : 1;
      for (int p = x.lo(); p <= x.hi(); ++p) {
        if (!m.in_range(p + n)) continue;
        const auto& xs = x.term(p);
        const Rep& mt = m.term(p + n);
        for (std::size_t c = 0; c < xs.size(); ++c) {
          const int v = xs[c];
          const std::size_t base = src[static_cast<std::size_t>(p - x.lo())][c];
          for (std::size_t k = 0; k < mt.dim(v); ++k) {
            const std::size_t col = base + k;
            if (m.in_range(p + n + 1)) {
              const Matrix& dm = m.diff(p + n, v);
              const std::size_t tb = dst[static_cast<std::size_t>(p - x.lo())][c];
              for (std::size_t r = 0; r < dm.rows(); ++r)
                if (!is_zero(dm(r, k))) d(tb + r, col) += dm(r, k);
            }
            if (p - 1 >= x.lo()) {
              const auto& xs0 = x.term(p - 1);
              const PathMatrix& dx = x.diff(p - 1);
              Vector unit(mt.dim(v));
              unit[k] = 1;
              for (std::size_t c0 = 0; c0 < xs0.size(); ++c0) {
                const PathCombo& h = dx(c, c0);
                if (h.is_zero()) continue;
                const Vector img = combo_action(mt, h, v, xs0[c0], unit);
                const std::size_t tb = dst[static_cast<std::size_t>(p - 1 - x.lo())][c0];
                for (std::size_t r = 0; r < img.size(); ++r)
                  if (!is_zero(img[r])) d(tb + r, col) += sign * img[r];
              }
            }
          }
        }
      }
      d_.push_back(std::move(d));
    }
  }

  GradedDims cohomology() const {
    std::vector<std::size_t> ranks;
    for (const auto& d : d_) ranks.push_back(rank(d));
    return detail::cohomology_dims(lo_, dims_, ranks);
  }

  std::size_t dim(int n) const {
    if (n < lo_ || n >= lo_ + static_cast<int>(dims_.size())) return 0;
    return dims_[static_cast<std::size_t>(n - lo_)];
  }

 private:
  int lo_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> d_;
};

inline GradedDims rhom_dims(const ProjComplex& x, const RepComplex& m) { return ModuleHomComplex(x, m).cohomology(); }

// ---------------------------------------------------------------------------
// Minimal models

// Gaussian elimination of every unit entry (a nonzero multiple of e_v between
// two copies of P(v)). Each step removes an isomorphism P(v) -> P(v) from one
// differential and corrects the rest of that differential by the zig-zag
// term; the result is homotopy equivalent and all entries lie in the radical.
inline ProjComplex minimize(const ProjComplex& x) {
  if (x.is_zero()) return x;
  std::vector<std::vector<int>> terms = x.terms();
  std::vector<PathMatrix> diffs = x.diffs();
  const std::size_t len = terms.size();
  for (;;) {
    bool found = false;
    std::size_t k = 0, pr = 0, pc = 0;
    for (k = 0; k + 1 < len && !found; ++k) {
      const PathMatrix& d = diffs[k];
      for (std::size_t r = 0; r < d.rows() && !found; ++r)
        for (std::size_t c = 0; c < d.cols() && !found; ++c)
          if (terms[k + 1][r] == terms[k][c] && !is_zero(d(r, c).unit)) {
            found = true;
            pr = r;
            pc = c;
          }
    }
    if (!found) break;
    --k;
    PathMatrix& d = diffs[k];
    const Rational inv = 1 / d(pr, pc).unit;
    for (std::size_t r = 0; r < d.rows(); ++r) {
      if (r == pr || d(r, pc).is_zero()) continue;
      const PathCombo g = inv * d(r, pc);
      for (std::size_t c = 0; c < d.cols(); ++c) {
        if (c == pc || d(pr, c).is_zero()) continue;
        d(r, c) -= compose(g, d(pr, c));
      }
    }
    d.erase_row(pr);
    d.erase_col(pc);
    if (k + 1 < len) diffs[k + 1].erase_col(pr);
    if (k > 0) diffs[k - 1].erase_row(pc);
    terms[k + 1].erase(terms[k + 1].begin() + static_cast<std::ptrdiff_t>(pr));
    terms[k].erase(terms[k].begin() + static_cast<std::ptrdiff_t>(pc));
  }
  return ProjComplex(x.mu(), x.lo(), std::move(terms), std::move(diffs));
}

inline bool is_minimal(const ProjComplex& x) {
  for (int n = x.lo(); n < x.hi(); ++n) {
    const PathMatrix& d = x.diff(n);
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (!is_zero(d(r, c).unit)) return false;
  }
  return true;
}

inline bool same_multiplicities(const ProjComplex& x, const ProjComplex& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  if (x.lo() != y.lo() || x.hi() != y.hi()) return false;
  for (int n = x.lo(); n <= x.hi(); ++n)
    if (x.multiplicity(n) != y.multiplicity(n)) return false;
  return true;
}

// Isomorphism in the derived category. Minimal complexes are homotopy
// equivalent iff isomorphic as complexes, and a chain map between sums of
// projectives is invertible iff its unit parts are, vertex by vertex.
inline bool is_derived_iso(const ProjComplex& x, const ProjComplex& y, std::uint64_t seed = 0) {
  if (x.mu() != y.mu()) return false;
  const ProjComplex mx = minimize(x);
  const ProjComplex my = minimize(y);
  if (!same_multiplicities(mx, my)) return false;
  if (mx.is_zero()) return true;
  const HomComplex h(mx, my);
  const std::vector<Vector> maps = nullspace(h.differential(0));
  std::vector<std::vector<Matrix>> blocks;
  for (int n = mx.lo(); n <= mx.hi(); ++n) {
    const auto& xs = mx.term(n);
    const auto& ys = my.term(n);
    for (int v = 1; v <= mx.mu(); ++v) {
      std::vector<std::size_t> cs, rs;
      for (std::size_t c = 0; c < xs.size(); ++c)
        if (xs[c] == v) cs.push_back(c);
      for (std::size_t r = 0; r < ys.size(); ++r)
        if (ys[r] == v) rs.push_back(r);
      if (cs.empty()) continue;
      std::vector<Matrix> block;
      for (const auto& f : maps) {
        Matrix m(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
          for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = f[h.unit_index(0, n, cs[j], rs[i])];
        block.push_back(std::move(m));
      }
      blocks.push_back(std::move(block));
    }
  }
  return find_invertible_combination(blocks, maps.size(), seed).invertible;
}

// ---------------------------------------------------------------------------
// Projective resolutions

// Minimal projective resolution of a module, in degrees <= 0, built from
// iterated projective covers (generators = complements of the radical).
inline ProjComplex from_module(const Rep& m) {
  validate(m);
  const int mu = m.mu;
  if (m.is_zero()) return ProjComplex(mu);

  std::vector<std::vector<int>> levels;  // levels[s] sits in degree -s
  std::vector<PathMatrix> maps;          // maps[s] : levels[s + 1] -> levels[s]

  Rep ambient = m;
  std::vector<Matrix> sub;
  for (int v = 1; v <= mu; ++v) sub.push_back(Matrix::identity(m.dim(v)));
  bool first = true;

  for (;;) {
    // Generators of the current submodule: a complement of its radical.
    std::vector<int> summands;
    std::vector<Vector> gens;
    for (int v = 1; v <= mu; ++v) {
      const auto vi = static_cast<std::size_t>(v - 1);
      Matrix rad(ambient.dim(v), 0);
      if (v > 1) {
        rad = hcat(ambient.alpha[vi - 1] * sub[vi - 1], ambient.beta[vi - 1] * sub[vi - 1]);
      }
      const Matrix top = complement_columns(rad, sub[vi]);
      for (std::size_t c = 0; c < top.cols(); ++c) {
        summands.push_back(v);
        gens.push_back(top.col(c));
      }
    }
    if (summands.empty()) break;

    // The cover as a map of representations Q -> ambient.
    RepMap cover{projective_sum(mu, summands), ambient, {}};
    for (int w = 1; w <= mu; ++w) {
      Matrix mw(ambient.dim(w), cover.source.dim(w));
      std::size_t col = 0;
      for (std::size_t g = 0; g < summands.size(); ++g)
        for (const auto& p : parallel_paths(summands[g], w)) {
          const Vector img = path_action(ambient, p) * gens[g];
          for (std::size_t r = 0; r < img.size(); ++r) mw(r, col) = img[r];
          ++col;
        }
      cover.at.push_back(std::move(mw));
    }

    if (!first) {
      // Record the generators as a differential into the previous level.
      const auto& prev = levels.back();
      PathMatrix d(prev.size(), summands.size());
      for (std::size_t g = 0; g < summands.size(); ++g) {
        const int v = summands[g];
        std::size_t off = 0;
        for (std::size_t j = 0; j < prev.size(); ++j) {
          const std::size_t cnt = parallel_count(prev[j], v);
          std::vector<Rational> coords(gens[g].begin() + static_cast<std::ptrdiff_t>(off),
                                       gens[g].begin() + static_cast<std::ptrdiff_t>(off + cnt));
          d(j, g) = from_coordinates(coords, prev[j], v);
          off += cnt;
        }
      }
      maps.push_back(std::move(d));
    }
    levels.push_back(summands);
    first = false;

    // Kernel of the cover, as a subspace of the new projective at each vertex.
    sub.clear();
    for (int w = 1; w <= mu; ++w) sub.push_back(nullspace_matrix(cover.vertex(w)));
    ambient = cover.source;
    bool zero = true;
    for (const auto& s : sub)
      if (s.cols() > 0) zero = false;
    if (zero) break;
  }

  const int depth = static_cast<int>(levels.size());
  std::vector<std::vector<int>> terms;
  std::vector<PathMatrix> diffs;
  for (int s = depth - 1; s >= 0; --s) {
    terms.push_back(levels[static_cast<std::size_t>(s)]);
    diffs.push_back(s > 0 ? maps[static_cast<std::size_t>(s - 1)] : PathMatrix(0, levels[0].size()));
  }
  return ProjComplex(mu, -(depth - 1), std::move(terms), std::move(diffs));
}

inline int global_dimension(const PathAlgebra& a) {
  int gd = 0;
  for (int i = 1; i <= a.mu(); ++i) {
    const ProjComplex r = from_module(simple(a, i));
    gd = std::max(gd, r.hi() - r.lo());
  }
  return gd;
}

// Class in K_0 = Z^mu (basis [P(1)], ..., [P(mu)]).
inline std::vector<long> k_class(const ProjComplex& x) {
  std::vector<long> k(static_cast<std::size_t>(x.mu()), 0);
  for (int n = x.lo(); n <= x.hi(); ++n)
    for (int v : x.term(n)) k[static_cast<std::size_t>(v - 1)] += (n % 2 == 0) ? 1 : -1;
  return k;
}

}  // namespace gentle
