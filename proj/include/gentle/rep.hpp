#pragma once

// Finite-dimensional modules as quiver representations: a vector space at
// each vertex and one matrix per arrow, subject to the relations
// M(b_{i+1}) M(a_i) = 0 and M(a_{i+1}) M(b_i) = 0.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gentle/algebra.hpp"
#include "gentle/invertible.hpp"
#include "gentle/linalg.hpp"

namespace gentle {

struct Rep {
  int mu = 1;
  std::vector<std::size_t> dims;  // dims[v - 1]
  std::vector<Matrix> alpha;      // alpha[i - 1] : dim(i) -> dim(i + 1)
  std::vector<Matrix> beta;

  std::size_t dim(int v) const { return dims.at(static_cast<std::size_t>(v - 1)); }

  const Matrix& arrow(PathKind kind, int i) const {
    const auto idx = static_cast<std::size_t>(i - 1);
    return kind == PathKind::beta ? beta.at(idx) : alpha.at(idx);
  }
  Matrix& arrow(PathKind kind, int i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    return kind == PathKind::beta ? beta.at(idx) : alpha.at(idx);
  }

  std::size_t total_dim() const {
    std::size_t n = 0;
    for (auto d : dims) n += d;
    return n;
  }

  bool is_zero() const { return total_dim() == 0; }

  friend bool operator==(const Rep&, const Rep&) = default;
};

// All arrows zero.
inline Rep zero_arrows_rep(int mu, std::vector<std::size_t> dims) {
  if (static_cast<int>(dims.size()) != mu) throw std::invalid_argument("dimension vector length != mu");
  Rep m;
  m.mu = mu;
  m.dims = std::move(dims);
  for (int i = 1; i < mu; ++i) {
    m.alpha.emplace_back(m.dim(i + 1), m.dim(i));
    m.beta.emplace_back(m.dim(i + 1), m.dim(i));
  }
  return m;
}

inline Rep zero_rep(int mu) { return zero_arrows_rep(mu, std::vector<std::size_t>(static_cast<std::size_t>(mu), 0)); }

inline void validate(const Rep& m) {
  if (m.mu < 1 || static_cast<int>(m.dims.size()) != m.mu) throw std::invalid_argument("bad dimension vector");
  if (static_cast<int>(m.alpha.size()) != m.mu - 1 || static_cast<int>(m.beta.size()) != m.mu - 1)
    throw std::invalid_argument("wrong number of arrow matrices");
  for (int i = 1; i < m.mu; ++i)
    for (auto kind : {PathKind::alpha, PathKind::beta}) {
      const Matrix& x = m.arrow(kind, i);
      if (x.rows() != m.dim(i + 1) || x.cols() != m.dim(i))
        throw std::invalid_argument("arrow matrix has wrong shape at arrow " + std::to_string(i));
    }
  for (int i = 1; i + 1 < m.mu; ++i) {
    if (!(m.beta[i] * m.alpha[i - 1]).is_zero() || !(m.alpha[i] * m.beta[i - 1]).is_zero())
      throw std::invalid_argument("representation violates the relations at vertex " + std::to_string(i + 1));
  }
}

// Matrix of M(p) : M_source -> M_target.
inline Matrix path_action(const Rep& m, const Path& p) {
  Matrix out = Matrix::identity(m.dim(p.source));
  for (int v = p.source; v < p.target; ++v) out = m.arrow(p.kind, v) * out;
  return out;
}

// Vector of M(c) applied to x, for a path combination c from `from` to `to`.
inline Vector combo_action(const Rep& m, const PathCombo& c, int from, int to, const Vector& x) {
  Vector out(m.dim(to));
  const auto paths = parallel_paths(from, to);
  const auto xs = coordinates(c, from, to);
  for (std::size_t k = 0; k < paths.size(); ++k) {
    if (is_zero(xs[k])) continue;
    const Vector y = path_action(m, paths[k]) * x;
    for (std::size_t r = 0; r < y.size(); ++r) out[r] += xs[k] * y[r];
  }
  return out;
}

// Indecomposable projective P(i): basis at v is the paths i -> v, arrows act by
// appending.
inline Rep projective(const PathAlgebra& a, int i) {
  const int mu = a.mu();
  if (i < 1 || i > mu) throw std::out_of_range("vertex out of range");
  std::vector<std::size_t> dims;
  for (int v = 1; v <= mu; ++v) dims.push_back(parallel_count(i, v));
  Rep m = zero_arrows_rep(mu, dims);
  for (int v = 1; v < mu; ++v)
    for (auto kind : {PathKind::alpha, PathKind::beta}) {
      const Path x{v, v + 1, kind};
      const auto from = a.path_basis(i, v);
      const auto to = a.path_basis(i, v + 1);
      Matrix& mat = m.arrow(kind, v);
      for (std::size_t c = 0; c < from.size(); ++c)
        if (auto q = a.multiply(from[c], x))
          for (std::size_t r = 0; r < to.size(); ++r)
            if (to[r] == *q) mat(r, c) = 1;
    }
  return m;
}

// Indecomposable injective I(i): basis at v is dual to the paths v -> i;
// an arrow x : v -> v+1 sends phi to (s |-> phi(x s)).
inline Rep injective(const PathAlgebra& a, int i) {
  const int mu = a.mu();
  if (i < 1 || i > mu) throw std::out_of_range("vertex out of range");
  std::vector<std::size_t> dims;
  for (int v = 1; v <= mu; ++v) dims.push_back(parallel_count(v, i));
  Rep m = zero_arrows_rep(mu, dims);
  for (int v = 1; v < mu; ++v)
    for (auto kind : {PathKind::alpha, PathKind::beta}) {
      const Path x{v, v + 1, kind};
      const auto from = parallel_paths(v, i);
      const auto to = parallel_paths(v + 1, i);
      Matrix& mat = m.arrow(kind, v);
      for (std::size_t r = 0; r < to.size(); ++r)
        if (auto q = a.multiply(x, to[r]))
          for (std::size_t c = 0; c < from.size(); ++c)
            if (from[c] == *q) mat(r, c) = 1;
    }
  return m;
}

inline Rep simple(const PathAlgebra& a, int i) {
  if (i < 1 || i > a.mu()) throw std::out_of_range("vertex out of range");
  std::vector<std::size_t> dims(static_cast<std::size_t>(a.mu()), 0);
  dims[static_cast<std::size_t>(i - 1)] = 1;
  return zero_arrows_rep(a.mu(), dims);
}

namespace detail {
inline Rep line_module(const PathAlgebra& a, PathKind live) {
  if (a.mu() != 4) throw std::invalid_argument("S+ and S- are defined for mu = 4 only");
  Rep m = zero_arrows_rep(4, {1, 1, 1, 1});
  for (int i = 1; i < 4; ++i) m.arrow(live, i)(0, 0) = 1;
  return m;
}
}  // namespace detail

// One-dimensional at every vertex; a-maps 1, b-maps 0.
inline Rep fixture_s_plus(const PathAlgebra& a) { return detail::line_module(a, PathKind::alpha); }
// One-dimensional at every vertex; a-maps 0, b-maps 1.
inline Rep fixture_s_minus(const PathAlgebra& a) { return detail::line_module(a, PathKind::beta); }

struct RepMap {
  Rep source;
  Rep target;
  std::vector<Matrix> at;  // at[v - 1] : source_v -> target_v

  const Matrix& vertex(int v) const { return at.at(static_cast<std::size_t>(v - 1)); }
};

inline RepMap zero_map(const Rep& source, const Rep& target) {
  RepMap f{source, target, {}};
  for (int v = 1; v <= source.mu; ++v) f.at.emplace_back(target.dim(v), source.dim(v));
  return f;
}

inline RepMap identity_map(const Rep& m) {
  RepMap f{m, m, {}};
  for (int v = 1; v <= m.mu; ++v) f.at.push_back(Matrix::identity(m.dim(v)));
  return f;
}

inline bool intertwines(const RepMap& f) {
  const Rep& s = f.source;
  const Rep& t = f.target;
  if (s.mu != t.mu || static_cast<int>(f.at.size()) != s.mu) return false;
  for (int v = 1; v <= s.mu; ++v) {
    const Matrix& m = f.vertex(v);
    if (m.rows() != t.dim(v) || m.cols() != s.dim(v)) return false;
  }
  for (int i = 1; i < s.mu; ++i)
    for (auto kind : {PathKind::alpha, PathKind::beta})
      if (!(t.arrow(kind, i) * f.vertex(i) == f.vertex(i + 1) * s.arrow(kind, i))) return false;
  return true;
}

inline void validate(const RepMap& f) {
  if (!intertwines(f)) throw std::invalid_argument("map does not intertwine the arrows");
}

inline RepMap compose(const RepMap& g, const RepMap& f) {
  if (!(f.target.dims == g.source.dims)) throw std::invalid_argument("maps do not compose");
  RepMap h{f.source, g.target, {}};
  for (int v = 1; v <= f.source.mu; ++v) h.at.push_back(g.vertex(v) * f.vertex(v));
  return h;
}

struct SumWithMaps {
  Rep sum;
  RepMap inclusion_first, inclusion_second;
  RepMap projection_first, projection_second;
};

inline SumWithMaps direct_sum(const Rep& m, const Rep& n) {
  if (m.mu != n.mu) throw std::invalid_argument("direct sum across algebras");
  std::vector<std::size_t> dims;
  for (int v = 1; v <= m.mu; ++v) dims.push_back(m.dim(v) + n.dim(v));
  Rep s = zero_arrows_rep(m.mu, dims);
  for (int i = 1; i < m.mu; ++i)
    for (auto kind : {PathKind::alpha, PathKind::beta}) {
      Matrix& x = s.arrow(kind, i);
      const Matrix& a = m.arrow(kind, i);
      const Matrix& b = n.arrow(kind, i);
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) x(r, c) = a(r, c);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) x(a.rows() + r, a.cols() + c) = b(r, c);
    }
  SumWithMaps out{s, zero_map(m, s), zero_map(n, s), zero_map(s, m), zero_map(s, n)};
  for (int v = 1; v <= m.mu; ++v) {
    const auto vi = static_cast<std::size_t>(v - 1);
    for (std::size_t k = 0; k < m.dim(v); ++k) {
      out.inclusion_first.at[vi](k, k) = 1;
      out.projection_first.at[vi](k, k) = 1;
    }
    for (std::size_t k = 0; k < n.dim(v); ++k) {
      out.inclusion_second.at[vi](m.dim(v) + k, k) = 1;
      out.projection_second.at[vi](k, m.dim(v) + k) = 1;
    }
  }
  return out;
}

// Transport of structure along invertible matrices g_v : M_v -> M'_v.
inline Rep base_change(const Rep& m, const std::vector<Matrix>& g) {
  Rep out = m;
  std::vector<Matrix> inv;
  for (int v = 1; v <= m.mu; ++v) {
    const Matrix& gv = g.at(static_cast<std::size_t>(v - 1));
    auto x = solve(gv, Matrix::identity(m.dim(v)));
    if (!x || !is_invertible(gv)) throw std::invalid_argument("base change matrix is singular");
    inv.push_back(*x);
  }
  for (int i = 1; i < m.mu; ++i)
    for (auto kind : {PathKind::alpha, PathKind::beta})
      out.arrow(kind, i) = g[static_cast<std::size_t>(i)] * m.arrow(kind, i) * inv[static_cast<std::size_t>(i - 1)];
  return out;
}

// Basis of Hom(M, N): the solutions of N(x) f_v = f_{v+1} M(x) for every arrow.
inline std::vector<RepMap> hom_space(const Rep& m, const Rep& n) {
  if (m.mu != n.mu) throw std::invalid_argument("hom_space across algebras");
  const int mu = m.mu;
  std::vector<std::size_t> offset(static_cast<std::size_t>(mu) + 1, 0);
  for (int v = 1; v <= mu; ++v) offset[static_cast<std::size_t>(v)] = offset[static_cast<std::size_t>(v - 1)] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = offset.back();
  auto var = [&](int v, std::size_t r, std::size_t c) {
    return offset[static_cast<std::size_t>(v - 1)] + r * m.dim(v) + c;
  };
  std::size_t equations = 0;
  for (int i = 1; i < mu; ++i) equations += 2 * n.dim(i + 1) * m.dim(i);
  Matrix sys(equations, unknowns);
  std::size_t row = 0;
  for (int i = 1; i < mu; ++i)
    for (auto kind : {PathKind::alpha, PathKind::beta}) {
      const Matrix& nx = n.arrow(kind, i);  // dim_n(i+1) x dim_n(i)
      const Matrix& mx = m.arrow(kind, i);  // dim_m(i+1) x dim_m(i)
      for (std::size_t r = 0; r < n.dim(i + 1); ++r)
        for (std::size_t c = 0; c < m.dim(i); ++c, ++row) {
          // (N(x) f_i)(r, c) - (f_{i+1} M(x))(r, c)
          for (std::size_t k = 0; k < n.dim(i); ++k)
            if (!is_zero(nx(r, k))) sys(row, var(i, k, c)) += nx(r, k);
          for (std::size_t k = 0; k < m.dim(i + 1); ++k)
            if (!is_zero(mx(k, c))) sys(row, var(i + 1, r, k)) -= mx(k, c);
        }
    }
  std::vector<RepMap> basis;
  for (const auto& sol : nullspace(sys)) {
    RepMap f = zero_map(m, n);
    for (int v = 1; v <= mu; ++v)
      for (std::size_t r = 0; r < n.dim(v); ++r)
        for (std::size_t c = 0; c < m.dim(v); ++c) f.at[static_cast<std::size_t>(v - 1)](r, c) = sol[var(v, r, c)];
    basis.push_back(std::move(f));
  }
  return basis;
}

inline bool is_isomorphic(const Rep& m, const Rep& n, std::uint64_t seed = 0) {
  if (m.mu != n.mu || m.dims != n.dims) return false;
  if (m.is_zero()) return true;
  const auto basis = hom_space(m, n);
  std::vector<std::vector<Matrix>> blocks;
  for (int v = 1; v <= m.mu; ++v) {
    if (m.dim(v) == 0) continue;
    std::vector<Matrix> block;
    for (const auto& f : basis) block.push_back(f.vertex(v));
    blocks.push_back(std::move(block));
  }
  return find_invertible_combination(blocks, basis.size(), seed).invertible;
}

// A subquotient of T: sub_v / div_v where div_v lies inside sub_v, both given
// by spanning columns in T_v coordinates.
struct Subquotient {
  Rep module;
  std::vector<Matrix> representatives;  // columns in T_v coordinates, one per basis vector
  std::vector<Matrix> coordinates;      // projection sub_v -> module_v, in T_v coordinates (valid on sub_v)
};

inline Subquotient subquotient(const Rep& t, const std::vector<Matrix>& sub, const std::vector<Matrix>& div) {
  const int mu = t.mu;
  std::vector<Matrix> div_basis, reps, frames;
  std::vector<std::size_t> dims;
  for (int v = 1; v <= mu; ++v) {
    const auto vi = static_cast<std::size_t>(v - 1);
    Matrix d = column_basis(div[vi]);
    Matrix q = complement_columns(d, sub[vi]);
    dims.push_back(q.cols());
    frames.push_back(hcat(d, q));
    div_basis.push_back(std::move(d));
    reps.push_back(std::move(q));
  }
  Rep out = zero_arrows_rep(mu, dims);
  // Express a vector of sub_v in the frame [div | q] and keep the q part.
  auto quotient_coords = [&](int v, const Matrix& x) {
    const auto vi = static_cast<std::size_t>(v - 1);
    auto sol = solve(frames[vi], x);
    if (!sol) throw std::logic_error("subquotient: vector outside the subspace");
    std::vector<std::size_t> keep;
    for (std::size_t k = div_basis[vi].cols(); k < frames[vi].cols(); ++k) keep.push_back(k);
    return select_rows(*sol, keep);
  };
  for (int i = 1; i < mu; ++i)
    for (auto kind : {PathKind::alpha, PathKind::beta})
      out.arrow(kind, i) = quotient_coords(i + 1, t.arrow(kind, i) * reps[static_cast<std::size_t>(i - 1)]);
  std::vector<Matrix> proj;
  for (int v = 1; v <= mu; ++v) {
    const auto vi = static_cast<std::size_t>(v - 1);
    const Matrix sub_basis = column_basis(sub[vi]);
    const Matrix coords = quotient_coords(v, sub_basis);
    // Any p with p * sub_basis = coords; it is only meaningful on sub_v.
    Matrix p(out.dim(v), t.dim(v));
    if (sub_basis.cols() > 0) {
      auto pt = solve(sub_basis.transpose(), coords.transpose());
      if (!pt) throw std::logic_error("subquotient: projection not solvable");
      p = pt->transpose();
    }
    proj.push_back(std::move(p));
  }
  return {std::move(out), std::move(reps), std::move(proj)};
}

struct KernelResult {
  Rep module;
  RepMap inclusion;
};

inline KernelResult kernel(const RepMap& f) {
  std::vector<Matrix> sub, div;
  for (int v = 1; v <= f.source.mu; ++v) {
    sub.push_back(nullspace_matrix(f.vertex(v)));
    div.emplace_back(f.source.dim(v), 0);
  }
  auto sq = subquotient(f.source, sub, div);
  RepMap inc{sq.module, f.source, sq.representatives};
  return {std::move(sq.module), std::move(inc)};
}

struct CokernelResult {
  Rep module;
  RepMap projection;
};

inline CokernelResult cokernel(const RepMap& f) {
  std::vector<Matrix> sub, div;
  for (int v = 1; v <= f.target.mu; ++v) {
    sub.push_back(Matrix::identity(f.target.dim(v)));
    div.push_back(f.vertex(v));
  }
  auto sq = subquotient(f.target, sub, div);
  RepMap proj{f.target, sq.module, sq.coordinates};
  return {std::move(sq.module), std::move(proj)};
}

// 0 -> A --incl--> B --proj--> C -> 0 exact, checked vertex by vertex.
inline bool verify_short_exact(const RepMap& incl, const RepMap& proj) {
  if (incl.target.mu != proj.source.mu || incl.target.dims != proj.source.dims ||
      !(incl.target == proj.source))
    throw std::invalid_argument("short exact sequence: middle terms differ");
  if (!intertwines(incl) || !intertwines(proj)) return false;
  for (int v = 1; v <= incl.source.mu; ++v) {
    const Matrix& i = incl.vertex(v);
    const Matrix& p = proj.vertex(v);
    if (!(p * i).is_zero()) return false;
    const std::size_t ri = rank(i);
    const std::size_t rp = rank(p);
    if (ri != i.cols()) return false;
    if (rp != p.rows()) return false;
    if (ri + rp != i.rows()) return false;
  }
  return true;
}

}  // namespace gentle
