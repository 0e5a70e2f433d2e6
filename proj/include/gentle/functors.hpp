#pragma once

// Nakayama (Serre) functor, sphericity, spherical twists and mutations.
//
// Evaluation and coevaluation maps are built from cocycles representing a
// basis of cohomology of the Hom complex. A cocycle F of degree n in
// Hom(E, F) is the same thing as a chain map E -> F[n], or E[-n] -> F.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentle/complex.hpp"

namespace gentle {

// Sum of I(v) over the listed summands.
inline Rep injective_sum(int mu, const std::vector<int>& summands) {
  const PathAlgebra a(mu);
  Rep out = zero_rep(mu);
  for (int v : summands) out = direct_sum(out, injective(a, v)).sum;
  return out;
}

// nu(q) : I(a) -> I(b) for q a combination of paths b -> a, evaluated at
// vertex v: (nu(q) phi)(r) = phi(r q).
inline Matrix nakayama_at(const PathMatrix& d, const std::vector<int>& source, const std::vector<int>& target, int v) {
  std::size_t rows = 0, cols = 0;
  for (int b : target) rows += parallel_count(v, b);
  for (int a : source) cols += parallel_count(v, a);
  Matrix m(rows, cols);
  std::size_t col = 0;
  for (std::size_t c = 0; c < source.size(); ++c) {
    const std::size_t nc = parallel_count(v, source[c]);
    std::size_t row = 0;
    for (std::size_t r = 0; r < target.size(); ++r) {
      const auto rpaths = parallel_paths(v, target[r]);
      const PathCombo& q = d(r, c);
      if (!q.is_zero())
        for (std::size_t k = 0; k < rpaths.size(); ++k) {
          const auto xs = coordinates(compose(PathCombo::of(rpaths[k]), q), v, source[c]);
          for (std::size_t s = 0; s < nc; ++s) m(row + k, col + s) = xs[s];
        }
      row += rpaths.size();
    }
    col += nc;
  }
  return m;
}

// Termwise Nakayama functor: P(i) |-> I(i).
inline RepComplex nakayama(const ProjComplex& x) {
  RepComplex out;
  out.mu = x.mu();
  if (x.is_zero()) return out;
  out.lo = x.lo();
  for (int n = x.lo(); n <= x.hi(); ++n) {
    out.terms.push_back(injective_sum(x.mu(), x.term(n)));
    std::vector<Matrix> ds;
    for (int v = 1; v <= x.mu(); ++v) ds.push_back(nakayama_at(x.diff(n), x.term(n), x.term(n + 1), v));
    out.diffs.push_back(std::move(ds));
  }
  return out;
}

inline bool is_complex(const RepComplex& x) {
  for (int n = x.lo; n < x.hi(); ++n)
    for (int v = 1; v <= x.mu; ++v)
      if (!(x.diff(n + 1, v) * x.diff(n, v)).is_zero()) return false;
  for (int n = x.lo; n <= x.hi(); ++n) {
    const Rep& s = x.term(n);
    const bool last = n == x.hi();
    for (int i = 1; i < x.mu; ++i)
      for (auto kind : {PathKind::alpha, PathKind::beta}) {
        if (last) continue;
        const Rep& t = x.term(n + 1);
        if (!(t.arrow(kind, i) * x.diff(n, i) == x.diff(n, i + 1) * s.arrow(kind, i))) return false;
      }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Sphericity

enum class SphericalStatus { certified, not_spherical, inconclusive };

inline std::string to_string(SphericalStatus s) {
  switch (s) {
    case SphericalStatus::certified: return "certified";
    case SphericalStatus::not_spherical: return "not spherical";
    case SphericalStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct SphericalCert {
  ProjComplex object;
  int m = 0;
  GradedDims endo_dims;
  bool serre_ok = false;
  SphericalStatus status = SphericalStatus::not_spherical;
  std::string reason;

  bool certified() const { return status == SphericalStatus::certified; }
};

// The Serre condition nu(S) = S[m] is tested on cohomology modules. That
// refutes it whenever the modules differ, and proves it when both sides are
// concentrated in one degree (a complex with cohomology in a single degree is
// quasi-isomorphic to that module).
inline SphericalCert is_spherical(const ProjComplex& s, int m, std::uint64_t seed = 0) {
  if (s.is_zero()) throw std::invalid_argument("sphericity of the zero object");
  SphericalCert cert{s, m, rhom_dims(s, s), false, SphericalStatus::not_spherical, {}};
  const bool endo_ok = m != 0 && cert.endo_dims == GradedDims{{0, 1}, {m, 1}};

  const auto left = cohomology_modules(nakayama(s));
  const auto right = cohomology_modules(shift(s, m));
  bool same = left.size() == right.size();
  for (auto it = left.begin(); same && it != left.end(); ++it) {
    auto jt = right.find(it->first);
    same = jt != right.end() && is_isomorphic(it->second, jt->second, seed);
  }

  bool decided = true;
  if (!same) {
    cert.reason = "cohomology of nu(S) and S[m] differ";
  } else if (left.size() > 1) {
    decided = false;
  } else {
    cert.serre_ok = true;
  }

  if (!endo_ok) {
    cert.reason = "endomorphism dims " + to_string(cert.endo_dims);
  } else if (cert.serre_ok) {
    cert.status = SphericalStatus::certified;
  } else if (!decided) {
    cert.status = SphericalStatus::inconclusive;
    cert.reason = "cohomology in several degrees; module comparison does not decide";
  }
  return cert;
}

// S_i = cone(f_i : P(mu-i+1) -> P(mu-i)), f_i = a_{mu-i} + b_{mu-i}.
inline ProjComplex spherical_s(int mu, int i) {
  if (i < 1 || i >= mu) throw std::out_of_range("S_i needs 1 <= i < mu");
  PathMatrix d(1, 1);
  d(0, 0) = PathCombo{0, 1, 1};
  return ProjComplex(mu, -1, {{mu - i + 1}, {mu - i}}, {d, PathMatrix(0, 1)});
}

// ---------------------------------------------------------------------------
// Evaluation and coevaluation

namespace detail {

struct CohomologyReps {
  GradedDims dims;
  std::vector<std::pair<int, std::map<int, PathMatrix>>> reps;  // (degree, components), degree ascending
};

inline CohomologyReps cohomology_reps(const ProjComplex& x, const ProjComplex& y) {
  CohomologyReps out;
  const HomComplex h(x, y);
  if (h.is_zero()) return out;
  for (int n = h.lo(); n <= h.hi(); ++n)
    for (const auto& v : h.cohomology_basis(n)) {
      out.dims.add(n, 1);
      out.reps.emplace_back(n, h.components(n, v));
    }
  return out;
}

// Sum of X[shift(n)] over the representatives, in their order.
template <class Shift>
ProjComplex sum_over(const CohomologyReps& reps, const ProjComplex& x, Shift shift_of) {
  ProjComplex out(x.mu());
  for (const auto& r : reps.reps) out = direct_sum(out, shift(x, shift_of(r.first)));
  return out;
}

inline void place_block(PathMatrix& m, std::size_t row0, std::size_t col0, const PathMatrix& b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(row0 + r, col0 + c) = b(r, c);
}

}  // namespace detail

// ev : RHom(E, F) (x) E -> F, one summand E[-n] per cohomology basis vector.
inline ChainMap evaluation_map(const ProjComplex& e, const ProjComplex& f) {
  const auto reps = detail::cohomology_reps(e, f);
  ChainMap ev{detail::sum_over(reps, e, [](int n) { return -n; }), f, {}};
  if (ev.source.is_zero()) return ev;
  for (int p = ev.source.lo(); p <= ev.source.hi(); ++p) {
    const auto& ft = f.term(p);
    PathMatrix m(ft.size(), ev.source.term(p).size());
    std::size_t col = 0;
    for (const auto& [n, comps] : reps.reps) {
      const auto& et = e.term(p - n);  // E[-n]^p = E^{p-n}
      if (!et.empty() && !ft.empty()) {
        auto it = comps.find(p - n);
        if (it != comps.end()) detail::place_block(m, 0, col, it->second);
      }
      col += et.size();
    }
    ev.at[p] = std::move(m);
  }
  return ev;
}

// coev : E -> RHom(E, F)^* (x) F, one summand F[n] per cohomology basis vector.
inline ChainMap coevaluation_map(const ProjComplex& e, const ProjComplex& f) {
  const auto reps = detail::cohomology_reps(e, f);
  ChainMap co{e, detail::sum_over(reps, f, [](int n) { return n; }), {}};
  if (co.target.is_zero()) return co;
  for (int p = e.lo(); p <= e.hi(); ++p) {
    const auto& et = e.term(p);
    PathMatrix m(co.target.term(p).size(), et.size());
    std::size_t row = 0;
    for (const auto& [n, comps] : reps.reps) {
      const auto& ft = f.term(p + n);  // F[n]^p = F^{p+n}
      if (!et.empty() && !ft.empty()) {
        auto it = comps.find(p);
        if (it != comps.end()) detail::place_block(m, row, 0, it->second);
      }
      row += ft.size();
    }
    co.at[p] = std::move(m);
  }
  return co;
}

// T_S(X) = cone(RHom(S, X) (x) S -> X).
inline ProjComplex twist(const ProjComplex& s, const ProjComplex& x) { return minimize(cone(evaluation_map(s, x))); }

// T_S^{-1}(X) = cone(X -> RHom(X, S)^* (x) S)[-1].
inline ProjComplex twist_inverse(const ProjComplex& s, const ProjComplex& x) {
  return minimize(shift(cone(coevaluation_map(x, s)), -1));
}

// T_S^k, with negative k meaning inverse twists.
inline ProjComplex twist_power(const ProjComplex& s, int k, ProjComplex x) {
  for (int j = 0; j < k; ++j) x = twist(s, x);
  for (int j = 0; j > k; --j) x = twist_inverse(s, x);
  return x;
}

// L_E F = cone(RHom(E, F) (x) E -> F)[-1].
inline ProjComplex left_mutation(const ProjComplex& e, const ProjComplex& f) {
  return minimize(shift(cone(evaluation_map(e, f)), -1));
}

// R_F E = cone(E -> RHom(E, F)^* (x) F).
inline ProjComplex right_mutation(const ProjComplex& e, const ProjComplex& f) {
  return minimize(cone(coevaluation_map(e, f)));
}

}  // namespace gentle
