#pragma once

// The right action of B_mu x| Z^mu on exceptional collections. A braid letter
// s_i replaces positions (i, i+1) by (L_{E_i} E_{i+1}, E_i), its inverse by
// (E_{i+1}, R_{E_{i+1}} E_i); the lattice shifts the objects.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gentle/functors.hpp"

namespace gentle {

struct BraidLetter {
  int index = 1;
  bool inverse = false;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct GroupWord {
  std::vector<BraidLetter> letters;
  std::vector<int> shifts;  // empty means zero

  void validate(int mu) const {
    for (const auto& l : letters)
      if (l.index < 1 || l.index >= mu)
        throw std::invalid_argument("braid letter s" + std::to_string(l.index) + " out of range for mu=" + std::to_string(mu));
    if (!shifts.empty() && static_cast<int>(shifts.size()) != mu)
      throw std::invalid_argument("shift vector has length " + std::to_string(shifts.size()) + ", expected " + std::to_string(mu));
  }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

// The braid part acts on shift vectors through B_mu -> S_mu: each letter
// swaps entries i and i+1.
inline std::vector<int> permute_shifts(const std::vector<BraidLetter>& letters, std::vector<int> n) {
  if (n.empty()) return n;
  for (const auto& l : letters) std::swap(n[static_cast<std::size_t>(l.index - 1)], n[static_cast<std::size_t>(l.index)]);
  return n;
}

// (L1, n1)(L2, n2) = (L1 L2, perm_{L2}(n1) + n2).
inline GroupWord product(const GroupWord& a, const GroupWord& b) {
  GroupWord out;
  out.letters = a.letters;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  std::vector<int> n1 = permute_shifts(b.letters, a.shifts);
  const std::vector<int>& n2 = b.shifts;
  if (n1.empty()) {
    out.shifts = n2;
  } else if (n2.empty()) {
    out.shifts = n1;
  } else {
    if (n1.size() != n2.size()) throw std::invalid_argument("shift vectors of different length");
    out.shifts.resize(n1.size());
    for (std::size_t k = 0; k < n1.size(); ++k) out.shifts[k] = n1[k] + n2[k];
  }
  return out;
}

// "s1 s2^-1 s3^2"; "e" or an empty string is the identity.
inline std::vector<BraidLetter> parse_braid_word(const std::string& text) {
  std::vector<BraidLetter> out;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    if (tok == "e" || tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 's') throw std::invalid_argument("bad braid letter: " + tok);
    const auto caret = tok.find('^');
    const std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad braid letter: " + tok);
    int power = 1;
    if (caret != std::string::npos) {
      const std::string p = tok.substr(caret + 1);
      const std::string digits = (!p.empty() && p[0] == '-') ? p.substr(1) : p;
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad braid exponent: " + tok);
      power = std::stoi(p);
    }
    const int i = std::stoi(idx);
    for (int k = 0; k < std::abs(power); ++k) out.push_back({i, power < 0});
  }
  return out;
}

inline std::vector<int> parse_shift_vector(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    while (used < tok.size() && tok[used] == ' ') ++used;
    if (used != tok.size()) throw std::invalid_argument("bad shift entry: " + tok);
    out.push_back(v);
  }
  return out;
}

inline std::string to_string(const GroupWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(l.index) + (l.inverse ? "^-1" : "");
  }
  if (out.empty()) out = "e";
  if (!w.shifts.empty()) {
    out += " [";
    for (std::size_t k = 0; k < w.shifts.size(); ++k) out += (k ? "," : "") + std::to_string(w.shifts[k]);
    out += "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Collections

using RhomTable = std::vector<std::vector<GradedDims>>;

inline RhomTable compute_rhom_table(const std::vector<ProjComplex>& objects) {
  const std::size_t n = objects.size();
  RhomTable t(n, std::vector<GradedDims>(n));
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[i][j] = rhom_dims(objects[i], objects[j]);
    return t;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = rhom_dims(objects[i], objects[j]);
    }));
  for (auto& j : jobs) j.get();
  return t;
}

struct ExcCollection {
  int mu = 1;
  std::vector<ProjComplex> objects;
  RhomTable rhom_cache;
  std::string provenance;
  bool from_standard = false;  // obtained from E_P by mutations, shifts and twists

  const ProjComplex& operator[](std::size_t k) const { return objects.at(k); }
  std::size_t size() const { return objects.size(); }
};

inline ExcCollection make_collection(int mu, std::vector<ProjComplex> objects, std::string provenance, bool from_standard) {
  ExcCollection e{mu, std::move(objects), {}, std::move(provenance), from_standard};
  e.rhom_cache = compute_rhom_table(e.objects);
  return e;
}

inline const RhomTable& rhom_table(const ExcCollection& e) { return e.rhom_cache; }

// E_P = (P(mu), ..., P(1)).
inline ExcCollection standard_collection(const PathAlgebra& a) {
  std::vector<ProjComplex> objs;
  for (int i = a.mu(); i >= 1; --i) objs.push_back(ProjComplex::indecomposable(a.mu(), i));
  return make_collection(a.mu(), std::move(objs), "E_P", true);
}

struct Verdict {
  bool holds = true;
  std::string witness;  // empty when holds
};

inline Verdict is_exceptional_collection(const ExcCollection& e) {
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (e.rhom_cache[i][i] != GradedDims{{0, 1}})
      return {false, "RHom(E" + std::to_string(i + 1) + ", E" + std::to_string(i + 1) + ") = " + to_string(e.rhom_cache[i][i])};
    for (std::size_t j = 0; j < i; ++j)
      if (!e.rhom_cache[i][j].empty())
        return {false, "RHom(E" + std::to_string(i + 1) + ", E" + std::to_string(j + 1) + ") = " + to_string(e.rhom_cache[i][j])};
  }
  return {};
}

inline Verdict is_strong(const ExcCollection& e) {
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [d, k] : e.rhom_cache[i][j].entries())
        if (d != 0)
          return {false, "RHom(E" + std::to_string(i + 1) + ", E" + std::to_string(j + 1) + ") = " + to_string(e.rhom_cache[i][j])};
  return {};
}

// The classes of a full exceptional collection form a basis of K_0 = Z^mu.
inline bool k_theory_unimodular(const ExcCollection& e) {
  Matrix m(static_cast<std::size_t>(e.mu), e.size());
  for (std::size_t c = 0; c < e.size(); ++c) {
    const auto k = k_class(e.objects[c].embedded(e.mu));
    for (std::size_t r = 0; r < k.size(); ++r) m(r, c) = static_cast<long>(k[r]);
  }
  if (m.rows() != m.cols()) return false;
  const Rational d = determinant(m);
  return d == 1 || d == -1;
}

// Fullness is not decided intrinsically: it is inherited from E_P and
// sanity-checked in K-theory.
inline Verdict is_full(const ExcCollection& e) {
  if (!e.from_standard) return {false, "not derived from E_P"};
  if (static_cast<int>(e.size()) != e.mu) return {false, "collection has the wrong length"};
  if (!k_theory_unimodular(e)) return {false, "classes do not form a basis of K_0"};
  return {};
}

inline ExcCollection shifted(const ExcCollection& e, const std::vector<int>& n) {
  if (n.empty()) return e;
  if (n.size() != e.size()) throw std::invalid_argument("shift vector length mismatch");
  ExcCollection out = e;
  for (std::size_t k = 0; k < n.size(); ++k) out.objects[k] = shift(e.objects[k], n[k]);
  // RHom(X[a], Y[b]) = RHom(X, Y)[b - a].
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j) out.rhom_cache[i][j] = e.rhom_cache[i][j].translated(n[i] - n[j]);
  return out;
}

inline ExcCollection act(const ExcCollection& e, const GroupWord& w) {
  w.validate(e.mu);
  if (static_cast<int>(e.size()) != e.mu) throw std::invalid_argument("collection length must be mu");
  ExcCollection cur = e;
  for (const auto& l : w.letters) {
    const auto i = static_cast<std::size_t>(l.index - 1);
    std::vector<ProjComplex> objs = cur.objects;
    if (!l.inverse) {
      objs[i] = left_mutation(cur.objects[i], cur.objects[i + 1]);
      objs[i + 1] = cur.objects[i];
    } else {
      objs[i] = cur.objects[i + 1];
      objs[i + 1] = right_mutation(cur.objects[i], cur.objects[i + 1]);
    }
    cur = make_collection(cur.mu, std::move(objs), cur.provenance, cur.from_standard);
    const Verdict v = is_exceptional_collection(cur);
    if (!v.holds) throw std::logic_error("mutation broke exceptionality: " + v.witness);
  }
  cur = shifted(cur, w.shifts);
  cur.provenance = e.provenance + " * " + to_string(w);
  return cur;
}

// Componentwise isomorphism of collections.
inline bool collections_iso(const ExcCollection& a, const ExcCollection& b, std::uint64_t seed = 0) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!is_derived_iso(a.objects[k], b.objects[k], seed)) return false;
  return true;
}

// E'_k = (P(mu), ..., P(5), T^k P(4), ..., T^k P(1)), T the twist by S+.
// Hom spaces among P(1..4) do not depend on mu, so the twists are computed in
// the algebra with four vertices and read in the larger one.
inline ExcCollection twisted_collection(const PathAlgebra& a, int k) {
  const int mu = a.mu();
  if (mu <= 3) throw std::invalid_argument("twisted collections need mu >= 4");
  const PathAlgebra small(4);
  const ProjComplex sp = from_module(fixture_s_plus(small));
  std::vector<ProjComplex> objs;
  for (int i = mu; i >= 5; --i) objs.push_back(ProjComplex::indecomposable(mu, i));
  for (int i = 4; i >= 1; --i) objs.push_back(twist_power(sp, k, ProjComplex::indecomposable(4, i)).embedded(mu));
  return make_collection(mu, std::move(objs), "E'_" + std::to_string(k), true);
}

// ---------------------------------------------------------------------------
// Reaching a strong collection by shifts alone

struct ShiftDecision {
  bool achievable = false;
  std::vector<int> shifts;                         // when achievable
  std::optional<std::pair<int, int>> multi_degree; // 1-based positions whose RHom spans several degrees
  std::vector<int> cycle;                          // 1-based positions of an inconsistent cycle
  std::string witness;
};

// Shifting by n moves a degree-d class of RHom(E_i, E_j) to degree
// d - (n_j - n_i), so strongness needs n_j - n_i = d(i, j) on every nonzero
// entry. Constraints are propagated with a weighted union-find.
inline ShiftDecision shift_strongness_obstruction(const ExcCollection& e) {
  const std::size_t n = e.size();
  ShiftDecision out;
  std::vector<std::size_t> parent(n);
  std::vector<long> offset(n, 0);  // n_x - n_parent
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::vector<std::pair<std::size_t, long>>> forest(n);  // accepted edges, for witnesses

  auto find = [&](std::size_t x) {
    long acc = 0;
    std::size_t r = x;
    while (parent[r] != r) {
      acc += offset[r];
      r = parent[r];
    }
    // Path compression.
    std::size_t y = x;
    long rest = acc;
    while (parent[y] != y) {
      const std::size_t next = parent[y];
      const long o = offset[y];
      parent[y] = r;
      offset[y] = rest;
      rest -= o;
      y = next;
    }
    return std::make_pair(r, acc);
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const GradedDims& g = e.rhom_cache[i][j];
      if (g.empty()) continue;
      if (g.entries().size() > 1) {
        out.multi_degree = std::make_pair(static_cast<int>(i + 1), static_cast<int>(j + 1));
        out.witness = "RHom(E" + std::to_string(i + 1) + ", E" + std::to_string(j + 1) + ") = " + to_string(g) +
                      " is not concentrated in one degree";
        return out;
      }
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const GradedDims& g = e.rhom_cache[i][j];
      if (g.empty()) continue;
      const long d = g.entries().begin()->first;  // want n_j - n_i = d
      auto [ri, oi] = find(i);
      auto [rj, oj] = find(j);
      if (ri != rj) {
        // n_rj - n_ri = d + o_i - o_j.
        parent[rj] = ri;
        offset[rj] = d + oi - oj;
        forest[i].emplace_back(j, d);
        forest[j].emplace_back(i, -d);
        continue;
      }
      if (oj - oi == d) continue;
      // Inconsistent: the tree path from j back to i closes a bad cycle.
      std::vector<std::size_t> prev(n, n);
      std::queue<std::size_t> q;
      q.push(i);
      prev[i] = i;
      while (!q.empty()) {
        const std::size_t x = q.front();
        q.pop();
        for (const auto& [y, w] : forest[x])
          if (prev[y] == n) {
            prev[y] = x;
            q.push(y);
          }
      }
      std::vector<int> cyc;
      for (std::size_t x = j; x != i; x = prev[x]) cyc.push_back(static_cast<int>(x + 1));
      cyc.push_back(static_cast<int>(i + 1));
      std::reverse(cyc.begin(), cyc.end());
      out.cycle = cyc;
      out.witness = "constraints around positions";
      for (int c : cyc) out.witness += " " + std::to_string(c);
      out.witness += " are inconsistent";
      return out;
    }

  out.achievable = true;
  for (std::size_t x = 0; x < n; ++x) out.shifts.push_back(static_cast<int>(find(x).second));
  return out;
}

}  // namespace gentle
