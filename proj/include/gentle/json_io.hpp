#pragma once

// JSON encodings. Degrees are string keys, rationals are "p/q" strings
// (integers print without a denominator), and ordered objects keep output
// byte-stable across runs.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gentle/braid.hpp"
#include "gentle/complex.hpp"
#include "gentle/rep.hpp"

namespace gentle {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a string or an integer");
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// `cols` is needed when there are no rows.
inline Matrix matrix_from_json(const Json& j, std::size_t cols_if_empty = 0) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  if (j.empty()) return Matrix(0, cols_if_empty);
  const std::size_t cols = j[0].size();
  Matrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

inline Json to_json(const GradedDims& g) {
  Json o = Json::object();
  for (const auto& [d, n] : g.entries()) o[std::to_string(d)] = n;
  return o;
}

inline GradedDims graded_dims_from_json(const Json& j) {
  GradedDims g;
  for (const auto& [k, v] : j.items()) g.add(std::stoi(k), v.get<int>());
  return g;
}

inline Json to_json(const Rep& m) {
  Json o;
  o["mu"] = m.mu;
  o["dims"] = m.dims;
  Json a = Json::array(), b = Json::array();
  for (int i = 1; i < m.mu; ++i) {
    a.push_back(to_json(m.arrow(PathKind::alpha, i)));
    b.push_back(to_json(m.arrow(PathKind::beta, i)));
  }
  o["alpha"] = std::move(a);
  o["beta"] = std::move(b);
  return o;
}

inline Rep rep_from_json(const Json& j) {
  const int mu = j.at("mu").get<int>();
  Rep m = zero_arrows_rep(mu, j.at("dims").get<std::vector<std::size_t>>());
  for (int i = 1; i < mu; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    m.arrow(PathKind::alpha, i) = matrix_from_json(j.at("alpha").at(k), m.dim(i));
    m.arrow(PathKind::beta, i) = matrix_from_json(j.at("beta").at(k), m.dim(i));
  }
  validate(m);
  return m;
}

inline Json to_json(const ProjComplex& x) {
  Json o;
  o["mu"] = x.mu();
  Json terms = Json::object(), summands = Json::object(), diffs = Json::object();
  for (int n = x.lo(); n <= x.hi(); ++n) {
    const auto key = std::to_string(n);
    terms[key] = x.multiplicity(n);
    summands[key] = x.term(n);
    if (n == x.hi()) continue;
    const auto& d = x.diff(n);
    Json rows = Json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(to_string(d(r, c), x.term(n + 1)[r], x.term(n)[c]));
      rows.push_back(std::move(row));
    }
    diffs[key] = std::move(rows);
  }
  o["terms"] = std::move(terms);
  o["summands"] = std::move(summands);
  o["differentials"] = std::move(diffs);
  return o;
}

inline ProjComplex complex_from_json(const Json& j) {
  ComplexBuilder b{j.at("mu").get<int>(), {}, {}};
  for (const auto& [k, v] : j.at("summands").items()) b.terms[std::stoi(k)] = v.get<std::vector<int>>();
  for (const auto& [k, v] : j.at("differentials").items()) {
    const int n = std::stoi(k);
    const auto& src = b.terms.at(n);
    const auto& dst = b.terms.at(n + 1);
    PathMatrix d(dst.size(), src.size());
    if (v.size() != dst.size()) throw std::invalid_argument("differential row count mismatch in degree " + k);
    for (std::size_t r = 0; r < dst.size(); ++r) {
      if (v[r].size() != src.size()) throw std::invalid_argument("differential column count mismatch in degree " + k);
      for (std::size_t c = 0; c < src.size(); ++c) {
        const auto text = v[r][c].get<std::string>();
        if (text == "0") continue;
        const ParsedCombo p = parse_path_combo(text);
        if (p.from != dst[r] || p.to != src[c])
          throw std::invalid_argument("entry " + text + " does not join its summands");
        d(r, c) = p.combo;
      }
    }
    b.diffs[n] = std::move(d);
  }
  return b.build();
}

// (row, col) -> {degree: dim}, 1-based keys "i,j".
inline Json to_json(const RhomTable& t) {
  Json o = Json::object();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) o[std::to_string(i + 1) + "," + std::to_string(j + 1)] = to_json(t[i][j]);
  return o;
}

// Human-readable complex: one line per degree.
inline std::string format_complex(const ProjComplex& x) {
  if (x.is_zero()) return "0\n";
  std::string out;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    out += "deg " + std::to_string(n) + ": ";
    const auto& t = x.term(n);
    for (std::size_t k = 0; k < t.size(); ++k) out += (k ? " + P(" : "P(") + std::to_string(t[k]) + ")";
    if (n < x.hi() && !x.diff(n).is_zero()) {
      out += "   d = [";
      const auto& d = x.diff(n);
      for (std::size_t r = 0; r < d.rows(); ++r) {
        out += r ? "; " : "";
        for (std::size_t c = 0; c < d.cols(); ++c)
          out += (c ? ", " : "") + to_string(d(r, c), x.term(n + 1)[r], t[c]);
      }
      out += "]";
    }
    out += "\n";
  }
  return out;
}

inline std::string format_table(const RhomTable& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t[i].size(); ++j) out += (j ? "  " : "") + to_string(t[i][j]);
    out += "\n";
  }
  return out;
}

}  // namespace gentle
