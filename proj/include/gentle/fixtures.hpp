#pragma once

// Explicit module maps transcribed from the source displays, kept apart from
// anything the library derives. A fixture is a sequence of modules joined by
// maps; a map is either given vertex by vertex or named by a label:
//
//   "b3"         the map of projectives P(4) -> P(3) given by that path
//   "~b3"        its image under the Nakayama functor, I(4) -> I(3)
//   "canonical"  the unique map up to scalar (Hom must be one-dimensional)
//
// A map with both a label and matrices uses the matrices; selfcheck compares
// the two.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gentle/dsl.hpp"
#include "gentle/fixture_data.hpp"
#include "gentle/functors.hpp"
#include "gentle/json_io.hpp"

namespace gentle {

struct FixtureMap {
  std::string label;
  std::map<int, Matrix> at;  // nonzero vertices only
};

struct Fixture {
  std::string name;
  std::string anchor;
  int mu = 4;
  std::vector<std::string> objects;
  std::vector<FixtureMap> maps;
};

inline std::vector<Fixture> load_fixtures(const std::string& text = data::fixtures_json) {
  const Json doc = Json::parse(text);
  if (doc.at("schema").get<int>() != kJsonSchema) throw std::runtime_error("unsupported fixture schema");
  std::vector<Fixture> out;
  for (const auto& f : doc.at("fixtures")) {
    Fixture fx{f.at("name"), f.at("anchor"), f.at("mu"), f.at("objects"), {}};
    for (const auto& m : f.at("maps")) {
      FixtureMap fm{m.at("label"), {}};
      if (m.contains("at"))
        for (const auto& [v, rows] : m.at("at").items()) fm.at[std::stoi(v)] = matrix_from_json(rows);
      fx.maps.push_back(std::move(fm));
    }
    if (fx.maps.size() + 1 != fx.objects.size()) throw std::runtime_error("fixture " + fx.name + ": one map per gap expected");
    out.push_back(std::move(fx));
  }
  return out;
}

inline const Fixture& find_fixture(const std::vector<Fixture>& all, const std::string& name) {
  for (const auto& f : all)
    if (f.name == name) return f;
  throw std::out_of_range("no fixture named " + name);
}

namespace fixture_detail {

// Single indecomposable projective or injective named "P(i)" / "I(i)".
inline std::optional<std::pair<char, int>> indecomposable_name(const std::string& s) {
  if (s.size() < 4 || (s[0] != 'P' && s[0] != 'I') || s[1] != '(' || s.back() != ')') return std::nullopt;
  try {
    return std::make_pair(s[0], std::stoi(s.substr(2, s.size() - 3)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace fixture_detail

// The map a label stands for, or nullopt when the label is empty.
inline std::optional<RepMap> labelled_map(const std::string& label, const std::string& src_name, const Rep& src,
                                          const std::string& dst_name, const Rep& dst) {
  if (label.empty()) return std::nullopt;
  if (label == "canonical") {
    const auto homs = hom_space(src, dst);
    if (homs.size() != 1) throw std::runtime_error("canonical map needs a one-dimensional Hom space");
    return homs[0];
  }
  const bool dual = label[0] == '~';
  const auto s = fixture_detail::indecomposable_name(src_name);
  const auto t = fixture_detail::indecomposable_name(dst_name);
  const char kind = dual ? 'I' : 'P';
  if (!s || !t || s->first != kind || t->first != kind)
    throw std::runtime_error("label " + label + " needs indecomposable " + std::string(1, kind) + " endpoints");
  const ParsedCombo p = parse_path_combo(dual ? label.substr(1) : label);
  if (p.from != t->second || p.to != s->second) throw std::runtime_error("label " + label + " does not join its endpoints");
  PathMatrix d(1, 1);
  d(0, 0) = p.combo;
  RepMap f{src, dst, {}};
  for (int v = 1; v <= src.mu; ++v)
    f.at.push_back(dual ? nakayama_at(d, {s->second}, {t->second}, v) : evaluate_at(d, {s->second}, {t->second}, v));
  return f;
}

inline RepMap literal_map(const FixtureMap& m, const Rep& src, const Rep& dst) {
  RepMap f = zero_map(src, dst);
  for (const auto& [v, mat] : m.at) {
    if (v < 1 || v > src.mu) throw std::runtime_error("fixture vertex out of range");
    const auto& slot = f.vertex(v);
    if (mat.rows() != slot.rows() || mat.cols() != slot.cols())
      throw std::runtime_error("fixture matrix at vertex " + std::to_string(v) + " has the wrong shape");
    f.at[static_cast<std::size_t>(v - 1)] = mat;
  }
  return f;
}

struct ResolvedFixture {
  std::vector<Rep> objects;
  std::vector<RepMap> maps;
};

inline ResolvedFixture resolve_fixture(const Fixture& fx) {
  ResolvedFixture r;
  for (const auto& name : fx.objects) r.objects.push_back(parse_module(name, fx.mu));
  for (std::size_t k = 0; k < fx.maps.size(); ++k) {
    const auto& m = fx.maps[k];
    const Rep& s = r.objects[k];
    const Rep& t = r.objects[k + 1];
    if (!m.at.empty() || m.label.empty()) {
      r.maps.push_back(literal_map(m, s, t));
    } else {
      r.maps.push_back(*labelled_map(m.label, fx.objects[k], s, fx.objects[k + 1], t));
    }
  }
  return r;
}

struct ExactnessReport {
  bool exact = true;
  std::vector<std::string> problems;
};

// 0 -> X_0 -> X_1 -> ... -> X_n -> 0 is exact.
inline ExactnessReport check_exact_sequence(const ResolvedFixture& r) {
  ExactnessReport out;
  auto flag = [&](std::string s) {
    out.exact = false;
    out.problems.push_back(std::move(s));
  };
  const int mu = r.objects.front().mu;
  for (std::size_t k = 0; k < r.maps.size(); ++k)
    if (!intertwines(r.maps[k])) flag("map " + std::to_string(k + 1) + " is not a module map");
  for (std::size_t k = 0; k + 1 < r.maps.size(); ++k)
    for (int v = 1; v <= mu; ++v)
      if (!(r.maps[k + 1].vertex(v) * r.maps[k].vertex(v)).is_zero())
        flag("maps " + std::to_string(k + 1) + "," + std::to_string(k + 2) + " do not compose to zero at vertex " +
             std::to_string(v));
  for (std::size_t k = 0; k < r.objects.size(); ++k)
    for (int v = 1; v <= mu; ++v) {
      const std::size_t in = k > 0 ? rank(r.maps[k - 1].vertex(v)) : 0;
      const std::size_t outr = k < r.maps.size() ? rank(r.maps[k].vertex(v)) : 0;
      if (in + outr != r.objects[k].dim(v))
        flag("not exact at term " + std::to_string(k + 1) + ", vertex " + std::to_string(v));
    }
  return out;
}

struct SelfcheckLine {
  std::string fixture;
  std::string item;
  bool ok = true;
  std::string detail;
};

// Recomputes what the library can derive and diffs it against the stored data:
// labelled literal maps against their labels, and the stored projective
// resolutions against the computed minimal ones.
inline std::vector<SelfcheckLine> fixtures_selfcheck(const std::vector<Fixture>& all) {
  std::vector<SelfcheckLine> out;
  for (const auto& fx : all) {
    ResolvedFixture r;
    try {
      r = resolve_fixture(fx);
    } catch (const std::exception& e) {
      out.push_back({fx.name, "load", false, e.what()});
      continue;
    }
    out.push_back({fx.name, "load", true, std::to_string(fx.maps.size()) + " maps"});
    for (std::size_t k = 0; k < fx.maps.size(); ++k) {
      const auto& m = fx.maps[k];
      if (m.at.empty() || m.label.empty() || m.label == "canonical") continue;
      const auto derived = labelled_map(m.label, fx.objects[k], r.objects[k], fx.objects[k + 1], r.objects[k + 1]);
      bool same = true;
      std::string where;
      for (int v = 1; v <= fx.mu; ++v)
        if (!(derived->vertex(v) == r.maps[k].vertex(v))) {
          same = false;
          where += " " + std::to_string(v);
        }
      out.push_back({fx.name, "map " + m.label, same, same ? "matches the label" : "differs at vertex" + where});
    }

    // A sequence ending in a module after projectives is a resolution; compare
    // it with the computed one, path labels up to nonzero scalars.
    const auto last = fx.objects.back();
    if (fx.objects.size() >= 2 && fixture_detail::indecomposable_name(fx.objects.front()) &&
        fixture_detail::indecomposable_name(fx.objects.front())->first == 'P' && !fixture_detail::indecomposable_name(last)) {
      const ProjComplex res = from_module(r.objects.back());
      bool same = res.lo() == -static_cast<int>(fx.maps.size() - 1) && res.hi() == 0;
      for (std::size_t k = 0; same && k + 1 < fx.objects.size(); ++k) {
        const int deg = -static_cast<int>(fx.maps.size() - 1) + static_cast<int>(k);
        const auto name = fixture_detail::indecomposable_name(fx.objects[k]);
        same = name && res.term(deg) == std::vector<int>{name->second};
        if (same && k + 1 < fx.maps.size()) {
          const ParsedCombo p = parse_path_combo(fx.maps[k].label);
          const PathCombo& c = res.diff(deg)(0, 0);
          // Proportional to the labelled path.
          same = rank(Matrix::from_rows({coordinates(c, p.from, p.to), coordinates(p.combo, p.from, p.to)}, 2)) == 1;
        }
      }
      out.push_back({fx.name, "resolution", same, same ? "agrees with the computed minimal resolution" : "differs from the computed minimal resolution"});
    }
  }
  return out;
}

}  // namespace gentle
