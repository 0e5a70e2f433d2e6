#pragma once

// Object expressions for the command line.
//
//   atoms        P(i) P4 I(i) I4 Simp(i) S+ S- Sph(i) S1
//   complexes    res(X)  shift(X, n)  X (+) Y  cone(P4 -(a3+b3)-> P3)
//   functors     twist(S, k, X)  Lmut(E, F)  Rmut(E, F)
//   collections  EP  Eprime(k)  (X, Y, ...)
//
// Modules stay modules until an operation needs a complex, at which point
// they are replaced by their minimal projective resolution.

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentle/braid.hpp"
#include "gentle/complex.hpp"
#include "gentle/functors.hpp"
#include "gentle/rep.hpp"

namespace gentle {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), position(pos) {}
};

struct Value {
  std::optional<Rep> module;
  ProjComplex complex;
  std::optional<std::vector<ProjComplex>> collection;

  bool is_collection() const { return collection.has_value(); }
};

namespace dsl_detail {

class Parser {
 public:
  Parser(const std::string& text, int mu) : s_(text), mu_(mu), algebra_(mu) {}

  Value parse_all() {
    Value v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected input '" + s_.substr(pos_) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& tok) {
    if (!accept(tok)) fail("expected '" + tok + "'");
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stoi(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  bool next_is_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  // "(i)" or a directly attached "i".
  int index_argument() {
    if (next_is_digit()) return integer();
    expect("(");
    const int i = integer();
    expect(")");
    return i;
  }

  int vertex(int i) const {
    if (i < 1 || i > mu_) throw ParseError("vertex " + std::to_string(i) + " outside 1.." + std::to_string(mu_), pos_);
    return i;
  }

  static ProjComplex as_complex(const Value& v) {
    if (v.is_collection()) throw std::invalid_argument("a collection is not an object");
    return v.complex;
  }

  Value object(ProjComplex c) const { return Value{std::nullopt, std::move(c), std::nullopt}; }
  Value module(Rep m) const {
    ProjComplex c = from_module(m);
    return Value{std::move(m), std::move(c), std::nullopt};
  }

  Value sum() {
    Value acc = term();
    while (accept("(+)")) {
      const std::size_t at = pos_;
      Value rhs = term();
      if (acc.is_collection() || rhs.is_collection()) throw ParseError("cannot add collections", at);
      if (acc.module && rhs.module) {
        acc = module(direct_sum(*acc.module, *rhs.module).sum);
      } else {
        acc = object(direct_sum(acc.complex, rhs.complex));
      }
    }
    return acc;
  }

  Value sign_object(bool plus) {
    if (mu_ < 4) fail("S+ and S- need mu >= 4");
    const PathAlgebra small(4);
    Rep m = plus ? fixture_s_plus(small) : fixture_s_minus(small);
    if (mu_ == 4) return module(std::move(m));
    return object(from_module(m).embedded(mu_));
  }

  Value term() {
    skip();
    if (accept("(")) {
      Value first = sum();
      if (accept(")")) return first;
      std::vector<ProjComplex> items{as_complex(first)};
      while (accept(",")) items.push_back(as_complex(sum()));
      expect(")");
      return Value{std::nullopt, ProjComplex(mu_), std::move(items)};
    }
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name.empty()) fail("expected an object");

    if (name == "P") return module(projective(algebra_, vertex(index_argument())));
    if (name == "I") return module(injective(algebra_, vertex(index_argument())));
    if (name == "Simp") return module(simple(algebra_, vertex(index_argument())));
    if (name == "S") {
      if (accept("+")) return sign_object(true);
      if (accept("-")) return sign_object(false);
      return sphere(index_argument());
    }
    if (name == "Sph") return sphere(index_argument());
    if (name == "EP") {
      return Value{std::nullopt, ProjComplex(mu_), standard_collection(algebra_).objects};
    }
    if (name == "Eprime") {
      expect("(");
      const int k = integer();
      expect(")");
      if (mu_ < 4) fail("Eprime needs mu >= 4");
      return Value{std::nullopt, ProjComplex(mu_), twisted_collection(algebra_, k).objects};
    }
    if (name == "res") {
      expect("(");
      Value v = sum();
      expect(")");
      return object(as_complex(v));
    }
    if (name == "shift") {
      expect("(");
      Value v = sum();
      expect(",");
      const int n = integer();
      expect(")");
      return object(shift(as_complex(v), n));
    }
    if (name == "cone") return cone_expr();
    if (name == "twist") {
      expect("(");
      const ProjComplex s = as_complex(sum());
      expect(",");
      const int k = integer();
      expect(",");
      const ProjComplex x = as_complex(sum());
      expect(")");
      if (s.is_zero()) fail("twist by the zero object");
      return object(twist_power(s, k, x));
    }
    if (name == "Lmut" || name == "Rmut") {
      expect("(");
      const ProjComplex e = as_complex(sum());
      expect(",");
      const ProjComplex f = as_complex(sum());
      expect(")");
      return object(name == "Lmut" ? left_mutation(e, f) : right_mutation(e, f));
    }
    pos_ = start;
    fail("unknown name '" + name + "'");
  }

  Value sphere(int i) {
    if (i < 1 || i >= mu_) fail("S_i needs 1 <= i < mu");
    return object(spherical_s(mu_, i));
  }

  // cone(X -(combo)-> Y) with X = P(j), Y = P(i) and combo a sum of paths i -> j.
  Value cone_expr() {
    expect("(");
    const std::size_t at_source = pos_;
    const ProjComplex x = as_complex(sum());
    expect("-(");
    const std::size_t close = s_.find(")->", pos_);
    if (close == std::string::npos) fail("expected ')->'");
    const std::string text = s_.substr(pos_, close - pos_);
    const std::size_t at_combo = pos_;
    pos_ = close + 3;
    const std::size_t at_target = pos_;
    const ProjComplex y = as_complex(sum());
    expect(")");

    auto single = [](const ProjComplex& c, std::size_t at) {
      if (c.is_zero() || c.lo() != c.hi() || c.term(c.lo()).size() != 1)
        throw ParseError("cone endpoints must be indecomposable projectives", at);
      return c.term(c.lo())[0];
    };
    const int j = single(x, at_source);
    const int i = single(y, at_target);
    if (x.lo() != y.lo()) throw ParseError("cone endpoints must sit in the same degree", at_target);
    ParsedCombo p;
    try {
      p = parse_path_combo(text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at_combo);
    }
    if (p.from != i || p.to != j)
      throw ParseError("map must be a sum of paths " + std::to_string(i) + " -> " + std::to_string(j), at_combo);
    PathMatrix f(1, 1);
    f(0, 0) = p.combo;
    ChainMap m{x, y, {{x.lo(), f}}};
    return object(cone(m));
  }

  std::string s_;
  std::size_t pos_ = 0;
  int mu_;
  PathAlgebra algebra_;
};

}  // namespace dsl_detail

inline Value parse_value(const std::string& text, int mu) {
  try {
    return dsl_detail::Parser(text, mu).parse_all();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what(), 0);
  }
}

inline ProjComplex parse_object(const std::string& text, int mu) {
  Value v = parse_value(text, mu);
  if (v.is_collection()) throw ParseError("expected an object, got a collection", 0);
  return v.complex;
}

inline std::vector<ProjComplex> parse_collection(const std::string& text, int mu) {
  Value v = parse_value(text, mu);
  if (!v.is_collection()) throw ParseError("expected a collection", 0);
  return *v.collection;
}

// A module literal: atoms that denote modules, joined by (+).
inline Rep parse_module(const std::string& text, int mu) {
  Value v = parse_value(text, mu);
  if (!v.module) throw ParseError("expression does not denote a module", 0);
  return *v.module;
}

}  // namespace gentle
