#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gentle {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

}  // namespace gentle
