#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace eqlef {

// Arbitrary-precision scalars. Everything downstream is a sign, an integer
// coefficient, or an exact lattice question, so there is no floating point
// anywhere in the engine.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int sign_of(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sign_of(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline Int to_integer(const Rat& x) {
  if (!is_integer(x)) throw Error("expected an integer, got " + x.str());
  return numerator(x);
}

// Serialized as "p/q", or "p" when q = 1.
inline std::string rat_str(const Rat& x) {
  if (is_integer(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw Error("cannot parse rational '" + s + "'");
  }
}

}  // namespace eqlef
