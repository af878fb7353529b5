#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "symcone/errors.hpp"

namespace symcone {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense integer vector; position k holds coordinate k + 1.
using ZVector = std::vector<Integer>;
/// Dense rational vector; position k holds coordinate k + 1.
using QVector = std::vector<Rational>;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// Parses "3", "-1" or "p/q". Anything else (decimals, symbols, "sqrt(2)")
/// is rejected, so irrational data cannot enter the library.
inline Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
  const std::string s(text);
  if (!std::regex_match(s, pattern)) {
    throw ParseError("not an exact rational (expected integer or p/q): \"" + s + "\"");
  }
  Rational q;
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    q = Rational(Integer(s));
  } else {
    Integer den(s.substr(slash + 1));
    if (den == 0) {
      throw ParseError("zero denominator in \"" + s + "\"");
    }
    q = Rational(Integer(s.substr(0, slash)), den);
    q.canonicalize();
  }
  return q;
}

/// Lowest-terms text form: "3", "-1", "1/2".
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Converts to int64, throwing ResourceError when out of range.
inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) {
    throw ResourceError("integer exceeds machine range: " + z.get_str());
  }
  return static_cast<std::int64_t>(z.get_si());
}

} // namespace symcone
