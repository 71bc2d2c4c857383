#pragma once

#include <gmpxx.h>

#include <string>

namespace engel {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num);
  q /= den;
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace engel
