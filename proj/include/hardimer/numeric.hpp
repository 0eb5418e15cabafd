#pragma once

#include <gmpxx.h>

#include <string>

namespace hardimer {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Renders a rational as "p/q", always with an explicit denominator ("1/1").
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Canonical num/den.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational parse_rational(const std::string& text) {
  Rational q(text);
  q.canonicalize();
  return q;
}

inline BigInt big_pow(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

template <class Scalar>
Scalar pow_ui(const Scalar& base, unsigned long exponent) {
  Scalar acc = 1;
  Scalar b = base;
  while (exponent > 0) {
    if (exponent & 1UL) acc *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return acc;
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

}  // namespace hardimer
