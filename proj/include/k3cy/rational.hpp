#pragma once
// Exact scalar layer: arbitrary-precision integers and rationals.
// Backed by GMP (gmpxx); mpq_class keeps values canonical (gcd-reduced,
// positive denominator) after every arithmetic operation.
#include <gmpxx.h>

#include <numeric>
#include <string>

#include "k3cy/errors.hpp"

namespace k3cy {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return x == 0; }

// Accepts "a", "-a", "a/b" with integer a, b.
inline Rational q_from_string(const std::string& s) {
  try {
    Rational q(s);
    if (q.get_den() == 0) throw parse_error("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw parse_error("not a rational literal: " + s);
  }
}

inline std::string q_to_string(const Rational& x) { return x.get_str(); }

// Canonicalized num/den constructor (mpq_class(a, b) alone does not reduce).
inline Rational q_ratio(long num, long den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double q_to_double(const Rational& x) { return x.get_d(); }

inline bool q_is_integer(const Rational& x) { return x.get_den() == 1; }

inline long q_to_long(const Rational& x) {
  if (!q_is_integer(x) || !x.get_num().fits_slong_p())
    throw domain_error("rational is not a machine integer: " + x.get_str());
  return x.get_num().get_si();
}

inline Integer q_floor(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

inline Integer q_ceil(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

inline Rational q_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw domain_error("0 raised to a negative power");
    return Rational(0);
  }
  Rational b = e < 0 ? Rational(1) / base : base;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

// Representative of x mod 1 in [0, 1).
inline Rational q_mod_one(const Rational& x) {
  Rational r = x - Rational(q_floor(x));
  return r;
}

// Representative of x mod 2 in [0, 2).
inline Rational q_mod_two(const Rational& x) {
  Rational h = x / 2;
  Rational r = h - Rational(q_floor(h));
  return r * 2;
}

}  // namespace k3cy
