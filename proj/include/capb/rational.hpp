#pragma once

#include <gmpxx.h>

#include <string>

namespace capb {

// Exact arbitrary-precision arithmetic.  mpq_class already maintains the
// invariants the library relies on (always reduced, positive denominator), so
// it is used directly under these names.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline BigInt floor_rational(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt ceil_rational(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline std::string to_string(const Rational& q) {
  return q.get_str();
}

}  // namespace capb
