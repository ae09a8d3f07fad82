#pragma once

#include <mpfr.h>

#include "capb/rational.hpp"

namespace capb {

// Outward-rounded interval [lo, hi] over MPFR floats: every operation rounds
// the lower endpoint down and the upper endpoint up, so the true real value
// of an expression is always contained in its computed interval.  Endpoints
// may be infinite; an infinite enclosure is still sound, just uninformative,
// and callers refine by re-evaluating at higher precision.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval& operator=(const Interval& o);
  ~Interval();

  static Interval from_rational(const Rational& q, mpfr_prec_t prec);
  static Interval from_long(long v, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);
  static Interval entire(mpfr_prec_t prec);  // (-inf, +inf)

  mpfr_prec_t precision() const { return prec_; }
  bool finite() const;
  bool strictly_positive() const;  // lo > 0
  bool strictly_negative() const;  // hi < 0
  bool contains_zero() const;

  // Certain comparisons against exact rationals (false = "cannot certify at
  // this width", not "the opposite holds").
  bool certainly_le(const Rational& q) const;  // hi <= q
  bool certainly_ge(const Rational& q) const;  // lo >= q

  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up
  double width() const;

  // Endpoint integer parts as exact big integers; require finite().
  BigInt floor_lo() const;
  BigInt floor_hi() const;
  BigInt ceil_lo() const;
  BigInt ceil_hi() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

  friend Interval cos(const Interval& a);
  friend Interval sin(const Interval& a);
  friend Interval cos_like(const Interval& a, bool is_sin);  // shared core
  // arccos/sqrt clamp their argument to the domain boundary and throw
  // DomainViolation only when the whole interval lies strictly outside.
  friend Interval acos(const Interval& a);
  friend Interval sqrt(const Interval& a);
  // cos/sin quotient; an enclosure of a cotangent pole yields (-inf, +inf).
  friend Interval cot(const Interval& a);

 private:
  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
};

}  // namespace capb
