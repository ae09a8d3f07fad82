#include "capb/interval.hpp"

#include <algorithm>

#include "capb/errors.hpp"

namespace capb {

namespace {

mpfr_prec_t joint_prec(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::entire(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_inf(r.lo_, -1);
  mpfr_set_inf(r.hi_, 1);
  return r;
}

bool Interval::finite() const {
  return mpfr_number_p(lo_) && mpfr_number_p(hi_);
}

bool Interval::strictly_positive() const {
  return mpfr_sgn(lo_) > 0;
}

bool Interval::strictly_negative() const {
  return mpfr_sgn(hi_) < 0;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::certainly_le(const Rational& q) const {
  return mpfr_number_p(hi_) && mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0;
}

bool Interval::certainly_ge(const Rational& q) const {
  return mpfr_number_p(lo_) && mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0;
}

double Interval::lo_double() const {
  return mpfr_get_d(lo_, MPFR_RNDD);
}

double Interval::hi_double() const {
  return mpfr_get_d(hi_, MPFR_RNDU);
}

double Interval::width() const {
  mpfr_t d;
  mpfr_init2(d, prec_);
  mpfr_sub(d, hi_, lo_, MPFR_RNDU);
  double w = mpfr_get_d(d, MPFR_RNDU);
  mpfr_clear(d);
  return w;
}

BigInt Interval::floor_lo() const {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
  return z;
}

BigInt Interval::floor_hi() const {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDD);
  return z;
}

BigInt Interval::ceil_lo() const {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDU);
  return z;
}

BigInt Interval::ceil_hi() const {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDU);
  return z;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint_prec(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint_prec(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t prec = joint_prec(a, b);
  if (!a.finite() || !b.finite()) {
    // 0·inf would poison the endpoint products; the whole line is a sound
    // enclosure of any product involving an already-unbounded interval.
    return Interval::entire(prec);
  }
  Interval r(prec);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  mpfr_t p;
  mpfr_init2(p, prec);
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(p, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(p, r.lo_) < 0) mpfr_set(r.lo_, p, MPFR_RNDD);
      mpfr_mul(p, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(p, r.hi_) > 0) mpfr_set(r.hi_, p, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(p);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  mpfr_prec_t prec = joint_prec(a, b);
  if (!a.finite() || !b.finite() || b.contains_zero()) {
    return Interval::entire(prec);
  }
  Interval r(prec);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  mpfr_t p;
  mpfr_init2(p, prec);
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_div(p, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(p, r.lo_) < 0) mpfr_set(r.lo_, p, MPFR_RNDD);
      mpfr_div(p, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(p, r.hi_) > 0) mpfr_set(r.hi_, p, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(p);
  return r;
}

// Shared core of interval cos/sin.  `is_sin` shifts the extremum lattice:
// cos has maxima at even multiples of pi and minima at odd ones; sin(x) =
// cos(x - pi/2) moves them by half a period.
Interval cos_like(const Interval& a, bool is_sin) {
  mpfr_prec_t prec = a.precision();
  Interval full(prec);
  mpfr_set_si(full.lo_, -1, MPFR_RNDD);
  mpfr_set_si(full.hi_, 1, MPFR_RNDU);
  if (!a.finite()) return full;

  // Outside a modest range just give [-1, 1]; the grammar never produces
  // large trig arguments, and the wide answer stays sound.
  if (mpfr_cmp_si(a.lo_, -64) < 0 || mpfr_cmp_si(a.hi_, 64) > 0) return full;

  Interval r(prec);
  mpfr_t v;
  mpfr_init2(v, prec);
  auto eval_endpoint = [&](mpfr_srcptr x, bool first) {
    if (is_sin) {
      mpfr_sin(v, x, MPFR_RNDD);
    } else {
      mpfr_cos(v, x, MPFR_RNDD);
    }
    if (first || mpfr_cmp(v, r.lo_) < 0) mpfr_set(r.lo_, v, MPFR_RNDD);
    if (is_sin) {
      mpfr_sin(v, x, MPFR_RNDU);
    } else {
      mpfr_cos(v, x, MPFR_RNDU);
    }
    if (first || mpfr_cmp(v, r.hi_) > 0) mpfr_set(r.hi_, v, MPFR_RNDU);
  };
  eval_endpoint(a.lo_, true);
  eval_endpoint(a.hi_, false);

  // Fold in ±1 whenever the interval may contain an extremum x_k; for cos,
  // x_k = k·pi (max at even k); for sin, x_k = (k + 1/2)·pi (max at even k).
  // "May contain" uses the outward pi enclosure, which over-includes — sound.
  Interval pi_enc = Interval::pi(prec);
  mpfr_t xk_lo, xk_hi, half;
  mpfr_init2(xk_lo, prec);
  mpfr_init2(xk_hi, prec);
  mpfr_init2(half, prec);
  for (long k = -21; k <= 21; ++k) {
    // xk in [k_eff_lo * pi_lo/hi] with k_eff = k (cos) or k + 1/2 (sin).
    mpfr_set_si(half, 2 * k + (is_sin ? 1 : 0), MPFR_RNDN);
    mpfr_div_si(half, half, 2, MPFR_RNDN);  // exact: small dyadic
    mpfr_mul(xk_lo, half, (mpfr_sgn(half) >= 0 ? pi_enc.lo_ : pi_enc.hi_),
             MPFR_RNDD);
    mpfr_mul(xk_hi, half, (mpfr_sgn(half) >= 0 ? pi_enc.hi_ : pi_enc.lo_),
             MPFR_RNDU);
    bool may_contain =
        mpfr_cmp(xk_hi, a.lo_) >= 0 && mpfr_cmp(xk_lo, a.hi_) <= 0;
    if (!may_contain) continue;
    bool is_max = (k % 2 == 0);
    if (is_max) {
      mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    } else {
      mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    }
  }
  mpfr_clear(xk_lo);
  mpfr_clear(xk_hi);
  mpfr_clear(half);
  mpfr_clear(v);

  // Intersect with [-1, 1] (endpoint rounding may overshoot).
  if (mpfr_cmp_si(r.lo_, -1) < 0) mpfr_set_si(r.lo_, -1, MPFR_RNDD);
  if (mpfr_cmp_si(r.hi_, 1) > 0) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
  return r;
}

Interval cos(const Interval& a) {
  return cos_like(a, false);
}

Interval sin(const Interval& a) {
  return cos_like(a, true);
}

Interval acos(const Interval& a) {
  mpfr_prec_t prec = a.precision();
  // Clamp to [-1, 1]; reject only intervals strictly outside.
  if (mpfr_cmp_si(a.lo_, 1) > 0 || mpfr_cmp_si(a.hi_, -1) < 0) {
    throw DomainViolation("arccos argument interval strictly outside [-1, 1]");
  }
  mpfr_t xl, xh;
  mpfr_init2(xl, prec);
  mpfr_init2(xh, prec);
  mpfr_set(xl, a.lo_, MPFR_RNDD);
  mpfr_set(xh, a.hi_, MPFR_RNDU);
  if (mpfr_cmp_si(xl, -1) < 0) mpfr_set_si(xl, -1, MPFR_RNDN);
  if (mpfr_cmp_si(xh, 1) > 0) mpfr_set_si(xh, 1, MPFR_RNDN);
  Interval r(prec);
  // arccos is decreasing: lower result from the upper argument.
  mpfr_acos(r.lo_, xh, MPFR_RNDD);
  mpfr_acos(r.hi_, xl, MPFR_RNDU);
  mpfr_clear(xl);
  mpfr_clear(xh);
  return r;
}

Interval sqrt(const Interval& a) {
  mpfr_prec_t prec = a.precision();
  if (mpfr_sgn(a.hi_) < 0) {
    throw DomainViolation("sqrt argument interval strictly negative");
  }
  Interval r(prec);
  if (mpfr_sgn(a.lo_) < 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval cot(const Interval& a) {
  return cos(a) / sin(a);
}

}  // namespace capb
