#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "capb/interval.hpp"
#include "capb/rational.hpp"

namespace capb {

// Symbolic description of a real number, restricted to the small grammar the
// coefficient formulas need: rational constants, pi, cos, sin, cot, arccos,
// square root and field operations.
//
// Besides interval evaluation at arbitrary precision, every node tracks two
// exact forms where they apply: "this value is exactly the rational q" and
// "this value is exactly q·pi".  Trigonometric functions of rational
// multiples of pi take exactly rational values only on a short, well-known
// list of angles, so propagating these forms is sound — and it is what lets
// trivial endpoints (cos(pi/2) = 0, full-coverage coefficients = 0) round
// exactly instead of chasing an undecidable integer tie through interval
// refinement.
class CoefficientExpr {
 public:
  struct Node;  // implementation detail, defined in the .cpp

  static CoefficientExpr rational(const Rational& q);
  static CoefficientExpr integer(long v);
  static CoefficientExpr pi();

  // Exact-form queries; disengaged when the value is not certifiably of that
  // form.  Both engage only for zero.
  const std::optional<Rational>& exact_rational() const;
  const std::optional<Rational>& pi_factor() const;

  // Rigorous enclosure of the value at the given working precision.
  Interval eval(mpfr_prec_t precision_bits) const;

  friend CoefficientExpr operator+(const CoefficientExpr&, const CoefficientExpr&);
  friend CoefficientExpr operator-(const CoefficientExpr&, const CoefficientExpr&);
  friend CoefficientExpr operator*(const CoefficientExpr&, const CoefficientExpr&);
  friend CoefficientExpr operator/(const CoefficientExpr&, const CoefficientExpr&);
  friend CoefficientExpr operator-(const CoefficientExpr&);
  friend CoefficientExpr cos(const CoefficientExpr&);
  friend CoefficientExpr sin(const CoefficientExpr&);
  friend CoefficientExpr cot(const CoefficientExpr&);
  friend CoefficientExpr acos(const CoefficientExpr&);
  friend CoefficientExpr sqrt(const CoefficientExpr&);

 private:
  explicit CoefficientExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// Free-function form of CoefficientExpr::eval.
Interval eval_interval(const CoefficientExpr& e, mpfr_prec_t precision_bits);

// ceil(x·D)/D and floor(x·D)/D for the exact value x of e, certified by
// precision escalation: evaluate an enclosure of x·D and widen the working
// precision (starting at 128 bits, doubling up to 2^14) until both endpoints
// round to the same integer.  Exact rational values short-circuit the loop.
// Throws TieUnresolved at the precision cap — the signal that x·D sits on an
// integer and needs a symbolic decision instead.
Rational round_up(const CoefficientExpr& e, long D);
Rational round_down(const CoefficientExpr& e, long D);

// Certified three-way comparison of two expression values.  Equality is only
// reported for values whose exact forms match; otherwise the difference is
// refined until its sign is certain.
enum class Cmp { Less, Equal, Greater };
Cmp certified_compare(const CoefficientExpr& a, const CoefficientExpr& b);

// The partition a_0 = 19pi/180 < a_1 < ... < a_t = pi/2 with equidistant
// steps, as exact (rational)·pi expressions: a_i = (19t + 71i)·pi/(180t).
std::vector<CoefficientExpr> discretization_grid(int t);

}  // namespace capb
