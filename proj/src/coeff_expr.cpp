#include "capb/coeff_expr.hpp"

#include <utility>

#include "capb/errors.hpp"

namespace capb {

namespace {

constexpr mpfr_prec_t kStartPrec = 128;
constexpr mpfr_prec_t kMaxPrec = 1 << 14;

Rational mod_rational(const Rational& q, long m) {
  // q - m*floor(q/m), in [0, m).
  Rational r = q / m;
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q - Rational(f) * m;
}

// cos(q·pi) for rational q is rational only at the multiples of pi/6 and
// pi/4 below (Niven); returns disengaged for all other q.
std::optional<Rational> cos_of_pi_multiple(const Rational& q) {
  Rational r = mod_rational(q, 2);
  struct Entry {
    long num, den, vnum, vden;
  };
  static const Entry table[] = {
      {0, 1, 1, 1},  {1, 3, 1, 2},  {1, 2, 0, 1},  {2, 3, -1, 2},
      {1, 1, -1, 1}, {4, 3, -1, 2}, {3, 2, 0, 1},  {5, 3, 1, 2},
  };
  for (const Entry& e : table) {
    if (r == make_rational(e.num, e.den)) return make_rational(e.vnum, e.vden);
  }
  return std::nullopt;
}

std::optional<Rational> sin_of_pi_multiple(const Rational& q) {
  // sin(q·pi) = cos((q - 1/2)·pi).
  return cos_of_pi_multiple(q - make_rational(1, 2));
}

std::optional<Rational> cot_of_pi_multiple(const Rational& q) {
  Rational r = mod_rational(q, 1);
  if (r == make_rational(1, 4)) return Rational(1);
  if (r == make_rational(1, 2)) return Rational(0);
  if (r == make_rational(3, 4)) return Rational(-1);
  return std::nullopt;
}

// arccos of the five rational cosine values, as a multiple of pi.
std::optional<Rational> acos_pi_factor(const Rational& q) {
  if (q == Rational(-1)) return Rational(1);
  if (q == make_rational(-1, 2)) return make_rational(2, 3);
  if (q == Rational(0)) return make_rational(1, 2);
  if (q == make_rational(1, 2)) return make_rational(1, 3);
  if (q == Rational(1)) return Rational(0);
  return std::nullopt;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) &&
      mpz_perfect_square_p(q.get_den_mpz_t())) {
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return make_rational(n, d);
  }
  return std::nullopt;
}

}  // namespace

struct CoefficientExpr::Node {
  enum class Kind {
    kRational,
    kPi,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kNeg,
    kCos,
    kSin,
    kCot,
    kAcos,
    kSqrt,
  };

  Kind kind;
  Rational value;  // kRational only
  std::shared_ptr<const Node> a, b;

  // Exact forms, filled at construction.  Invariant: both engaged only for
  // the value 0 (which is both the rational 0 and 0·pi).
  std::optional<Rational> exact;      // value == exact
  std::optional<Rational> pi_mult;    // value == pi_mult·pi
};

namespace {

using Node = CoefficientExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Node n) {
  // Keep the zero invariant: an exact rational 0 is also 0·pi and vice versa.
  if (n.exact && *n.exact == 0) n.pi_mult = Rational(0);
  if (n.pi_mult && *n.pi_mult == 0) n.exact = Rational(0);
  return std::make_shared<const Node>(std::move(n));
}

}  // namespace

CoefficientExpr CoefficientExpr::rational(const Rational& q) {
  Node n{Node::Kind::kRational, q, nullptr, nullptr, q, std::nullopt};
  return CoefficientExpr(make_node(std::move(n)));
}

CoefficientExpr CoefficientExpr::integer(long v) {
  return rational(Rational(v));
}

CoefficientExpr CoefficientExpr::pi() {
  Node n{Node::Kind::kPi, Rational(0), nullptr, nullptr, std::nullopt,
         Rational(1)};
  return CoefficientExpr(make_node(std::move(n)));
}

const std::optional<Rational>& CoefficientExpr::exact_rational() const {
  return n_->exact;
}

const std::optional<Rational>& CoefficientExpr::pi_factor() const {
  return n_->pi_mult;
}

CoefficientExpr operator+(const CoefficientExpr& x, const CoefficientExpr& y) {
  Node n{Node::Kind::kAdd, Rational(0), x.n_, y.n_, std::nullopt, std::nullopt};
  if (x.n_->exact && y.n_->exact) n.exact = *x.n_->exact + *y.n_->exact;
  if (x.n_->pi_mult && y.n_->pi_mult) n.pi_mult = *x.n_->pi_mult + *y.n_->pi_mult;
  return CoefficientExpr(make_node(std::move(n)));
}

CoefficientExpr operator-(const CoefficientExpr& x, const CoefficientExpr& y) {
  Node n{Node::Kind::kSub, Rational(0), x.n_, y.n_, std::nullopt, std::nullopt};
  if (x.n_->exact && y.n_->exact) n.exact = *x.n_->exact - *y.n_->exact;
  if (x.n_->pi_mult && y.n_->pi_mult) n.pi_mult = *x.n_->pi_mult - *y.n_->pi_mult;
  return CoefficientExpr(make_node(std::move(n)));
}

CoefficientExpr operator-(const CoefficientExpr& x) {
  Node n{Node::Kind::kNeg, Rational(0), x.n_, nullptr, std::nullopt,
         std::nullopt};
  if (x.n_->exact) n.exact = -*x.n_->exact;
  if (x.n_->pi_mult) n.pi_mult = -*x.n_->pi_mult;
  return CoefficientExpr(make_node(std::move(n)));
}

CoefficientExpr operator*(const CoefficientExpr& x, const CoefficientExpr& y) {
  Node n{Node::Kind::kMul, Rational(0), x.n_, y.n_, std::nullopt, std::nullopt};
  if (x.n_->exact && y.n_->exact) {
    n.exact = *x.n_->exact * *y.n_->exact;
  } else if (x.n_->exact && y.n_->pi_mult) {
    n.pi_mult = *x.n_->exact * *y.n_->pi_mult;
  } else if (x.n_->pi_mult && y.n_->exact) {
    n.pi_mult = *x.n_->pi_mult * *y.n_->exact;
  } else if ((x.n_->exact && *x.n_->exact == 0) ||
             (y.n_->exact && *y.n_->exact == 0)) {
    n.exact = Rational(0);
  }
  return CoefficientExpr(make_node(std::move(n)));
}

CoefficientExpr operator/(const CoefficientExpr& x, const CoefficientExpr& y) {
  if (y.n_->exact && *y.n_->exact == 0) {
    throw DomainViolation("division by an exactly-zero expression");
  }
  Node n{Node::Kind::kDiv, Rational(0), x.n_, y.n_, std::nullopt, std::nullopt};
  if (y.n_->exact) {
    if (x.n_->exact) n.exact = *x.n_->exact / *y.n_->exact;
    if (x.n_->pi_mult) n.pi_mult = *x.n_->pi_mult / *y.n_->exact;
  } else if (y.n_->pi_mult && x.n_->pi_mult) {
    // (q·pi)/(r·pi) = q/r; r != 0 since an exactly-zero divisor was rejected.
    n.exact = *x.n_->pi_mult / *y.n_->pi_mult;
  }
  return CoefficientExpr(make_node(std::move(n)));
}

CoefficientExpr cos(const CoefficientExpr& x) {
  Node n{Node::Kind::kCos, Rational(0), x.n_, nullptr, std::nullopt,
         std::nullopt};
  if (x.n_->pi_mult) n.exact = cos_of_pi_multiple(*x.n_->pi_mult);
  return CoefficientExpr(make_node(std::move(n)));
}

CoefficientExpr sin(const CoefficientExpr& x) {
  Node n{Node::Kind::kSin, Rational(0), x.n_, nullptr, std::nullopt,
         std::nullopt};
  if (x.n_->pi_mult) n.exact = sin_of_pi_multiple(*x.n_->pi_mult);
  return CoefficientExpr(make_node(std::move(n)));
}

CoefficientExpr cot(const CoefficientExpr& x) {
  Node n{Node::Kind::kCot, Rational(0), x.n_, nullptr, std::nullopt,
         std::nullopt};
  if (x.n_->pi_mult) n.exact = cot_of_pi_multiple(*x.n_->pi_mult);
  return CoefficientExpr(make_node(std::move(n)));
}

CoefficientExpr acos(const CoefficientExpr& x) {
  Node n{Node::Kind::kAcos, Rational(0), x.n_, nullptr, std::nullopt,
         std::nullopt};
  if (x.n_->exact) n.pi_mult = acos_pi_factor(*x.n_->exact);
  return CoefficientExpr(make_node(std::move(n)));
}

CoefficientExpr sqrt(const CoefficientExpr& x) {
  Node n{Node::Kind::kSqrt, Rational(0), x.n_, nullptr, std::nullopt,
         std::nullopt};
  if (x.n_->exact) n.exact = exact_sqrt(*x.n_->exact);
  return CoefficientExpr(make_node(std::move(n)));
}

namespace {

Interval eval_node(const Node& n, mpfr_prec_t prec) {
  // Exact forms short-circuit the tree walk and give the tightest possible
  // enclosures.
  if (n.exact) return Interval::from_rational(*n.exact, prec);
  if (n.pi_mult) {
    return Interval::from_rational(*n.pi_mult, prec) * Interval::pi(prec);
  }
  switch (n.kind) {
    case Node::Kind::kRational:
      return Interval::from_rational(n.value, prec);
    case Node::Kind::kPi:
      return Interval::pi(prec);
    case Node::Kind::kAdd:
      return eval_node(*n.a, prec) + eval_node(*n.b, prec);
    case Node::Kind::kSub:
      return eval_node(*n.a, prec) - eval_node(*n.b, prec);
    case Node::Kind::kMul:
      return eval_node(*n.a, prec) * eval_node(*n.b, prec);
    case Node::Kind::kDiv:
      return eval_node(*n.a, prec) / eval_node(*n.b, prec);
    case Node::Kind::kNeg:
      return -eval_node(*n.a, prec);
    case Node::Kind::kCos:
      return cos(eval_node(*n.a, prec));
    case Node::Kind::kSin:
      return sin(eval_node(*n.a, prec));
    case Node::Kind::kCot:
      return cot(eval_node(*n.a, prec));
    case Node::Kind::kAcos:
      return acos(eval_node(*n.a, prec));
    case Node::Kind::kSqrt:
      return sqrt(eval_node(*n.a, prec));
  }
  throw Error("unreachable expression kind");
}

}  // namespace

Interval CoefficientExpr::eval(mpfr_prec_t precision_bits) const {
  return eval_node(*n_, precision_bits);
}

Interval eval_interval(const CoefficientExpr& e, mpfr_prec_t precision_bits) {
  return e.eval(precision_bits);
}

namespace {

Rational grid_value(const BigInt& k, long D) {
  return make_rational(k, BigInt(D));
}

enum class RoundDir { Up, Down };

Rational round_directed(const CoefficientExpr& e, long D, RoundDir dir) {
  if (D < 1) throw DomainError("rounding denominator must be >= 1");
  if (e.exact_rational()) {
    Rational scaled = *e.exact_rational() * D;
    BigInt k = dir == RoundDir::Up ? ceil_rational(scaled)
                                   : floor_rational(scaled);
    return grid_value(k, D);
  }
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    Interval scaled = e.eval(prec) * Interval::from_long(D, prec);
    if (!scaled.finite()) continue;
    BigInt a = dir == RoundDir::Up ? scaled.ceil_lo() : scaled.floor_lo();
    BigInt b = dir == RoundDir::Up ? scaled.ceil_hi() : scaled.floor_hi();
    if (a == b) return grid_value(a, D);
  }
  throw TieUnresolved(
      "the scaled value sits on (or indistinguishably near) an integer; "
      "rounding needs a symbolic decision");
}

}  // namespace

Rational round_up(const CoefficientExpr& e, long D) {
  return round_directed(e, D, RoundDir::Up);
}

Rational round_down(const CoefficientExpr& e, long D) {
  return round_directed(e, D, RoundDir::Down);
}

Cmp certified_compare(const CoefficientExpr& a, const CoefficientExpr& b) {
  const auto& ae = a.exact_rational();
  const auto& be = b.exact_rational();
  if (ae && be) {
    int c = cmp(*ae, *be);
    return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equal;
  }
  const auto& ap = a.pi_factor();
  const auto& bp = b.pi_factor();
  if (ap && bp) {
    int c = cmp(*ap, *bp);
    return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equal;
  }
  // Mixed exact forms (a nonzero rational vs a nonzero multiple of pi) are
  // never equal, so interval refinement terminates; for expressions without
  // exact forms it terminates whenever the values differ.
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    Interval d = a.eval(prec) - b.eval(prec);
    if (d.strictly_negative()) return Cmp::Less;
    if (d.strictly_positive()) return Cmp::Greater;
  }
  throw TieUnresolved("values indistinguishable at the precision cap");
}

std::vector<CoefficientExpr> discretization_grid(int t) {
  if (t < 1) throw DomainError("grid needs t >= 1");
  std::vector<CoefficientExpr> grid;
  grid.reserve(static_cast<std::size_t>(t) + 1);
  for (int i = 0; i <= t; ++i) {
    Rational f = make_rational(19L * t + 71L * i, 180L * t);
    grid.push_back(CoefficientExpr::rational(f) * CoefficientExpr::pi());
  }
  return grid;
}

}  // namespace capb
