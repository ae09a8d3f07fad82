#include "capb/ilp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "capb/coeff_expr.hpp"
#include "capb/cover_measure.hpp"
#include "capb/errors.hpp"
#include "capb/sphere.hpp"

namespace capb {

namespace {

// theta_i = pi/2 - a_{i+1} = 71(t-1-i)·pi/(180t), the radius whose cover
// measure enters objective coefficient i.
CoefficientExpr theta_expr(int t, int i) {
  return CoefficientExpr::rational(
             make_rational(71L * (t - 1 - i), 180L * t)) *
         CoefficientExpr::pi();
}

struct BreakpointExprs {
  CoefficientExpr tangent;  // arccos(-1/3)/2
  CoefficientExpr cover;    // arccos(1/3)
};

BreakpointExprs breakpoint_exprs() {
  CoefficientExpr third = CoefficientExpr::rational(make_rational(1, 3));
  return {acos(-third) / CoefficientExpr::integer(2), acos(third)};
}

// Symbolic union measure, case 2: 2(1 - cos θ) - 6·A(θ) with the lune
//   A(θ) = (π - arccos((-1/3 - cos²θ)/sin²θ) - 2·arccos(√2·cot θ)·cos θ)/(2π).
CoefficientExpr union_measure_case2_expr(const CoefficientExpr& th) {
  CoefficientExpr one = CoefficientExpr::integer(1);
  CoefficientExpr two = CoefficientExpr::integer(2);
  CoefficientExpr c = cos(th);
  CoefficientExpr s2 = one - c * c;
  CoefficientExpr first =
      acos((CoefficientExpr::rational(make_rational(-1, 3)) - c * c) / s2);
  CoefficientExpr second = acos(sqrt(two) * cot(th));
  CoefficientExpr lune =
      (CoefficientExpr::pi() - first - two * second * c) /
      (two * CoefficientExpr::pi());
  return two * (one - c) - CoefficientExpr::integer(6) * lune;
}

// The unrounded objective coefficient 1 - σ(C_θ), with the piecewise branch
// selected by certified comparison against the breakpoints.  θ is a rational
// multiple of pi and the breakpoints are not, so the comparisons always
// resolve (θ = 0 at i = t-1 falls in case 1 and gives exactly 1).
CoefficientExpr objective_coeff_expr(const CoefficientExpr& th,
                                     const BreakpointExprs& bp) {
  CoefficientExpr one = CoefficientExpr::integer(1);
  CoefficientExpr two = CoefficientExpr::integer(2);
  if (certified_compare(th, bp.tangent) == Cmp::Less) {
    return one - two * (one - cos(th));
  }
  if (certified_compare(th, bp.cover) == Cmp::Less) {
    return one - union_measure_case2_expr(th);
  }
  return CoefficientExpr::integer(0);  // full coverage: σ = 1 exactly
}

long long scaled_int(const Rational& q, const char* what) {
  if (q.get_den() != 1) {
    throw InfeasibleModel(std::string("scaled ") + what +
                          " is not an integer");
  }
  if (!q.get_num().fits_slong_p()) {
    throw Error(std::string("scaled ") + what + " exceeds the machine range");
  }
  return q.get_num().get_si();
}

// Certifies c >= value(e) (dir = +1) or c <= value(e) (dir = -1) by interval
// refinement; used by the rounding audit.
void certify_bound(const Rational& c, const CoefficientExpr& e, int dir,
                   const std::string& what) {
  if (e.exact_rational()) {
    const Rational& v = *e.exact_rational();
    if ((dir > 0 && c >= v) || (dir < 0 && c <= v)) return;
    throw VerificationFailed(what + ": exact comparison failed");
  }
  for (mpfr_prec_t prec = 128; prec <= (1 << 14); prec *= 2) {
    Interval iv = e.eval(prec);
    if (dir > 0 && iv.certainly_le(c)) return;
    if (dir < 0 && iv.certainly_ge(c)) return;
  }
  throw VerificationFailed(what + ": could not certify at the precision cap");
}

}  // namespace

IlpModel build_model(int t, long D) {
  if (t < 1) throw DomainError("build_model needs t >= 1");
  if (D < 1) throw DomainError("build_model needs D >= 1");
  IlpModel m;
  m.t = t;
  m.D = D;
  m.capacity = 1;
  m.bigcap_capacity = 4;
  m.obj.reserve(static_cast<std::size_t>(t));
  m.weight.reserve(static_cast<std::size_t>(t));

  std::vector<CoefficientExpr> grid = discretization_grid(t);
  BreakpointExprs bp = breakpoint_exprs();
  CoefficientExpr quarter_pi =
      CoefficientExpr::pi() / CoefficientExpr::integer(4);
  CoefficientExpr one = CoefficientExpr::integer(1);

  for (int i = 0; i < t; ++i) {
    m.obj.push_back(round_up(objective_coeff_expr(theta_expr(t, i), bp), D));
    // Weight on the 1/(2D) grid: round_down of the doubled measure
    // 1 - cos a_i, then re-halved (see IlpModel docs).
    m.weight.push_back(round_down(one - cos(grid[i]), D) / 2);
    // a_i vs pi/4 reduces to an exact comparison of rational pi-factors;
    // an exact tie stays outside bigcap (relaxing constraint (6) can only
    // raise the optimum, which keeps the bound sound).
    if (certified_compare(grid[i], quarter_pi) == Cmp::Greater) {
      m.bigcap_indices.push_back(i);
    }
  }
  return m;
}

void audit_rounding(const IlpModel& m) {
  std::vector<CoefficientExpr> grid = discretization_grid(m.t);
  BreakpointExprs bp = breakpoint_exprs();
  CoefficientExpr one = CoefficientExpr::integer(1);
  CoefficientExpr two = CoefficientExpr::integer(2);
  for (int i = 0; i < m.t; ++i) {
    certify_bound(m.obj[i], objective_coeff_expr(theta_expr(m.t, i), bp), +1,
                  "objective coefficient " + std::to_string(i));
    certify_bound(m.weight[i], (one - cos(grid[i])) / two, -1,
                  "weight " + std::to_string(i));
  }
}

IlpSolution solve_exact(const IlpModel& m) {
  const int t = m.t;
  if (t < 1 || static_cast<int>(m.obj.size()) != t ||
      static_cast<int>(m.weight.size()) != t) {
    throw InfeasibleModel("malformed model");
  }

  // Scale the packing constraint by 2D: integral weights and capacity.
  const Rational scale = Rational(2) * Rational(m.D);
  std::vector<long long> w(t), c(t);
  for (int i = 0; i < t; ++i) {
    w[i] = scaled_int(m.weight[i] * scale, "weight");
    c[i] = scaled_int(m.obj[i] * Rational(m.D), "objective coefficient");
    if (w[i] < 0 || c[i] < 0) throw InfeasibleModel("negative coefficient");
  }
  const long long L = scaled_int(m.capacity * scale, "capacity");
  const int B = m.bigcap_capacity;
  std::vector<char> big(t, 0);
  for (int idx : m.bigcap_indices) big[idx] = 1;

  // A zero-weight item with positive value outside the cardinality-capped
  // set can be taken arbitrarily often.
  for (int i = 0; i < t; ++i) {
    if (w[i] == 0 && c[i] > 0 && !big[i]) {
      IlpSolution sol;
      sol.status = SolveStatus::Unbounded;
      sol.proof_mode = ProofMode::Exact;
      return sol;
    }
  }

  const std::size_t row = static_cast<std::size_t>(L) + 1;
  const std::size_t per_table = row * static_cast<std::size_t>(B + 1);
  const std::size_t bytes =
      per_table * static_cast<std::size_t>(t + 1) * sizeof(long long);
  if (bytes > (512ull << 20)) {
    throw Error("exact witness tables would need " + std::to_string(bytes) +
                " bytes; reduce t/D or use float mode");
  }

  // S[j] = best objective (numerator over D) using items j..t-1, indexed by
  // [bigcap budget][capacity].  Suffix tables make the lexicographically
  // smallest optimal witness reconstructible without re-solving.
  std::vector<std::vector<long long>> S(
      static_cast<std::size_t>(t) + 1, std::vector<long long>(per_table, 0));
  for (int j = t - 1; j >= 0; --j) {
    std::vector<long long>& cur = S[j];
    cur = S[j + 1];
    for (int b = big[j] ? 1 : 0; b <= B; ++b) {
      long long* r = cur.data() + static_cast<std::size_t>(b) * row;
      const long long* p =
          big[j] ? cur.data() + static_cast<std::size_t>(b - 1) * row : r;
      if (w[j] == 0) {
        if (!big[j]) continue;  // value 0 (positive was ruled unbounded)
        for (long long x = 0; x <= L; ++x) {
          long long cand = c[j] + p[x];
          if (cand > r[x]) r[x] = cand;
        }
      } else {
        for (long long x = w[j]; x <= L; ++x) {
          long long cand = c[j] + p[x - w[j]];
          if (cand > r[x]) r[x] = cand;
        }
      }
    }
  }

  IlpSolution sol;
  sol.status = SolveStatus::Optimal;
  sol.proof_mode = ProofMode::Exact;
  sol.counts.assign(static_cast<std::size_t>(t), 0);

  // Walk forward taking as few copies of each item as still reaches the
  // optimum: the lexicographically smallest optimal witness.
  long long b = B, x = L;
  for (int j = 0; j < t; ++j) {
    const long long target = S[j][static_cast<std::size_t>(b) * row + x];
    for (long long k = 0;; ++k) {
      long long nb = b - (big[j] ? k : 0);
      long long nx = x - k * w[j];
      if (nb < 0 || nx < 0) {
        throw Error("witness reconstruction failed (solver bug)");
      }
      long long rest = S[j + 1][static_cast<std::size_t>(nb) * row + nx];
      if (k * c[j] + rest == target) {
        sol.counts[static_cast<std::size_t>(j)] = static_cast<long>(k);
        b = nb;
        x = nx;
        break;
      }
      if (w[j] == 0 && !big[j]) {
        throw Error("witness reconstruction failed (solver bug)");
      }
    }
  }

  const long long best = S[0][static_cast<std::size_t>(B) * row + L];
  sol.objective = make_rational(BigInt(static_cast<long>(best)), BigInt(m.D));
  sol.objective_double = sol.objective.get_d();
  return sol;
}

IlpSolution solve_float(int t, int weight_grid) {
  if (t < 1) throw DomainError("solve_float needs t >= 1");
  if (weight_grid < 1) throw DomainError("weight grid must be >= 1");
  const int W = weight_grid;
  const int B = 4;

  std::vector<double> c(static_cast<std::size_t>(t));
  std::vector<int> w(static_cast<std::size_t>(t));
  std::vector<char> big(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    double ai = kPi * (19.0 * t + 71.0 * i) / (180.0 * t);
    double th = kPi * 71.0 * (t - 1 - i) / (180.0 * t);
    double mu = th <= 0.0 ? 0.0 : union_measure(th);
    c[static_cast<std::size_t>(i)] = std::max(0.0, 1.0 - mu);
    w[static_cast<std::size_t>(i)] = static_cast<int>(
        std::floor((1.0 - std::cos(ai)) / 2.0 * W));
    big[static_cast<std::size_t>(i)] = 71LL * i > 26LL * t ? 1 : 0;
  }
  for (int i = 0; i < t; ++i) {
    // Same degeneracy as in exact mode: only possible for tiny weight grids.
    if (w[i] == 0 && c[i] > 0.0 && !big[i]) {
      IlpSolution sol;
      sol.status = SolveStatus::Unbounded;
      sol.proof_mode = ProofMode::Float;
      return sol;
    }
  }

  const std::size_t row = static_cast<std::size_t>(W) + 1;
  std::vector<double> val(row * (B + 1), 0.0);
  std::vector<int> choice(row * (B + 1), -1);
  for (int j = 0; j < t; ++j) {
    const std::size_t wj = static_cast<std::size_t>(w[j]);
    for (int b = big[j] ? 1 : 0; b <= B; ++b) {
      double* r = val.data() + static_cast<std::size_t>(b) * row;
      int* ch = choice.data() + static_cast<std::size_t>(b) * row;
      const double* p =
          big[j] ? val.data() + static_cast<std::size_t>(b - 1) * row : r;
      for (std::size_t x = wj; x < row; ++x) {
        double cand = c[static_cast<std::size_t>(j)] + p[x - wj];
        if (cand > r[x]) {
          r[x] = cand;
          ch[x] = j;
        }
      }
    }
  }

  IlpSolution sol;
  sol.status = SolveStatus::Optimal;
  sol.proof_mode = ProofMode::Float;
  sol.counts.assign(static_cast<std::size_t>(t), 0);
  std::size_t b = B, x = static_cast<std::size_t>(W);
  while (choice[b * row + x] >= 0) {
    int j = choice[b * row + x];
    ++sol.counts[static_cast<std::size_t>(j)];
    if (big[j]) --b;
    x -= static_cast<std::size_t>(w[j]);
  }
  double obj = 0.0;
  for (int j = 0; j < t; ++j) {
    obj += static_cast<double>(sol.counts[static_cast<std::size_t>(j)]) *
           c[static_cast<std::size_t>(j)];
  }
  sol.objective_double = obj;
  sol.objective = Rational(obj);  // exact dyadic image of the double
  return sol;
}

CertificateReport certify(const IlpSolution& sol, const IlpModel& m) {
  if (sol.proof_mode != ProofMode::Exact) {
    throw VerificationFailed("certify needs an exact-mode solution");
  }
  if (sol.status != SolveStatus::Optimal) {
    throw VerificationFailed("certify needs a bounded solution");
  }
  if (static_cast<int>(sol.counts.size()) != m.t) {
    throw VerificationFailed("witness length mismatch");
  }
  Rational obj = 0, used = 0;
  long big_used = 0;
  for (int i = 0; i < m.t; ++i) {
    long n = sol.counts[static_cast<std::size_t>(i)];
    if (n < 0) throw VerificationFailed("negative count");
    obj += Rational(n) * m.obj[static_cast<std::size_t>(i)];
    used += Rational(n) * m.weight[static_cast<std::size_t>(i)];
  }
  for (int idx : m.bigcap_indices) {
    big_used += sol.counts[static_cast<std::size_t>(idx)];
  }
  if (used > m.capacity) {
    throw VerificationFailed("witness violates the packing constraint");
  }
  if (big_used > m.bigcap_capacity) {
    throw VerificationFailed("witness violates the big-cap constraint");
  }
  if (obj != sol.objective) {
    throw VerificationFailed("objective recomputation mismatch");
  }

  CertificateReport rep;
  rep.t = m.t;
  rep.D = m.D;
  rep.mode = ProofMode::Exact;
  rep.m_t = obj;
  rep.floor_m_t = floor_rational(obj);
  rep.verdict_lt_3 = obj < 3;
  rep.counts = sol.counts;
  return rep;
}

}  // namespace capb
