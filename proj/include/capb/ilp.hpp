#pragma once

#include <cstdint>
#include <vector>

#include "capb/rational.hpp"

namespace capb {

// The discretized integer program whose optimum M_t bounds the expected
// number of caps a random tetrahedron rotation leaves unlit:
//
//   maximize   sum_i n_i·c_i        c_i = round_up(1 - σ(C_{pi/2 - a_{i+1}}), D)
//   subject to sum_i n_i·w_i <= 1   w_i = round_down(1 - cos a_i, D)/2
//              sum_{i in bigcap} n_i <= 4
//              n_i in Z, n_i >= 0,  i = 0..t-1
//
// Objective coefficients are rounded up and weights down, so the optimum of
// the rounded program dominates the optimum of the true one.  The weights
// are the down-rounded doubled measures re-halved — i.e. the packing
// constraint is bit-identical to sum_i n_i·round_down(1 - cos a_i, D) <= 2,
// the form the headline value 2999/1000 was produced with.
struct IlpModel {
  int t = 0;
  long D = 0;
  std::vector<Rational> obj;       // c_i, numerators on the 1/D grid
  std::vector<Rational> weight;    // w_i, numerators on the 1/(2D) grid
  Rational capacity = 1;           // right-hand side of the packing constraint
  std::vector<int> bigcap_indices; // sorted i with a_i > pi/4 (ties excluded)
  int bigcap_capacity = 4;
};

enum class SolveStatus { Optimal, Unbounded };
enum class ProofMode { Exact, Float };

struct IlpSolution {
  SolveStatus status = SolveStatus::Optimal;
  ProofMode proof_mode = ProofMode::Exact;
  Rational objective;               // exact for Exact mode; meaningless if Unbounded
  double objective_double = 0.0;    // convenience mirror (cast / float value)
  std::vector<long> counts;         // witness n_i (empty if Unbounded)
};

// Builds the model with certified rounding: the branch of the piecewise
// union-measure formula is selected by certified comparison of
// pi/2 - a_{i+1} against the breakpoints arccos(-1/3)/2 and arccos(1/3), and
// big-cap membership by certified comparison of a_i against pi/4 (an exact
// integer comparison of 71i vs 26t, since both angles are rational multiples
// of pi).
IlpModel build_model(int t, long D);

// Checks the rounding directions of a built model against interval
// enclosures of the unrounded coefficient values: c_i >= the true objective
// coefficient and w_i <= the true weight, for every i.  Throws
// VerificationFailed naming the first offending index.
void audit_rounding(const IlpModel& m);

// Exact optimum by dynamic programming over (remaining scaled capacity) x
// (remaining big-cap budget) states, treating each index as an unbounded
// item.  Scaling by 2D makes all weights integral.  Returns the
// lexicographically smallest optimal count vector; detects unbounded models
// (a zero-weight item with positive objective outside bigcap) and reports
// them via status instead of looping.
IlpSolution solve_exact(const IlpModel& m);

// Non-certified fast mode: double-precision coefficients (no 1/D rounding),
// weights floored onto a fixed internal integer grid, same DP with double
// values.  Intended for exploring M_t at large t.
IlpSolution solve_float(int t, int weight_grid = 30000);

struct CertificateReport {
  int t = 0;
  long D = 0;
  ProofMode mode = ProofMode::Exact;
  Rational m_t;
  BigInt floor_m_t;
  bool verdict_lt_3 = false;
  std::vector<long> counts;
};

// Re-derives the certificate from an exact solution, re-verifying both
// constraints and the objective value in exact arithmetic.  Throws
// VerificationFailed on any mismatch.  M_t < 3 is the load-bearing bound:
// at most floor(M_t) = 2 caps survive the best rotation, so 4 + 2 = 6
// directions suffice.
CertificateReport certify(const IlpSolution& sol, const IlpModel& m);

}  // namespace capb
