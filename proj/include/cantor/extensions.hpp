#pragma once

#include <vector>

#include "cantor/theorems.hpp"

namespace cantor {

// Exact bisection bracket for the root t_m of (1-t)^m == t in (0, 1/2):
// the keep-fraction threshold at which m-fold products of the self-similar
// set D^(t) start covering [0, 1].
struct RootBracket {
  int index = 0;  // the exponent m
  Rational lo, hi;
  Rational width() const { return hi - lo; }
};

// Bisects the sign change of p(t) = (1-t)^m - t on [0, 1/2], keeping the
// exact invariant p(lo) > 0 > p(hi), until hi - lo <= tolerance.  All
// evaluations are rational; nothing is rounded.  m >= 2, tolerance > 0.
RootBracket solve_tm(int m, const Rational& tolerance);

struct CoverageResult {
  bool covered = false;             // image contains all of [0, 1]
  Rational deficit;                 // measure of [0, 1] the image misses
  IntervalSet image;
  std::vector<OpenInterval> gaps;   // uncovered parts of [0, 1]
};

// m-fold product image of the depth-n self-similar set D_n^(t), folded
// pairwise with coalescing after every fold.  Guard: factors*depth <= 24
// (the worst-case box enumeration is 2^(factors*depth)).
CoverageResult selfsim_product_coverage(const Rational& t, int factors,
                                        int depth);

// Structure of {u : u and q*u both lie in C_n}, with the exact solution
// families known in closed form for q in {2, 11, 4}:
//   q = 2:  u = 1/3^k,      k = 1..n
//   q = 11: u = 1/(4*3^k),  k = 1..n
//   q = 4:  u = sum of 2/3^{n_k} over any finite index set with n_1 >= 2
//           and consecutive indices at least 2 apart, n_k <= n
// (other q: no closed-form family; `claimed` stays empty).  u = 0 solves
// every q and is reported through `zero_solution` instead of the list.
struct MultipleReport {
  Rational ratio;  // q
  int depth = 0;
  IntervalSet solutions;             // intersect(C_n, (1/q)*C_n)
  std::vector<Rational> claimed;     // closed-form nonzero solutions
  std::vector<bool> claimed_in_set;  // per-point certification
  bool zero_solution = true;
  Rational residual_measure;         // measure(solutions)
  bool all_claims_certified = false;
};

MultipleReport multiple_solutions(const Rational& q, int depth);

// Computational evidence that four squares of Cantor points cover [0, 1]:
// pass iff the 4-fold sum of squares of C_n contains [0, 1].  The gap list
// reports what the 3-fold sum misses inside [0, 1] (at depth 1 that is
// exactly (1/3, 4/9)).  depth 0..8.
VerificationReport four_squares_evidence(int depth);

}  // namespace cantor
