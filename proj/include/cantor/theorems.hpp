#pragma once

#include <string>
#include <vector>

#include "cantor/image.hpp"

namespace cantor {

// Outcome of one computational verification: what was claimed, what was
// computed, what was expected, and the witness gaps when they differ.
// `pass` is the only field exit codes depend on; the rest is evidence.
struct VerificationReport {
  std::string claim;
  int depth = 0;
  bool pass = false;
  IntervalSet computed;
  IntervalSet expected;
  std::vector<OpenInterval> gaps;
  std::vector<std::string> notes;
};

// C_n + lambda*C_n == [0, 1+lambda] (holds exactly for 1/3 <= lambda <= 3).
// Any lambda > 0 is accepted: coefficients above 1 are reduced through the
// identity C + lambda*C == lambda*(C + (1/lambda)*C), and coefficients
// outside [1/3, 3] produce an honest failing report with the gap list as
// evidence.  depth must be >= 1.
VerificationReport verify_utz(const Rational& lambda, int depth);

// x^2*y on the square of the upper set (C_n restricted to [2/3, 1]) covers
// exactly [8/27, 1] at every depth n >= 1.
VerificationReport verify_square_cube(int depth);

// x/y on the square of the upper set covers exactly [2/3, 3/2] at every
// depth n >= 1.
VerificationReport verify_quotient(int depth);

// Exact two-sided bracket for the measure of the product set {x*y}.
// `upper_half` is the exact measure of the product image of the depth-m
// upper set; the true limit measure of that image sits within `tail` of it,
// and the full-set value is 3/2 times the half-set one:
//     lower <= mu({x*y : x, y in C}) <= upper,  upper - lower = 3/2 * tail.
struct MeasureSandwich {
  int depth = 0;
  Rational upper_half;       // exact measure at this depth (an upper bound)
  Rational tail;             // sum of worst-case losses at all deeper levels
  Rational lower_half;       // upper_half - tail
  Rational lower, upper;     // full-set bounds, scaled by 3/2
  long component_count = 0;  // components of the depth-m product image
};

MeasureSandwich product_measure_sandwich(int depth);

// Refining level m to m+1 can erase at most 2^{m-1}/9^{m+1} of measure from
// the half-set product image; the geometric sum of those losses over all
// levels >= m is 2^{m-1}/(7*9^m).  This is what makes the sandwich valid:
// upper_half(m) - tail(m) never exceeds the limit measure.
Rational sandwich_tail(int depth);

// The first refinement gap of the product image and its cover: squaring the
// component [62/81, 63/81] loses (35343/59049, 35344/59049) after one
// refinement, but the cross product [162/243,163/243] x [216/243,217/243]
// covers that gap, so the image of the whole set keeps it.
VerificationReport gap_cover_demo();

// Depth-1 gap existence for x*y^t on C_1^2: a gap appears iff
// (2/3)^(1+t) > 1/3, i.e. iff t < log 2 / log(3/2) ~ 1.7095.  t >= 1.
VerificationReport power_threshold_demo(const Rational& t);

}  // namespace cantor
