#pragma once

#include "cantor/interval_set.hpp"
#include "cantor/ternary.hpp"

namespace cantor {

// Families of middle-thirds-style sets handled by the library:
//   standard      C_n:        depth-n middle-thirds approximation of [0,1]
//   upper         C_n ∩ [2/3, 1]: the right half used by the product and
//                 quotient arguments (2^{n-1} components, depth >= 1)
//   self_similar  D_n^(t):    keep [0,t] and [1-t,1] of each component,
//                 0 < t < 1/2
enum class CantorVariant { standard, upper, self_similar };

struct CantorSpec {
  CantorVariant variant = CantorVariant::standard;
  int depth = 0;
  Rational keep = Rational(1, 3);  // only read for self_similar
};

IntervalSet generate(const CantorSpec& spec);
IntervalSet generate_standard(int depth);
IntervalSet generate_upper(int depth);
IntervalSet generate_selfsim(const Rational& keep, int depth);

// One refinement step: every component [a, b] is replaced by its two outer
// pieces of length keep*(b-a).  keep must lie in (0, 1/2); keep == 1/3 is
// the classic middle-thirds step.
IntervalSet middle_refine(const IntervalSet& s, const Rational& keep);

// Exact membership of x in the full Cantor set (the intersection of all
// C_n), decided from the ternary expansion: member iff some expansion of x
// avoids the digit 1.  For ternary rationals that includes the alternative
// form ending in 0222..., so 1/3 = 0.0(2) is a member even though its
// terminating expansion 0.1 contains a 1.  x must lie in [0, 1].
bool in_cantor(const Rational& x);

}  // namespace cantor
