#pragma once

#include <optional>
#include <utility>

#include "cantor/cantor_sets.hpp"

namespace cantor {

// Constructive witnesses for the classic covering identities of the Cantor
// set C.  Each routine returns exact rationals that in_cantor accepts, and
// each is total on the stated domain (std::domain_error outside it).

// u in [0, 2]  ->  (x, y) with x + y == u, x >= y, both in C.
// Built digit-wise from the ternary expansion of u/2 via the half-distance
// map: digit 0 -> (0,0), 1 -> (2,0), 2 -> (2,2); each output digit pair
// averages back to the input digit.
std::pair<Rational, Rational> decompose_sum(const Rational& u);

// u in [-1, 1]  ->  (x, y) with x - y == u, both in C.  Reduction to the
// sum case: split u + 1 = x + z and reflect y = 1 - z.
std::pair<Rational, Rational> decompose_diff(const Rational& u);

// u in [0, 4/3]  ->  (x, z) with x + z/3 == u, both in C.  The sum split
// of u itself already has its smaller part below 1/3 (so it scales into C
// by 3), except at the endpoint u == 4/3 where (1, 1) works directly.
std::pair<Rational, Rational> decompose_third(const Rational& u);

// Membership of u > 0 in C/C = {x/y : x, y in C, y != 0}.  The positive
// part of that quotient set is the union of the bands
// [2/3 * 3^m, 3/2 * 3^m] over all integers m, which are pairwise disjoint;
// returns the witness exponent m, or nullopt when u falls in the space
// between two bands.
std::optional<long> in_quotient_set(const Rational& u);

}  // namespace cantor
