#pragma once

#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

// Base-3 expansion of a rational in [0, 1]:
//     value = 0.p_1 p_2 ... p_k (q_1 q_2 ... q_l repeating).
// The (preperiod, period) factorization is kept canonical so equal
// factorizations mean equal digit streams:
//   * digits are 0..2;
//   * an all-zero period is dropped (the expansion terminates);
//   * a terminating expansion carries no trailing zeros;
//   * the period is primitive (not a repetition of a shorter cycle);
//   * the preperiod is first made as short as possible, then the period is
//     rotated to its lexicographically least phase with the skipped digits
//     moved onto the preperiod.  So 11/12 is stored as 0.22(02), not the
//     equivalent 0.2(20).
// A value with two expansions (ternary rationals: 1/3 = 0.1 = 0.0222...)
// is two distinct digit streams; rational_to_ternary always produces the
// terminating one, except for 1 itself which has only 0.(2).
class TernaryExpansion {
 public:
  TernaryExpansion() = default;  // expansion of zero
  TernaryExpansion(std::vector<int> preperiod, std::vector<int> period);

  const std::vector<int>& preperiod() const { return pre_; }
  const std::vector<int>& period() const { return per_; }
  bool terminating() const { return per_.empty(); }

  bool operator==(const TernaryExpansion&) const = default;

 private:
  std::vector<int> pre_, per_;
};

// Long division in base 3; x must lie in [0, 1] (std::domain_error
// otherwise).  Exact: the remainder cycle is detected, never truncated.
TernaryExpansion rational_to_ternary(const Rational& x);

// Inverse of the above for any valid expansion (not only canonical inputs,
// since the constructor canonicalizes).  Exact.
Rational ternary_to_rational(const TernaryExpansion& e);

}  // namespace cantor
