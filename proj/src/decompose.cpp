#include "cantor/decompose.hpp"

#include <stdexcept>
#include <vector>

namespace cantor {
namespace {

// digit 0 -> (0,0), 1 -> (2,0), 2 -> (2,2): the two output streams use only
// the digits {0, 2} and average digit-wise to the input stream.
std::pair<std::vector<int>, std::vector<int>> split_digits(
    const std::vector<int>& digits) {
  std::vector<int> a, b;
  a.reserve(digits.size());
  b.reserve(digits.size());
  for (int d : digits) {
    a.push_back(d >= 1 ? 2 : 0);
    b.push_back(d == 2 ? 2 : 0);
  }
  return {std::move(a), std::move(b)};
}

}  // namespace

std::pair<Rational, Rational> decompose_sum(const Rational& u) {
  if (u < 0 || u > 2)
    throw std::domain_error("decompose_sum: argument outside [0, 2]");
  const TernaryExpansion half = rational_to_ternary(u / 2);
  auto [pre_a, pre_b] = split_digits(half.preperiod());
  auto [per_a, per_b] = split_digits(half.period());
  Rational x = ternary_to_rational(
      TernaryExpansion(std::move(pre_a), std::move(per_a)));
  Rational y = ternary_to_rational(
      TernaryExpansion(std::move(pre_b), std::move(per_b)));
  return {std::move(x), std::move(y)};
}

std::pair<Rational, Rational> decompose_diff(const Rational& u) {
  if (u < -1 || u > 1)
    throw std::domain_error("decompose_diff: argument outside [-1, 1]");
  auto [x, z] = decompose_sum(u + 1);
  return {std::move(x), 1 - z};  // C is symmetric under y -> 1 - y
}

std::pair<Rational, Rational> decompose_third(const Rational& u) {
  if (u < 0 || u > make_rational(4, 3))
    throw std::domain_error("decompose_third: argument outside [0, 4/3]");
  if (u == make_rational(4, 3)) return {Rational(1), Rational(1)};
  // For u < 4/3 the expansion of u/2 starts below the digit 2, so the
  // smaller summand y stays <= 1/3 and 3y lands back in C.
  auto [x, y] = decompose_sum(u);
  return {std::move(x), 3 * y};
}

std::optional<long> in_quotient_set(const Rational& u) {
  if (u <= 0)
    throw std::domain_error("in_quotient_set: argument must be positive");
  // Candidate band: the largest m with 3^m <= 3u/2, i.e. with
  // 2/3 * 3^m <= u.  Bands are disjoint (3/2 * 3^m < 2/3 * 3^{m+1}), so no
  // other m can work.
  const Rational cap = 3 * u / 2;
  long m = 0;
  while (pow3(m) > cap) --m;
  while (pow3(m + 1) <= cap) ++m;
  if (u <= 3 * pow3(m) / 2) return m;
  return std::nullopt;
}

}  // namespace cantor
