#include "cantor/cantor_sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cantor {

IntervalSet middle_refine(const IntervalSet& s, const Rational& keep) {
  if (keep <= 0 || keep >= make_rational(1, 2))
    throw std::domain_error("middle_refine: keep fraction must lie in (0, 1/2)");
  std::vector<Interval> out;
  out.reserve(2 * s.component_count());
  for (const auto& iv : s.members()) {
    const Rational step = keep * iv.length();
    out.emplace_back(iv.lo, iv.lo + step);
    out.emplace_back(iv.hi - step, iv.hi);
  }
  return IntervalSet(std::move(out));
}

IntervalSet generate_standard(int depth) {
  if (depth < 0)
    throw std::invalid_argument("generate_standard: negative depth");
  IntervalSet c(std::vector<Interval>{Interval(Rational(0), Rational(1))});
  for (int k = 0; k < depth; ++k) c = middle_refine(c, make_rational(1, 3));
  return c;
}

IntervalSet generate_upper(int depth) {
  if (depth < 1)
    throw std::invalid_argument("generate_upper: depth must be >= 1");
  const IntervalSet right(
      std::vector<Interval>{Interval(make_rational(2, 3), Rational(1))});
  return intersect(generate_standard(depth), right);
}

IntervalSet generate_selfsim(const Rational& keep, int depth) {
  if (depth < 0)
    throw std::invalid_argument("generate_selfsim: negative depth");
  IntervalSet d(std::vector<Interval>{Interval(Rational(0), Rational(1))});
  for (int k = 0; k < depth; ++k) d = middle_refine(d, keep);
  return d;
}

IntervalSet generate(const CantorSpec& spec) {
  switch (spec.variant) {
    case CantorVariant::standard:
      return generate_standard(spec.depth);
    case CantorVariant::upper:
      return generate_upper(spec.depth);
    case CantorVariant::self_similar:
      return generate_selfsim(spec.keep, spec.depth);
  }
  throw std::invalid_argument("generate: unknown variant");
}

bool in_cantor(const Rational& x) {
  if (x < 0 || x > 1)
    throw std::domain_error("in_cantor: argument outside [0, 1]");
  const TernaryExpansion e = rational_to_ternary(x);
  const auto no_ones = [](const std::vector<int>& digits) {
    return std::none_of(digits.begin(), digits.end(),
                        [](int d) { return d == 1; });
  };
  if (no_ones(e.preperiod()) && no_ones(e.period())) return true;
  // A terminating expansion ending in 1 has the all-{0,2} twin ending in
  // 0222...; any other placement of a 1 digit rules the point out.
  if (e.terminating() && !e.preperiod().empty() && e.preperiod().back() == 1) {
    auto head = e.preperiod();
    head.pop_back();
    return no_ones(head);
  }
  return false;
}

}  // namespace cantor
