#include "cantor/extensions.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "cantor/cantor_sets.hpp"

namespace cantor {

RootBracket solve_tm(int m, const Rational& tolerance) {
  if (m < 2) throw std::invalid_argument("solve_tm: m must be >= 2");
  if (tolerance <= 0)
    throw std::domain_error("solve_tm: tolerance must be positive");
  // The explicit return type matters: gmpxx operators yield lazy
  // expression templates that would dangle past the lambda's return.
  const auto p = [m](const Rational& t) -> Rational {
    return pow_rational(1 - t, static_cast<unsigned long>(m)) - t;
  };
  RootBracket out;
  out.index = m;
  out.lo = Rational(0);
  out.hi = make_rational(1, 2);
  // p(0) = 1 > 0 and p(1/2) = 2^-m - 1/2 < 0 for m >= 2, so the sign
  // invariant p(lo) > 0 > p(hi) holds initially and bisection keeps it.
  while (out.hi - out.lo > tolerance) {
    const Rational mid = (out.lo + out.hi) / 2;
    const Rational value = p(mid);
    if (value > 0) {
      out.lo = mid;
    } else if (value < 0) {
      out.hi = mid;
    } else {
      // A rational midpoint hit the root exactly; collapse the bracket.
      out.lo = mid;
      out.hi = mid;
      break;
    }
  }
  return out;
}

CoverageResult selfsim_product_coverage(const Rational& t, int factors,
                                        int depth) {
  if (factors < 2)
    throw std::invalid_argument(
        "selfsim_product_coverage: need at least two factors");
  if (depth < 0)
    throw std::invalid_argument("selfsim_product_coverage: negative depth");
  if (static_cast<long>(factors) * depth > 24)
    throw std::invalid_argument(
        "selfsim_product_coverage: factors*depth exceeds the enumeration "
        "guard of 24");
  const IntervalSet base = generate_selfsim(t, depth);
  IntervalSet image = base;
  for (int k = 1; k < factors; ++k)
    image = set_image(MapDescriptor::product(), image, base).image;
  CoverageResult result;
  result.image = image;
  const Interval unit_frame(Rational(0), Rational(1));
  const IntervalSet unit({unit_frame});
  const IntervalSet inside = intersect(image, unit);
  result.covered = image.contains(unit);
  result.deficit = 1 - inside.measure();
  result.gaps = inside.gaps_within(unit_frame);
  return result;
}

MultipleReport multiple_solutions(const Rational& q, int depth) {
  if (q <= 1)
    throw std::domain_error("multiple_solutions: ratio must exceed 1");
  if (depth < 0 || depth > 14)
    throw std::invalid_argument("multiple_solutions: depth must lie in 0..14");
  MultipleReport report;
  report.ratio = q;
  report.depth = depth;
  const IntervalSet c = generate_standard(depth);
  // u and q*u both in C_n <=> u in C_n intersected with (1/q)*C_n; the
  // scaling also enforces u <= 1/q, i.e. q*u <= 1.
  report.solutions = intersect(c, c.affine(1 / q, Rational(0)));
  report.residual_measure = report.solutions.measure();

  if (q == 2) {
    for (int k = 1; k <= depth; ++k)
      report.claimed.push_back(Rational(1) / pow3(k));
  } else if (q == 11) {
    for (int k = 1; k <= depth; ++k)
      report.claimed.push_back(Rational(1) / (4 * pow3(k)));
  } else if (q == 4) {
    // All finite sums of 2/3^{n_k} with n_1 >= 2 and indices >= 2 apart.
    std::vector<Rational> sums;
    const auto extend = [&](auto&& self, const Rational& acc, int next) -> void {
      for (int k = next; k <= depth; ++k) {
        const Rational value = acc + 2 / pow3(k);
        sums.push_back(value);
        self(self, value, k + 2);
      }
    };
    extend(extend, Rational(0), 2);
    report.claimed = std::move(sums);
  }

  report.all_claims_certified = true;
  report.claimed_in_set.reserve(report.claimed.size());
  for (const auto& u : report.claimed) {
    const bool inside = report.solutions.contains_point(u);
    report.claimed_in_set.push_back(inside);
    if (!inside) report.all_claims_certified = false;
  }
  return report;
}

VerificationReport four_squares_evidence(int depth) {
  if (depth < 0 || depth > 8)
    throw std::invalid_argument(
        "four_squares_evidence: depth must lie in 0..8");
  VerificationReport report;
  report.depth = depth;
  report.claim = "four squares of depth-" + std::to_string(depth) +
                 " Cantor points cover [0, 1]";
  const IntervalSet c = generate_standard(depth);
  const Interval unit_frame(Rational(0), Rational(1));
  const IntervalSet unit({unit_frame});
  const IntervalSet four = iterated_sum_of_squares(c, 4);
  report.computed = intersect(four, unit);
  report.expected = unit;
  report.pass = four.contains(unit);
  const IntervalSet three = iterated_sum_of_squares(c, 3);
  report.gaps = intersect(three, unit).gaps_within(unit_frame);
  report.notes.push_back(
      "gap list is what three squares miss inside [0, 1], not a failure of "
      "the four-square claim");
  return report;
}

}  // namespace cantor
