#pragma once

#include "cantor/rational.hpp"

namespace cantor {

// Closed interval [lo, hi] with exact rational endpoints.  Degenerate
// intervals (lo == hi) are allowed and represent single points.
struct Interval {
  Rational lo, hi;

  Interval() : lo(0), hi(0) {}
  Interval(Rational lo_, Rational hi_);  // throws std::invalid_argument if lo > hi

  Rational length() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool operator==(const Interval&) const = default;
};

// Open interval (lo, hi); used for gaps, which always have positive width.
struct OpenInterval {
  Rational lo, hi;

  OpenInterval(Rational lo_, Rational hi_);  // throws unless lo < hi
  Rational length() const { return hi - lo; }
  bool operator==(const OpenInterval&) const = default;
};

}  // namespace cantor
