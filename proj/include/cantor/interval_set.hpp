#pragma once

#include <cstddef>
#include <vector>

#include "cantor/interval.hpp"

namespace cantor {

// Finite union of closed rational intervals kept in canonical form: sorted
// by left endpoint, pairwise disjoint, with touching or overlapping members
// merged (so [0,1/3] followed by [1/3,2/3] collapses to [0,2/3]).  Every
// operation returns canonical sets, which makes set equality plain
// member-wise equality.
class IntervalSet {
 public:
  IntervalSet() = default;                              // empty set
  explicit IntervalSet(std::vector<Interval> members);  // normalizes

  const std::vector<Interval>& members() const { return members_; }
  std::size_t component_count() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  // Total length; degenerate components contribute zero.
  Rational measure() const;

  // {scale * x + offset : x in this}.  A negative scale reflects the set
  // (members are re-sorted); scale == 0 collapses it to a single point.
  IntervalSet affine(const Rational& scale, const Rational& offset) const;

  bool contains_point(const Rational& x) const;

  // Superset test: every point of `other` lies in this set.
  bool contains(const IntervalSet& other) const;

  // Smallest interval covering the whole set.  Throws std::domain_error on
  // the empty set.
  Interval bounding() const;

  // Maximal open intervals of frame \ this, in increasing order.  Requires
  // this set to lie inside `frame` (std::invalid_argument otherwise).
  std::vector<OpenInterval> gaps_within(const Interval& frame) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> members_;
};

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet unite(const IntervalSet& a, const IntervalSet& b);

}  // namespace cantor
