#include "cantor/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantor {

IntervalSet::IntervalSet(std::vector<Interval> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<Interval> merged;
  merged.reserve(members_.size());
  for (auto& iv : members_) {
    if (!merged.empty() && merged.back().hi >= iv.lo) {
      if (iv.hi > merged.back().hi) merged.back().hi = std::move(iv.hi);
    } else {
      merged.push_back(std::move(iv));
    }
  }
  members_ = std::move(merged);
}

Rational IntervalSet::measure() const {
  Rational total(0);
  for (const auto& iv : members_) total += iv.hi - iv.lo;
  return total;
}

IntervalSet IntervalSet::affine(const Rational& scale,
                                const Rational& offset) const {
  std::vector<Interval> out;
  out.reserve(members_.size());
  for (const auto& iv : members_) {
    Rational a = scale * iv.lo + offset;
    Rational b = scale * iv.hi + offset;
    if (scale >= 0)
      out.emplace_back(std::move(a), std::move(b));
    else
      out.emplace_back(std::move(b), std::move(a));
  }
  return IntervalSet(std::move(out));
}

bool IntervalSet::contains_point(const Rational& x) const {
  auto it = std::upper_bound(
      members_.begin(), members_.end(), x,
      [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == members_.begin()) return false;
  --it;
  return x <= it->hi;
}

bool IntervalSet::contains(const IntervalSet& other) const {
  // Components of `other` are separated by true gaps, so each must fit
  // inside a single component of this set.
  std::size_t i = 0;
  for (const auto& o : other.members_) {
    while (i < members_.size() && members_[i].hi < o.lo) ++i;
    if (i == members_.size() || members_[i].lo > o.lo || o.hi > members_[i].hi)
      return false;
  }
  return true;
}

Interval IntervalSet::bounding() const {
  if (members_.empty())
    throw std::domain_error("bounding: empty interval set");
  return Interval(members_.front().lo, members_.back().hi);
}

std::vector<OpenInterval> IntervalSet::gaps_within(const Interval& frame) const {
  if (!members_.empty() &&
      (members_.front().lo < frame.lo || members_.back().hi > frame.hi))
    throw std::invalid_argument("gaps_within: set extends beyond the frame");
  std::vector<OpenInterval> gaps;
  Rational cursor = frame.lo;
  for (const auto& iv : members_) {
    if (iv.lo > cursor) gaps.emplace_back(cursor, iv.lo);
    cursor = iv.hi;
  }
  if (cursor < frame.hi) gaps.emplace_back(std::move(cursor), frame.hi);
  return gaps;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  const auto& xs = a.members();
  const auto& ys = b.members();
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    const Rational& lo = std::max(xs[i].lo, ys[j].lo);
    const Rational& hi = std::min(xs[i].hi, ys[j].hi);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (xs[i].hi < ys[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalSet(std::move(out));
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.members();
  all.insert(all.end(), b.members().begin(), b.members().end());
  return IntervalSet(std::move(all));
}

}  // namespace cantor
