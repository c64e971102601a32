#pragma once

#include <span>
#include <vector>

#include "cantor/interval_set.hpp"
#include "cantor/maps.hpp"

namespace cantor {

struct ImageReport {
  IntervalSet image;
  long boxes_evaluated = 0;           // unordered-pair count when symmetry folds
  std::vector<OpenInterval> gaps;     // gaps inside the image's own bounding hull
};

// Exact image of a product of interval sets under a monotone map: every
// combination of components forms a box, box images are collected and
// coalesced into canonical form.  When the map is symmetric and both
// components are the same set, only unordered pairs are enumerated.  Large
// enumerations are spread over threads (capped by the CANTOR_ARITH_THREADS
// environment variable); the result is bit-identical for any thread count,
// since workers only fill disjoint slots of a pre-sized buffer that is
// sorted afterwards.
ImageReport set_image(const MapDescriptor& map,
                      std::span<const IntervalSet> components);
ImageReport set_image(const MapDescriptor& map, const IntervalSet& only);
ImageReport set_image(const MapDescriptor& map, const IntervalSet& a,
                      const IntervalSet& b);

// {a + b : a in A, b in B}.
IntervalSet minkowski_sum(const IntervalSet& a, const IntervalSet& b);

// {x_1^2 + ... + x_k^2 : x_i in s} for k == terms; s must lie in [0, inf).
IntervalSet iterated_sum_of_squares(const IntervalSet& s, int terms);

struct RefinementCheck {
  bool covered = false;               // the refined image still fills the box image
  Interval whole;                     // image of the unrefined box
  std::vector<OpenInterval> missing;  // parts of `whole` the refinement loses
};

// One step of the refinement argument for a binary map: compare the image
// of i1 x i2 with the union of the four box images obtained after middle-
// refining each interval with `keep`.  i1 and i2 must have equal length
// and be identical or disjoint (the Cantor construction never produces
// partial overlap).
RefinementCheck refinement_invariant(const MapDescriptor& map,
                                     const Interval& i1, const Interval& i2,
                                     const Rational& keep);

}  // namespace cantor
