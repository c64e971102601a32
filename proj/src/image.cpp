#include "cantor/image.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <utility>

#include "cantor/cantor_sets.hpp"

namespace cantor {
namespace {

unsigned worker_count(std::size_t jobs) {
  // Small enumerations are not worth a thread spawn.
  if (jobs < 4096) return 1;
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("CANTOR_ARITH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = static_cast<unsigned>(std::min<long>(v, 256));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, jobs));
}

}  // namespace

ImageReport set_image(const MapDescriptor& map,
                      std::span<const IntervalSet> components) {
  if (static_cast<int>(components.size()) != map.arity())
    throw std::invalid_argument(
        "set_image: component count does not match map arity");
  for (const auto& c : components)
    if (c.empty()) return {};

  // Surface domain violations here, before any thread fan-out: the
  // bounding boxes cover every box evaluated below.
  {
    std::vector<Interval> hull;
    hull.reserve(components.size());
    for (const auto& c : components) hull.push_back(c.bounding());
    (void)map.box_image(std::span<const Interval>(hull.data(), hull.size()));
  }

  const std::vector<Interval>& a = components[0].members();
  const std::vector<Interval>& b =
      components[map.arity() == 2 ? 1 : 0].members();

  std::vector<std::pair<std::uint32_t, std::uint32_t>> boxes;
  if (map.arity() == 1) {
    boxes.reserve(a.size());
    for (std::uint32_t i = 0; i < a.size(); ++i) boxes.emplace_back(i, 0u);
  } else {
    const bool fold = map.symmetric() && components[0] == components[1];
    boxes.reserve(fold ? a.size() * (a.size() + 1) / 2 : a.size() * b.size());
    for (std::uint32_t i = 0; i < a.size(); ++i)
      for (std::uint32_t j = fold ? i : 0u; j < b.size(); ++j)
        boxes.emplace_back(i, j);
  }

  std::vector<Interval> results(boxes.size());
  const auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto [i, j] = boxes[k];
      if (map.arity() == 1) {
        const Interval box[1] = {a[i]};
        results[k] = map.box_image(box);
      } else {
        const Interval box[2] = {a[i], b[j]};
        results[k] = map.box_image(box);
      }
    }
  };

  const unsigned workers = worker_count(boxes.size());
  if (workers <= 1) {
    run(0, boxes.size());
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (boxes.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(boxes.size(), begin + chunk);
      if (begin < end) pool.emplace_back(run, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  ImageReport report;
  report.image = IntervalSet(std::move(results));
  report.boxes_evaluated = static_cast<long>(boxes.size());
  if (!report.image.empty())
    report.gaps = report.image.gaps_within(report.image.bounding());
  return report;
}

ImageReport set_image(const MapDescriptor& map, const IntervalSet& only) {
  const IntervalSet comps[1] = {only};
  return set_image(map, std::span<const IntervalSet>(comps, 1));
}

ImageReport set_image(const MapDescriptor& map, const IntervalSet& a,
                      const IntervalSet& b) {
  const IntervalSet comps[2] = {a, b};
  return set_image(map, std::span<const IntervalSet>(comps, 2));
}

IntervalSet minkowski_sum(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty() || b.empty()) return {};
  return set_image(MapDescriptor::sum(Rational(1)), a, b).image;
}

IntervalSet iterated_sum_of_squares(const IntervalSet& s, int terms) {
  if (terms < 1)
    throw std::invalid_argument("iterated_sum_of_squares: need >= 1 term");
  if (s.empty()) return {};
  const IntervalSet squares = set_image(MapDescriptor::square(), s).image;
  IntervalSet acc = squares;
  for (int k = 1; k < terms; ++k) acc = minkowski_sum(acc, squares);
  return acc;
}

RefinementCheck refinement_invariant(const MapDescriptor& map,
                                     const Interval& i1, const Interval& i2,
                                     const Rational& keep) {
  if (map.arity() != 2)
    throw std::invalid_argument("refinement_invariant: needs a binary map");
  if (i1.length() != i2.length())
    throw std::invalid_argument(
        "refinement_invariant: intervals must have equal length");
  const bool same = i1 == i2;
  const bool disjoint = i1.hi < i2.lo || i2.hi < i1.lo;
  if (!same && !disjoint)
    throw std::invalid_argument(
        "refinement_invariant: intervals must be identical or disjoint");

  RefinementCheck check;
  const Interval whole_box[2] = {i1, i2};
  check.whole = map.box_image(whole_box);

  const IntervalSet r1 = middle_refine(IntervalSet({i1}), keep);
  const IntervalSet r2 = middle_refine(IntervalSet({i2}), keep);
  std::vector<Interval> pieces;
  pieces.reserve(r1.component_count() * r2.component_count());
  for (const auto& p : r1.members())
    for (const auto& q : r2.members()) {
      const Interval box[2] = {p, q};
      pieces.push_back(map.box_image(box));
    }
  const IntervalSet refined(std::move(pieces));

  // Monotone corner images keep the extreme corners, so the refined image
  // shares the endpoints of `whole`; coverage is exactly "no gaps".
  check.missing = refined.gaps_within(check.whole);
  check.covered = check.missing.empty();
  return check;
}

}  // namespace cantor
