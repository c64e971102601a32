#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "cantor/cantor_sets.hpp"
#include "cantor/image.hpp"
#include "doctest.h"

using namespace cantor;

namespace {

Interval iv(long a, long b, long c, long d) {
  return Interval(make_rational(a, b), make_rational(c, d));
}

const IntervalSet& c1() {
  static const IntervalSet s({iv(0, 1, 1, 3), iv(2, 3, 1, 1)});
  return s;
}

Rational eval2(const MapDescriptor& map, const Rational& x, const Rational& y) {
  const Rational point[2] = {x, y};
  return map.evaluate(point);
}

}  // namespace

TEST_CASE("map descriptors expose arity, symmetry, exactness and names") {
  CHECK(MapDescriptor::sum(make_rational(1, 3)).name() == "sum:1/3");
  CHECK(MapDescriptor::product().name() == "product");
  CHECK(MapDescriptor::power(make_rational(12, 7)).name() == "power:12/7");
  CHECK(MapDescriptor::square().arity() == 1);
  CHECK(MapDescriptor::product().arity() == 2);
  CHECK(MapDescriptor::product().symmetric());
  CHECK(MapDescriptor::sum(Rational(1)).symmetric());
  CHECK_FALSE(MapDescriptor::sum(make_rational(1, 3)).symmetric());
  CHECK(MapDescriptor::power(Rational(1)).symmetric());
  CHECK_FALSE(MapDescriptor::power(Rational(2)).symmetric());
  CHECK_FALSE(MapDescriptor::quotient().symmetric());
  CHECK(MapDescriptor::power(Rational(2)).exact());
  CHECK_FALSE(MapDescriptor::power(make_rational(3, 2)).exact());
  CHECK(MapDescriptor::quotient().exact());
  CHECK_THROWS_AS(MapDescriptor::sum(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(MapDescriptor::power(make_rational(2, 3)),
                  std::domain_error);
  CHECK_THROWS_AS(MapDescriptor::power(Rational(65)), std::domain_error);
}

TEST_CASE("parse_map round-trips every descriptor name") {
  for (const auto& name : {"sum:1/3", "sum:-2/5", "product", "quotient",
                           "squarecube", "power:12/7", "power:2", "square"}) {
    CHECK(parse_map(name).name() == name);
  }
  CHECK_THROWS_AS(parse_map("sum"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("product:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("frobnicate"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("sum:0"), std::domain_error);
  CHECK_THROWS_AS(parse_map("sum:x"), std::invalid_argument);
}

TEST_CASE("evaluate computes the map pointwise") {
  CHECK(eval2(MapDescriptor::sum(make_rational(1, 3)), Rational(1),
              make_rational(1, 2)) == make_rational(7, 6));
  CHECK(eval2(MapDescriptor::product(), make_rational(2, 3),
              make_rational(3, 4)) == make_rational(1, 2));
  CHECK(eval2(MapDescriptor::quotient(), Rational(1), make_rational(3, 4)) ==
        make_rational(4, 3));
  CHECK(eval2(MapDescriptor::square_cube(), make_rational(2, 3),
              make_rational(3, 4)) == make_rational(1, 3));
  CHECK(eval2(MapDescriptor::power(Rational(2)), make_rational(2, 3),
              make_rational(3, 4)) == make_rational(3, 8));
  {
    const Rational point[1] = {make_rational(3, 4)};
    CHECK(MapDescriptor::square().evaluate(point) == make_rational(9, 16));
    CHECK_THROWS_AS(MapDescriptor::product().evaluate(point),
                    std::invalid_argument);
  }
  {
    // non-integer exponent goes through double: near-exact, not exact
    const Rational v = eval2(MapDescriptor::power(make_rational(3, 2)),
                             Rational(1), make_rational(4, 9));
    const Rational target = make_rational(8, 27);
    Rational err = v - target;
    if (err < 0) err = -err;
    CHECK(err < make_rational(1, 1000000000));
  }
  {
    const Rational point[2] = {Rational(1), Rational(0)};
    CHECK_THROWS_AS(MapDescriptor::quotient().evaluate(point),
                    std::domain_error);
  }
}

TEST_CASE("box_image spans the two extreme corners") {
  const Interval box[2] = {iv(2, 3, 1, 1), iv(2, 3, 1, 1)};
  CHECK(MapDescriptor::product().box_image(box) == iv(4, 9, 1, 1));
  CHECK(MapDescriptor::square_cube().box_image(box) == iv(8, 27, 1, 1));
  CHECK(MapDescriptor::quotient().box_image(box) == iv(2, 3, 3, 2));
  CHECK(MapDescriptor::sum(Rational(1)).box_image(box) == iv(4, 3, 2, 1));
  {
    const Interval point_box[2] = {iv(2, 3, 2, 3), iv(2, 3, 2, 3)};
    CHECK(MapDescriptor::product().box_image(point_box) == iv(4, 9, 4, 9));
  }
  {
    const Interval one[1] = {iv(2, 3, 1, 1)};
    CHECK(MapDescriptor::square().box_image(one) == iv(4, 9, 1, 1));
    CHECK_THROWS_AS(MapDescriptor::product().box_image(one),
                    std::invalid_argument);
  }
  {
    const Interval negative[2] = {iv(-1, 1, 1, 1), iv(0, 1, 1, 1)};
    CHECK_THROWS_AS(MapDescriptor::product().box_image(negative),
                    std::domain_error);
    CHECK_NOTHROW(MapDescriptor::sum(Rational(2)).box_image(negative));
    const Interval zero_divisor[2] = {iv(0, 1, 1, 1), iv(0, 1, 1, 1)};
    CHECK_THROWS_AS(MapDescriptor::quotient().box_image(zero_divisor),
                    std::domain_error);
  }
}

TEST_CASE("box_image bounds every sample of a grid over the box") {
  const std::vector<MapDescriptor> maps = {
      MapDescriptor::sum(make_rational(-2, 5)), MapDescriptor::product(),
      MapDescriptor::quotient(), MapDescriptor::square_cube(),
      MapDescriptor::power(Rational(3))};
  const Interval box[2] = {iv(1, 4, 5, 4), iv(1, 3, 7, 3)};
  const int steps = 16;
  for (const auto& map : maps) {
    const Interval hull = map.box_image(box);
    bool lo_attained = false, hi_attained = false;
    for (int i = 0; i <= steps; ++i) {
      for (int j = 0; j <= steps; ++j) {
        const Rational x =
            box[0].lo + box[0].length() * make_rational(i, steps);
        const Rational y =
            box[1].lo + box[1].length() * make_rational(j, steps);
        const Rational v = eval2(map, x, y);
        CHECK(hull.contains(v));
        lo_attained = lo_attained || v == hull.lo;
        hi_attained = hi_attained || v == hull.hi;
      }
    }
    CAPTURE(map.name());
    CHECK(lo_attained);  // the extreme corners sit on the grid
    CHECK(hi_attained);
  }
}

TEST_CASE("set_image enumerates boxes and coalesces the result") {
  {
    const ImageReport r = set_image(MapDescriptor::product(), c1(), c1());
    CHECK(r.image == IntervalSet({iv(0, 1, 1, 3), iv(4, 9, 1, 1)}));
    CHECK(r.boxes_evaluated == 3);  // symmetric fold: unordered pairs only
    REQUIRE(r.gaps.size() == 1);
    CHECK(r.gaps.front() ==
          OpenInterval(make_rational(1, 3), make_rational(4, 9)));
  }
  {
    const ImageReport r = set_image(MapDescriptor::sum(Rational(1)), c1(), c1());
    CHECK(r.image == IntervalSet({iv(0, 1, 2, 1)}));
    CHECK(r.gaps.empty());
  }
  {
    const ImageReport r = set_image(MapDescriptor::square(), c1());
    CHECK(r.image == IntervalSet({iv(0, 1, 1, 9), iv(4, 9, 1, 1)}));
    CHECK(r.boxes_evaluated == 2);
  }
  {
    // different second component: no fold, 2 * 4 boxes
    const ImageReport r =
        set_image(MapDescriptor::product(), c1(), generate_standard(2));
    CHECK(r.boxes_evaluated == 8);
  }
  {
    const ImageReport r = set_image(MapDescriptor::product(), c1(),
                                    IntervalSet());
    CHECK(r.image.empty());
    CHECK(r.boxes_evaluated == 0);
    CHECK(r.gaps.empty());
  }
  CHECK_THROWS_AS(set_image(MapDescriptor::square(), c1(), c1()),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      set_image(MapDescriptor::quotient(), c1(), generate_standard(1)),
      std::domain_error);  // divisor component reaches 0
}

TEST_CASE("set_image respects symmetry and nesting") {
  const IntervalSet a = generate_upper(3);
  const IntervalSet b = generate_selfsim(make_rational(1, 4), 3);
  CHECK(set_image(MapDescriptor::product(), a, b).image ==
        set_image(MapDescriptor::product(), b, a).image);
  for (const auto& map :
       {MapDescriptor::product(), MapDescriptor::square_cube(),
        MapDescriptor::quotient()}) {
    for (int n = 1; n <= 8; ++n) {
      const IntervalSet coarse =
          set_image(map, generate_upper(n), generate_upper(n)).image;
      const IntervalSet fine =
          set_image(map, generate_upper(n + 1), generate_upper(n + 1)).image;
      CHECK(coarse.contains(fine));
    }
  }
}

TEST_CASE("quotient image of a set with itself is closed under reciprocals") {
  for (int n = 1; n <= 6; ++n) {
    const IntervalSet upper = generate_upper(n);
    const IntervalSet image =
        set_image(MapDescriptor::quotient(), upper, upper).image;
    std::vector<Interval> flipped;
    for (const auto& m : image.members())
      flipped.emplace_back(Rational(1) / m.hi, Rational(1) / m.lo);
    CHECK(IntervalSet(flipped) == image);
  }
}

TEST_CASE("threaded and serial enumeration agree box for box") {
  const IntervalSet big = generate_upper(8);  // 128 components, 8256 pairs
  ::setenv("CANTOR_ARITH_THREADS", "1", 1);
  const ImageReport serial = set_image(MapDescriptor::product(), big, big);
  ::setenv("CANTOR_ARITH_THREADS", "3", 1);
  const ImageReport threaded = set_image(MapDescriptor::product(), big, big);
  ::unsetenv("CANTOR_ARITH_THREADS");
  CHECK(serial.boxes_evaluated == 8256);
  CHECK(threaded.boxes_evaluated == 8256);
  CHECK(serial.image == threaded.image);
  CHECK(serial.gaps.size() == threaded.gaps.size());
}

TEST_CASE("minkowski_sum") {
  CHECK(minkowski_sum(c1(), c1()) == IntervalSet({iv(0, 1, 2, 1)}));
  CHECK(minkowski_sum(c1(), IntervalSet({iv(0, 1, 0, 1)})) == c1());
  const IntervalSet squares({iv(0, 1, 1, 9), iv(4, 9, 1, 1)});
  CHECK(minkowski_sum(squares, squares) ==
        IntervalSet({iv(0, 1, 2, 9), iv(4, 9, 2, 1)}));
  CHECK(minkowski_sum(c1(), IntervalSet()).empty());
}

TEST_CASE("iterated_sum_of_squares accumulates minkowski powers") {
  CHECK(iterated_sum_of_squares(c1(), 1) ==
        IntervalSet({iv(0, 1, 1, 9), iv(4, 9, 1, 1)}));
  const IntervalSet three = iterated_sum_of_squares(c1(), 3);
  CHECK(three == IntervalSet({iv(0, 1, 1, 3), iv(4, 9, 3, 1)}));
  CHECK_FALSE(three.contains(IntervalSet({iv(0, 1, 1, 1)})));
  for (int n = 0; n <= 3; ++n) {
    const IntervalSet four =
        iterated_sum_of_squares(generate_standard(n), 4);
    CHECK(four.contains(IntervalSet({iv(0, 1, 1, 1)})));
  }
  CHECK_THROWS_AS(iterated_sum_of_squares(c1(), 0), std::invalid_argument);
}

TEST_CASE("refinement_invariant compares a box image with its refinement") {
  {
    const RefinementCheck check =
        refinement_invariant(MapDescriptor::square_cube(), iv(2, 3, 7, 9),
                             iv(2, 3, 7, 9), make_rational(1, 3));
    CHECK(check.covered);
    CHECK(check.whole == iv(8, 27, 343, 729));
    CHECK(check.missing.empty());
  }
  {
    const RefinementCheck check =
        refinement_invariant(MapDescriptor::product(), iv(62, 81, 63, 81),
                             iv(62, 81, 63, 81), make_rational(1, 3));
    CHECK_FALSE(check.covered);
    REQUIRE(check.missing.size() == 1);
    CHECK(check.missing.front() ==
          OpenInterval(make_rational(35343, 59049), make_rational(35344, 59049)));
  }
  {
    // disjoint arguments of equal length: the four cross boxes chain up
    const RefinementCheck check =
        refinement_invariant(MapDescriptor::product(), iv(62, 81, 63, 81),
                             iv(72, 81, 73, 81), make_rational(1, 3));
    CHECK(check.covered);
    CHECK(check.whole == iv(40176, 59049, 41391, 59049));
  }
  CHECK_THROWS_AS(
      refinement_invariant(MapDescriptor::product(), iv(62, 81, 63, 81),
                           iv(8, 9, 1, 1), make_rational(1, 3)),
      std::invalid_argument);  // unequal lengths
  CHECK_THROWS_AS(
      refinement_invariant(MapDescriptor::product(), iv(0, 1, 1, 3),
                           iv(1, 6, 1, 2), make_rational(1, 3)),
      std::invalid_argument);  // partial overlap
  CHECK_THROWS_AS(
      refinement_invariant(MapDescriptor::square(), iv(0, 1, 1, 3),
                           iv(0, 1, 1, 3), make_rational(1, 3)),
      std::invalid_argument);  // unary map
}
