#pragma once

#include <span>
#include <string>

#include "cantor/interval.hpp"

namespace cantor {

// The arithmetic maps whose images of Cantor-type sets the library
// computes.  Each map is monotone in every coordinate on its stated
// domain, so the image of an axis-aligned box is simply the interval
// between the images of its two extreme corners -- that is what box_image
// exploits, and why images of interval unions stay exact.
class MapDescriptor {
 public:
  static MapDescriptor sum(const Rational& lambda);  // (x,y) -> x + lambda*y, lambda != 0
  static MapDescriptor product();                    // (x,y) -> x*y,     x, y >= 0
  static MapDescriptor quotient();                   // (x,y) -> x/y,     x >= 0, y > 0
  static MapDescriptor square_cube();                // (x,y) -> x^2 * y, x, y >= 0
  static MapDescriptor power(const Rational& t);     // (x,y) -> x * y^t, x, y >= 0, 1 <= t <= 64
  static MapDescriptor square();                     // x -> x^2,         x >= 0

  // Round-trips with parse_map: "sum:1/3", "product", "quotient",
  // "squarecube", "power:12/7", "square".
  const std::string& name() const { return name_; }
  int arity() const;

  // True when f(x,y) == f(y,x) on the whole domain; image enumeration then
  // walks unordered pairs only.
  bool symmetric() const;

  // Everything is exact except power() with a non-integer exponent, which
  // evaluates y^t in double precision; see evaluate().
  bool exact() const;

  // Interval between the images of the extreme corners.  Throws
  // std::invalid_argument on arity mismatch and std::domain_error when the
  // box leaves the map's domain.
  Interval box_image(std::span<const Interval> box) const;

  // Exact evaluation, with one documented exception: power() with a
  // non-integer t computes y^t in double and converts that double exactly
  // to a rational.  The relative error is below 2^-40, many orders of
  // magnitude tighter than any overlap/gap margin the demos decide.
  Rational evaluate(std::span<const Rational> point) const;

 private:
  enum class Kind { sum, product, quotient, square_cube, power, square };

  MapDescriptor(Kind kind, Rational param);

  Kind kind_;
  Rational param_;  // lambda for sum, t for power; unused otherwise
  std::string name_;
};

MapDescriptor parse_map(const std::string& text);

}  // namespace cantor
