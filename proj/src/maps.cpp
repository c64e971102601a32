#include "cantor/maps.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace cantor {
namespace {

// Parameter spelling used in map names: integers stay bare ("power:2")
// so names survive a parse_map round trip.
std::string param_text(const Rational& param) {
  if (param.get_den() == 1) return param.get_num().get_str();
  return fraction_string(param);
}

}  // namespace

MapDescriptor::MapDescriptor(Kind kind, Rational param)
    : kind_(kind), param_(std::move(param)) {
  switch (kind_) {
    case Kind::sum:
      name_ = "sum:" + param_text(param_);
      break;
    case Kind::product:
      name_ = "product";
      break;
    case Kind::quotient:
      name_ = "quotient";
      break;
    case Kind::square_cube:
      name_ = "squarecube";
      break;
    case Kind::power:
      name_ = "power:" + param_text(param_);
      break;
    case Kind::square:
      name_ = "square";
      break;
  }
}

MapDescriptor MapDescriptor::sum(const Rational& lambda) {
  if (lambda == 0)
    throw std::domain_error("sum map: coefficient must be nonzero");
  return MapDescriptor(Kind::sum, lambda);
}

MapDescriptor MapDescriptor::product() {
  return MapDescriptor(Kind::product, Rational(0));
}

MapDescriptor MapDescriptor::quotient() {
  return MapDescriptor(Kind::quotient, Rational(0));
}

MapDescriptor MapDescriptor::square_cube() {
  return MapDescriptor(Kind::square_cube, Rational(0));
}

MapDescriptor MapDescriptor::power(const Rational& t) {
  if (t < 1 || t > 64)
    throw std::domain_error("power map: exponent must lie in [1, 64]");
  return MapDescriptor(Kind::power, t);
}

MapDescriptor MapDescriptor::square() {
  return MapDescriptor(Kind::square, Rational(0));
}

int MapDescriptor::arity() const { return kind_ == Kind::square ? 1 : 2; }

bool MapDescriptor::symmetric() const {
  switch (kind_) {
    case Kind::product:
      return true;
    case Kind::sum:
    case Kind::power:
      return param_ == 1;
    default:
      return false;
  }
}

bool MapDescriptor::exact() const {
  return kind_ != Kind::power || param_.get_den() == 1;
}

Rational MapDescriptor::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != arity())
    throw std::invalid_argument("evaluate: wrong number of coordinates");
  switch (kind_) {
    case Kind::sum:
      return point[0] + param_ * point[1];
    case Kind::product:
      return point[0] * point[1];
    case Kind::quotient:
      if (point[1] == 0)
        throw std::domain_error("evaluate: division by zero");
      return point[0] / point[1];
    case Kind::square_cube:
      return point[0] * point[0] * point[1];
    case Kind::square:
      return point[0] * point[0];
    case Kind::power:
      if (param_.get_den() == 1)
        return point[0] * pow_rational(point[1], param_.get_num().get_ui());
      // Non-integer exponent: y^t through double.  mpq_class(double) is
      // exact, so the only error is the pow() rounding itself.
      return point[0] * Rational(std::pow(point[1].get_d(), param_.get_d()));
  }
  throw std::logic_error("evaluate: unreachable");
}

Interval MapDescriptor::box_image(std::span<const Interval> box) const {
  if (static_cast<int>(box.size()) != arity())
    throw std::invalid_argument("box_image: expected " +
                                std::to_string(arity()) + " interval(s)");
  switch (kind_) {
    case Kind::sum:
      break;  // defined on all of R^2
    case Kind::quotient:
      if (box[0].lo < 0)
        throw std::domain_error("box_image: quotient needs x >= 0");
      if (box[1].lo <= 0)
        throw std::domain_error("box_image: quotient needs y > 0");
      break;
    default:
      for (const auto& side : box)
        if (side.lo < 0)
          throw std::domain_error("box_image: " + name_ +
                                  " is only handled on [0, inf) coordinates");
  }
  std::array<Rational, 2> lo_corner, hi_corner;
  for (int i = 0; i < arity(); ++i) {
    // All maps increase in every coordinate except the quotient's divisor
    // and the sum's second coordinate under a negative coefficient.
    const bool decreasing =
        (kind_ == Kind::quotient && i == 1) ||
        (kind_ == Kind::sum && i == 1 && param_ < 0);
    lo_corner[static_cast<std::size_t>(i)] = decreasing ? box[i].hi : box[i].lo;
    hi_corner[static_cast<std::size_t>(i)] = decreasing ? box[i].lo : box[i].hi;
  }
  const std::span<const Rational> lo_span(lo_corner.data(),
                                          static_cast<std::size_t>(arity()));
  const std::span<const Rational> hi_span(hi_corner.data(),
                                          static_cast<std::size_t>(arity()));
  return Interval(evaluate(lo_span), evaluate(hi_span));
}

MapDescriptor parse_map(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const bool has_param = colon != std::string::npos;
  const auto param = [&] {
    if (!has_param)
      throw std::invalid_argument("map \"" + head +
                                  "\" needs a parameter, e.g. \"" + head +
                                  ":1/3\"");
    return parse_rational(text.substr(colon + 1));
  };
  if (head == "sum") return MapDescriptor::sum(param());
  if (head == "power") return MapDescriptor::power(param());
  if (has_param)
    throw std::invalid_argument("map \"" + head + "\" takes no parameter");
  if (head == "product") return MapDescriptor::product();
  if (head == "quotient") return MapDescriptor::quotient();
  if (head == "squarecube") return MapDescriptor::square_cube();
  if (head == "square") return MapDescriptor::square();
  throw std::invalid_argument(
      "unknown map \"" + text +
      "\"; expected sum:L, product, quotient, squarecube, power:T or square");
}

}  // namespace cantor
