#include "cantor/interval.hpp"

#include <stdexcept>

namespace cantor {

Interval::Interval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi)
    throw std::invalid_argument("interval: endpoints out of order (" +
                                fraction_string(lo) + " > " +
                                fraction_string(hi) + ")");
}

OpenInterval::OpenInterval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo >= hi)
    throw std::invalid_argument("open interval: needs lo < hi, got (" +
                                fraction_string(lo) + ", " +
                                fraction_string(hi) + ")");
}

}  // namespace cantor
