#include "leafcert/numbers.hpp"

namespace leafcert {

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_compact_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return to_fraction_string(r);
}

}  // namespace leafcert
