#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace leafcert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q > 0, always both parts.
std::string to_fraction_string(const Rational& r);
// Integer digits when the denominator is 1, "p/q" otherwise.
std::string to_compact_string(const Rational& r);

}  // namespace leafcert
