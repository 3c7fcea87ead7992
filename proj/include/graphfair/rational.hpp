#ifndef GRAPHFAIR_RATIONAL_HPP
#define GRAPHFAIR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "graphfair/errors.hpp"

namespace graphfair {

// Exact arbitrary-precision rational, always kept in lowest terms with a
// positive denominator. Envy margins in the hidden-set lower-bound family
// involve denominators like 2^512, so fixed-width arithmetic is not an option.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a bare integer "p". Whitespace is not accepted.
Rational parse_rational(const std::string& text);

// Serializes as "p/q", collapsing to "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace graphfair

#endif  // GRAPHFAIR_RATIONAL_HPP
