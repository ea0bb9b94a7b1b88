#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace asymcone {

// All arithmetic in the pipeline is exact. Int is an arbitrary-precision
// signed integer, Rat an arbitrary-precision rational.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

// Parses "p" or "p/q" (q > 0) into an exact rational.
// Throws ParseError on malformed input; see errors.hpp.
Rat parse_rational(std::string_view text);

}  // namespace asymcone
