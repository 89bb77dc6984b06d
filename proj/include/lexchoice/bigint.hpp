#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lexchoice {

// Exact unbounded arithmetic for importance weights, convolution values and
// word keys. Positional weights overflow 64-bit quickly (33^19 already has
// 29 decimal digits), so nothing in this library does weight or key
// arithmetic in machine integers.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace lexchoice
