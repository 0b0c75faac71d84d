#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ribbon {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Natural log of a positive big integer, usable even when the value
// does not fit in a double.
double log_big(const BigInt& v);

}  // namespace ribbon
