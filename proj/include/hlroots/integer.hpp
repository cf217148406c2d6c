#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hlroots {

// Exact arbitrary-size scalars. Nothing in this library uses floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace hlroots
