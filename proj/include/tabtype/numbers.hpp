#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tabtype {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

}  // namespace tabtype
