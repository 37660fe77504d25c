#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace walkarea {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

}  // namespace walkarea
