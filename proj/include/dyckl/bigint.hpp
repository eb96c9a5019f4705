#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dyckl {

// All counts and statistic values are exact unbounded integers.
using Int = boost::multiprecision::cpp_int;

// Binomial coefficient with the convention C(a,b) = 0 when b < 0 or a < b
// (negative a included). This convention keeps the closed-form counting
// formulas valid at small n without case splits.
Int binomial(long long a, long long b);

// Catalan number C_n = C(2n,n)/(n+1); 0 for n < 0.
Int catalan_number(long long n);

} // namespace dyckl
