#pragma once

#include "mspoly/rational.hpp"

namespace mspoly {

Integer factorial(long n);

// Binomial coefficient extended to all integer pairs: for k >= 0 the usual
// product formula (valid for negative n as well); for k < 0 it is zero
// unless n < 0 and k <= n, in which case C(n,k) = C(n, n-k).
Rational binom(long n, long k);

// Falling power (x)_j = x(x-1)...(x-j+1), j >= 0, (x)_0 = 1; x any integer.
Rational falling(long x, long j);

// Signed Stirling numbers of the first kind and Stirling numbers of the
// second kind, memoized triangles. 0 <= k <= n required.
Rational stirling1(long n, long k);
Rational stirling2(long n, long k);
Rational stirling1_unsigned(long n, long k);

// n-th Bell number, row sum of the second-kind triangle.
Rational bell_number(long n);

} // namespace mspoly
