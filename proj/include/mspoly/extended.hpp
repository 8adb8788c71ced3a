#pragma once

#include <vector>

#include "mspoly/brep.hpp"
#include "mspoly/multipoly.hpp"
#include "mspoly/series.hpp"

namespace mspoly {

// Integer-index Stirling polynomials, redefined through
//   B_{n,k} = C(n, n-k) P^_{n-k,k}(X_1/1, X_2/2, ...),
//   A_{n,k} = C(n-1, k-1) P^_{n-k,n}(R^_0(X_1/1), R^_1(X_1/1, X_2/2), ...),
// with the extended binomial convention. Both agree with the classical
// tables on 0 <= k <= n and vanish iff k > n or n, k have unequal signs.
MultiPoly bell_ext(long n, long k);
MultiPoly stirling_a_ext(long n, long k);

// A_{n,k} = (-1)^{n-k} B_{-k,-n}.
bool reciprocity_check(long n, long k);
// Qbar_{n,k} = (-1)^{n-k} Q_{-k,-n} for a regular B-representable family.
bool general_reciprocity(const BRepFamily& fam, long n, long k);

// B_{n,n-k} = sum_j C(n,k+j) X_1^{n-k-j} Btilde_{k+j,j}, 0 <= k <= n.
MultiPoly bell_via_assoc(long n, long k);

// Schloemilch-Schlaefli: A_{n,n-k} as an alternating binomial-Bell sum, and
// the generalized forms for B-representable families (right-hand sides).
MultiPoly schloemilch_schlaefli(long n, long k);
MultiPoly schloemilch_general_bar(const BRepFamily& fam, long n, long k); // = Qbar_{n,n-k}
MultiPoly schloemilch_general(const BRepFamily& fam, long n, long k);     // = Q_{n,n-k}

// P^_{n-k,k}(X_j/j) = (k/n) P^_{n-k,-n}(A_{j,1}/j) as polynomials.
bool potential_reciprocity(long n, long k);

// Coefficient reciprocity a_{n,k} = (k/n) b_{-k,-n} for phi^k and
// inv(phi)^k, both sides realized through potential polynomials; for k >= 1
// the a-side is cross-checked against direct series arithmetic.
bool schur_jabotinsky(const PowerSeries& phi, long n, long k);

// P_{n,-k} = k C(m+k,m) sum_j (-1)^j/(k+j) C(m,j) P_{n,j}, m >= n >= 0,
// (-k) not in {0..m}.
bool comtet_thm_c(long n, long k, long m);

// Melzak's formula for a degree-n polynomial p in the reserved variable,
// as an exact identity in the polynomial ring, plus a sample-point mode.
bool melzak_ring(const MultiPoly& p, long n, long m, long k);
bool melzak_samples(const MultiPoly& p, long n, long m, long k, const std::vector<Rational>& xs);

} // namespace mspoly
