#pragma once

#include "mspoly/brep.hpp"
#include "mspoly/multipoly.hpp"
#include "mspoly/series.hpp"

namespace mspoly {

// Partial cycle indicator Z_{n,k}: Cauchy-coefficient partition sum, equal
// to B_{n,k}(0!X_1, 1!X_2, ...).
MultiPoly cycle_indicator(long n, long k);
MultiPoly cycle_indicator_partition_sum(long n, long k);
MultiPoly cycle_indicator_full(long n); // Z_n = sum_k Z_{n,k}

// Exponential formula: taylor_n(e^f) = Z_n(t_1, ..., t_n) with
// t_j = D^j(f)(0)/(j-1)!, f in F_0, checked for n <= N.
bool exponential_formula_check(const PowerSeries& f, long big_n);

// Unsigned Lah polynomials (order-counting partition sum, equal to
// B_{n,k}(1!X_1, 2!X_2, ...)) and the signed self-orthogonal family
// L_{n,k} = sum_j (-1)^j A_{n,j} B_{j,k}.
MultiPoly lah_unsigned(long n, long k);
MultiPoly lah_unsigned_partition_sum(long n, long k);
MultiPoly lah_signed(long n, long k);

// Forest polynomials W_{n,k} = C(n-1,k-1) P^_{n-k,n} = B_{n,k}(T^_1, ...),
// their companion C(n,k) P^_{n-k,-k}, and the idempotency polynomials
// C(n,k) P^_{n-k,k} = B_{n,k}(X_0, 2X_1, 3X_2, ...).
MultiPoly forest_poly(long n, long k);
MultiPoly forest_companion(long n, long k);
MultiPoly idempotency_poly(long n, long k);

// Comtet's polynomials: differential recurrence route and the Stirling
// representation C_{n,k} = A_{n,k}(R^_0, ..., R^_{n-k}); the companion is
// B_{n,k}(R^_0, ...).
const MultiPoly& comtet(long n, long k);
MultiPoly comtet_via_stirling(long n, long k);
MultiPoly comtet_companion(long n, long k);
void clear_comtet_cache();

// Involution polynomials J_{g,n} = sum_k L^g_{k,1}(0) B_{n,k} and the
// involutory series they encode.
MultiPoly involution_poly(const PowerSeries& g, long n);
PowerSeries involution_series(const PowerSeries& g, long order);
bool involution_check(const PowerSeries& g, long big_n);

// Stock B-representable families used across the suites.
BRepFamily bell_family();
BRepFamily cycle_family();
BRepFamily lah_unsigned_family();
BRepFamily lah_signed_family();
BRepFamily forest_family();
BRepFamily comtet_family();

} // namespace mspoly
