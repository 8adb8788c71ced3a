#pragma once

#include <functional>

#include "mspoly/multipoly.hpp"
#include "mspoly/series.hpp"

namespace mspoly {

// --- Core families ------------------------------------------------------
//
// All table accessors are memoized behind internal locks and safe for
// concurrent use; cached entries equal fresh recomputation.

// Partial Bell polynomials B_{n,k}, differential recurrence route.
const MultiPoly& bell(long n, long k);
// Partition-sum route (independent oracle).
MultiPoly bell_partition_sum(long n, long k);

// Multivariate Stirling polynomials of the first kind A_{n,k}; recurrence,
// the associate-Bell closed form, and the partition-sum form.
const MultiPoly& stirling_a(long n, long k);
MultiPoly stirling_a_mainresult(long n, long k);
MultiPoly stirling_a_partition_sum(long n, long k);

// Associate Bell polynomials: B_{n,k} with X_1 -> 0.
MultiPoly assoc_bell(long n, long k);

MultiPoly complete_bell(long n);     // B_n = sum_k B_{n,k}
MultiPoly logarithmic_poly(long n);  // L_n = sum_k (-1)^{k-1}(k-1)! B_{n,k}
MultiPoly geometric_poly(long n);    // sum_k k! B_{n,k}

// Potential polynomials P^_{n,k} (any integer k; zero for n < 0) and their
// X_0 = 1 instances.
MultiPoly potential_hat(long n, long k);
MultiPoly potential(long n, long k);

MultiPoly reciprocal_poly_hat(long n); // R^_n = P^_{n,-1}
MultiPoly reciprocal_poly(long n);     // R_n
MultiPoly tree_poly_hat(long n);       // T^_n = P^_{n-1,n}, n >= 1
MultiPoly tree_poly(long n);           // T_n
MultiPoly factorial_hat(long n, long k);
MultiPoly factorial_poly(long n, long k);

// --- FdB polynomials and composition machinery ---------------------------

// P^phi(0): evaluate a polynomial at the Taylor coefficients of phi
// (X_0 -> phi(0)).
Rational at_taylor(const MultiPoly& p, const PowerSeries& phi);

// Phi_n(f) = sum_k D^k(f)(0) B_{n,k} (0-case) and the 1-case variant with
// Laurent coefficient functions D^k(f)(X_0).
MultiPoly fdb_poly(const PowerSeries& f, long n);
MultiPoly fdb_poly_hat(const LaurentPoly1& f, long n);

// First Composition Rule Phi_n(f o g) = Phi_n(f) o Phi_#(g), 0-case.
bool first_composition_rule_check(const PowerSeries& f, const PowerSeries& g, long n);

// Second Composition Rule (Jabotinsky), parts (i) and (ii).
bool jabotinsky_b(const PowerSeries& f, const PowerSeries& g, long n, long k);
bool jabotinsky_a(const PowerSeries& f, const PowerSeries& g, long n, long k);

// --- Stirling numbers through the polynomial families --------------------

Rational stirling1_via_unify(long n, long k);
Rational stirling2_via_unify(long n, long k);
Rational rho(long s); // R^_s(1, 1/2, ..., 1/(s+1))
Rational stirling1_via_potential(long n, long k);

// Drop all memoized family tables (cache-transparency tests).
void clear_family_caches();

} // namespace mspoly
