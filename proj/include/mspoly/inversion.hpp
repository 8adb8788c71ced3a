#pragma once

#include <vector>

#include "mspoly/multipoly.hpp"
#include "mspoly/series.hpp"

namespace mspoly {

// Univariate polynomials in t are MultiPoly values over the reserved
// variable index kTVar.
MultiPoly t_monomial(long k, const Rational& c = Rational(1));
MultiPoly t_from_coeffs(const std::vector<Rational>& coeffs);
Rational t_coeff(const MultiPoly& p, long k);
long t_degree(const MultiPoly& p);
MultiPoly t_scale_arg(const MultiPoly& p, const Rational& c); // t -> c t
MultiPoly falling_factorial_t(long k);                        // (t)_k

// Binomial sequence generated by an invertible phi:
// f_n(t) = sum_k B_{n,k}^phi(0) t^k.
class BinomialSeq {
public:
    BinomialSeq(PowerSeries phi, long max_n); // NotInvertible
    long max_n() const { return static_cast<long>(f_.size()) - 1; }
    const MultiPoly& f(long n) const;
    const PowerSeries& phi() const { return phi_; }

private:
    PowerSeries phi_;
    std::vector<MultiPoly> f_;
};

// Tests the Bell representation f_n(t) = B_n(t f_1'(0), ..., t f_n'(0))
// together with f_0 = 1 and deg f_n = n.
bool is_binomial(const std::vector<MultiPoly>& f);

// Every substitution identity of the binomial-sequence section, as exact
// polynomial identities in t for n <= max_n. Failures are reported by name.
std::vector<std::string> binomial_identity_failures(const BinomialSeq& seq, long max_n);

// Knuth-Pittel tree polynomials t_n(y): explicit double-sum coefficients,
// and the generating-series route through phi = logm o g o tau.
MultiPoly knuth_pittel(long n);
MultiPoly knuth_pittel_series_route(long n);

// Mullin-Rota connection coefficients c_{n,k} with f_n = sum_k c_{n,k} g_k;
// c_{n,k} = B_{n,k} at the Taylor coefficients of inv(phi_g) o phi_f.
std::vector<std::vector<Rational>> mullin_rota_connect(const BinomialSeq& f, const BinomialSeq& g);

// Both-or-none transfer f_n = sum_k g_k B_{n,k}(a_1, ...) and its inverse.
std::vector<MultiPoly> both_or_none_forward(const std::vector<MultiPoly>& g,
                                            const std::vector<Rational>& a);
std::vector<MultiPoly> both_or_none_backward(const std::vector<MultiPoly>& f,
                                             const std::vector<Rational>& a);

// Yang's special case: f_n(t) = sum_k (t)_k B_{n,k}(f_1(1), ...).
bool yang_check(const BinomialSeq& seq, long max_n);

// Classical Lagrange inversion polynomial Lambda_n = A_{n,1} and its two
// alternative representations.
MultiPoly lambda_classical(long n);
MultiPoly lambda_classical_comtet(long n);
MultiPoly lambda_classical_schlaefli(long n);

// A decorated pair (a, phi): a determines the case, phi is invertible.
enum class FormCase { Unit, Invertible };
struct SeriesForm {
    PowerSeries a;
    PowerSeries phi;
    FormCase tag;
};
SeriesForm make_form(PowerSeries a, PowerSeries phi);

// Conversion polynomials: Gamma maps the characterizing constants (c_n) of
// f = a (c o phi) to the Taylor coefficients (f_n); Gamma-bar maps back.
MultiPoly gamma_conv(long n, const SeriesForm& form);
MultiPoly gamma_bar(long n, const SeriesForm& form);

// Generalized Lagrange inversion polynomial
// Lambda_n(a,phi | b,psi) = Gammabar_n(b,psi) o A_{#,1} o Gamma_#(a,phi).
MultiPoly lambda_general(long n, const SeriesForm& form_a, const SeriesForm& form_b);

// Closed forms for the two special cases a = b = 1 and a = b = id.
MultiPoly lambda_special_units(long n, const PowerSeries& phi, const PowerSeries& psi);
MultiPoly lambda_special_id(long n, const PowerSeries& phi, const PowerSeries& psi);

// I^_{n,k} = sum_j (-1)^j (k+j)_{j-1} X_0^{-(k+1+j)} B_{n,j} and its
// X_0 = 1 instance.
MultiPoly ihat(long n, long k);
MultiPoly ipoly(long n, long k);

// Lambda_n of the modified inversion problem (series x + sum c_n/n! x^{sn+1}).
MultiPoly comtet_thm_f_lambda(long n, long s);
// Round trip: f from constants c (c_0 = 1), inverse coefficients through
// Lambda, checked as series to order N.
bool comtet_thm_f_round_trip(const std::vector<Rational>& c, long s, long big_n);

} // namespace mspoly
