#pragma once

#include <map>
#include <vector>

#include "mspoly/multipoly.hpp"
#include "mspoly/rational.hpp"

namespace mspoly {

// Univariate Laurent polynomial in x, the left operand of 1-case composition.
class LaurentPoly1 {
public:
    LaurentPoly1() = default;
    static LaurentPoly1 xpow(long k, const Rational& c = Rational(1));

    void add(long k, const Rational& c);
    const std::map<long, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // k-th derivative evaluated at the symbolic point X_0.
    MultiPoly derivative_at_x0(long k) const;
    Rational derivative_at(long k, const Rational& x0) const;

private:
    std::map<long, Rational> coeffs_;
};

// Truncated formal power series over Rational. A value of order N carries
// the ordinary coefficients c_0..c_N exactly; binary operations truncate to
// the smaller order. taylor(n) = n! c_n is the view the polynomial families
// work with.
class PowerSeries {
public:
    PowerSeries() : coeffs_{Rational(0)} {}

    static PowerSeries zero(long order);
    static PowerSeries constant(const Rational& v, long order);
    static PowerSeries identity(long order);
    static PowerSeries from_ordinary(std::vector<Rational> coeffs);
    static PowerSeries from_taylor(const std::vector<Rational>& taylor);

    static PowerSeries exp(long order);       // e^x
    static PowerSeries expm(long order);      // e^x - 1
    static PowerSeries logm(long order);      // log(1+x), Mercator
    static PowerSeries geometric(long order); // 1/(1-x)

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& coeff(long n) const;
    Rational taylor(long n) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_F0() const { return coeffs_[0] == 0; }
    bool is_F1() const { return coeffs_[0] != 0; }
    bool is_invertible() const { return coeffs_[0] == 0 && order() >= 1 && coeffs_[1] != 0; }
    bool is_zero() const;

    PowerSeries truncate(long n) const;

    PowerSeries operator-() const;
    PowerSeries operator+(const PowerSeries& g) const;
    PowerSeries operator-(const PowerSeries& g) const;
    PowerSeries operator*(const PowerSeries& g) const;
    PowerSeries operator*(const Rational& c) const;
    bool operator==(const PowerSeries& g) const { return coeffs_ == g.coeffs_; }
    bool operator!=(const PowerSeries& g) const { return !(*this == g); }

    PowerSeries pow(long k) const; // negative k via reciprocal

    PowerSeries reciprocal() const; // NotAUnit when c_0 = 0
    PowerSeries derive() const;     // order drops by one
    PowerSeries times_x() const;    // order grows by one
    PowerSeries div_x() const;      // requires c_0 = 0

private:
    std::vector<Rational> coeffs_; // c_0..c_N
};

PowerSeries compose_0case(const PowerSeries& f, const PowerSeries& g);
PowerSeries compose_1case(const LaurentPoly1& f, const PowerSeries& g);

// D_phi(f) = D(phi)^{-1} D(f); NotAUnit when D(phi)(0) = 0.
PowerSeries lie_derive(const PowerSeries& phi, const PowerSeries& f);

// Compositional inverse, computed along two independent routes (Stirling
// polynomials A_{n,1} and iterated D_f) which must agree.
PowerSeries invert_series(const PowerSeries& f);

PowerSeries exp_series(const PowerSeries& phi); // e^phi, phi in F_0

bool agree_to_order(const PowerSeries& a, const PowerSeries& b, long n);

} // namespace mspoly
