#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "mspoly/monomial.hpp"
#include "mspoly/rational.hpp"

namespace mspoly {

// Sparse multivariate Laurent polynomial over the rationals. Zero is the
// empty term map; equality is structural on the canonical term set. Values
// are immutable in spirit: every operation returns a fresh polynomial.
class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;
    using Assignment = std::map<int, MultiPoly>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c);
    explicit MultiPoly(long c);
    static MultiPoly variable(int var, int exp = 1);
    static MultiPoly term(const Rational& c, const Monomial& m);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Exactly one term whose inverse is again a legal monomial.
    bool is_invertible_monomial() const;
    Rational constant_value() const; // requires is_constant()
    Rational coeff(const Monomial& m) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& q) const;
    MultiPoly operator-(const MultiPoly& q) const;
    MultiPoly operator*(const MultiPoly& q) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly& operator+=(const MultiPoly& q);
    MultiPoly& operator-=(const MultiPoly& q);

    bool operator==(const MultiPoly& q) const { return terms_ == q.terms_; }
    bool operator!=(const MultiPoly& q) const { return !(*this == q); }

    // p^k; k < 0 requires a single-term unit monomial.
    MultiPoly pow(long k) const;

    MultiPoly derivative(int var) const;

    // Simultaneous substitution; variables absent from the assignment stay
    // fixed. A variable with a negative exponent must receive an invertible
    // value (nonzero scalar or unit monomial).
    MultiPoly substitute(const Assignment& sigma) const;

    // X_j -> value for every variable, evaluated to a scalar.
    Rational unify(const Rational& value) const;

    // (homogeneous degree, isobaric weight); a slot is nullopt when terms
    // are not uniform in it. Zero polynomial reports (0, 0).
    std::pair<std::optional<long long>, std::optional<long long>> grading() const;

    // Largest variable index that occurs (-1 for constants).
    int max_variable() const;
    bool contains_variable(int var) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
};

MultiPoly operator*(const Rational& c, const MultiPoly& p);

// Substitute Q_j for X_j for every variable occurring in p, index 0
// included (the paper's P o Q_# with Q_0 supplied by the family).
MultiPoly compose_family(const MultiPoly& p, const std::function<MultiPoly(int)>& family);

// Scalar evaluation X_j -> value(j). ZeroDenominator when a zero meets a
// negative exponent.
Rational evaluate(const MultiPoly& p, const std::function<Rational(int)>& value);

} // namespace mspoly
