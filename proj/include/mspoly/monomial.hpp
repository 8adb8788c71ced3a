#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mspoly/errors.hpp"

namespace mspoly {

// Variable index of the reserved univariate indeterminate used for
// polynomials in t (binomial sequences, Knuth-Pittel, Melzak).
constexpr int kTVar = 1000000;

// Power product X_{j1}^{e1} X_{j2}^{e2} ... with integer exponents.
// Stored sparse and sorted by variable index; no zero exponents. Negative
// exponents are admitted for X_0 and X_1 only (the Laurent variables of the
// rings this library works in); anything else is a construction error.
class Monomial {
public:
    using Exps = std::vector<std::pair<int, int>>;

    Monomial() = default;
    Monomial(std::initializer_list<std::pair<int, int>> exps);
    static Monomial variable(int var, int exp = 1);

    // Factory from an already sorted/deduplicated exponent list.
    static Monomial from_sorted(Exps exps);

    const Exps& exps() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    int exponent(int var) const;

    Monomial operator*(const Monomial& other) const;
    Monomial pow(long k) const; // componentwise scaling of exponents

    // Total degree sum(e_j) and weight sum(j*e_j).
    long long degree() const;
    long long weight() const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
    static void validate(const Exps& exps);
    Exps exps_;
};

// Canonical term order: by weight, then lexicographically on the exponent
// vector read from variable 0 upward. Matches the order the family tables
// are conventionally printed in.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

} // namespace mspoly
