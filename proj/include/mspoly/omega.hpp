#pragma once

#include <memory>
#include <vector>

#include "mspoly/multipoly.hpp"
#include "mspoly/series.hpp"

namespace mspoly {

// Whether the placeholder phi is taken from F_0 (phi(0) = 0, the default for
// FdB polynomials) or from F_1 (phi(0) becomes the indeterminate X_0).
enum class PlaceholderCase { F0, F1 };

// Closed expression grammar for the higher-order derivative operator
// Omega_n(.|phi): terms are built from the placeholder, fixed series free of
// phi, sums, products, reciprocals, case-valid compositions, compositional
// inverses and the derivation D.
class FunctionTerm {
public:
    static FunctionTerm placeholder();
    static FunctionTerm constant(PowerSeries f);
    static FunctionTerm laurent(LaurentPoly1 f); // only as the left leg of a 1-case composition
    static FunctionTerm scalar(Rational c);

    static FunctionTerm sum(FunctionTerm a, FunctionTerm b);
    static FunctionTerm product(FunctionTerm a, FunctionTerm b);
    static FunctionTerm scale(Rational c, FunctionTerm a);
    static FunctionTerm reciprocal(FunctionTerm a);
    static FunctionTerm compose(FunctionTerm f, FunctionTerm g);
    static FunctionTerm inverse(FunctionTerm a);
    static FunctionTerm derivative(FunctionTerm a);
    static FunctionTerm power(FunctionTerm a, long k); // repeated product / reciprocal

    struct Node;
    const std::shared_ptr<const Node>& node_ptr() const { return node_; }

private:
    explicit FunctionTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Omega_n(term | phi): the polynomial over X_0, X_1, ... obtained from
// D^n(term)(0) by replacing each Taylor coefficient of phi with an
// indeterminate. Satisfies Omega_n(f|phi)^phi(0) = D^n(f)(0).
MultiPoly omega(long n, const FunctionTerm& term, PlaceholderCase pc = PlaceholderCase::F0);

// All of Omega_0 .. Omega_n in one pass.
std::vector<MultiPoly> omega_all(long n, const FunctionTerm& term,
                                 PlaceholderCase pc = PlaceholderCase::F0);

} // namespace mspoly
