#pragma once

#include <cstdint>
#include <random>

#include "mspoly/multipoly.hpp"
#include "mspoly/series.hpp"

namespace mspoly {

// Fixed default seed so every property suite is reproducible; override with
// the CLI --seed flag.
constexpr uint64_t kDefaultSeed = 0x5eedb311;

// Deterministic generator for property suites: small rational coefficients
// (numerator in [-5,5], denominator in {1,2,3}).
class RandGen {
public:
    explicit RandGen(uint64_t seed = kDefaultSeed) : rng_(seed) {}

    Rational rational();
    Rational nonzero_rational();

    PowerSeries series(long order);            // unrestricted
    PowerSeries series_f0(long order);         // c_0 = 0
    PowerSeries series_f1(long order);         // c_0 != 0
    PowerSeries series_invertible(long order); // c_0 = 0, c_1 != 0

    // Random sparse polynomial for serialization and ring-axiom tests.
    MultiPoly poly(int max_var, int max_terms, bool laurent = false);

private:
    std::mt19937_64 rng_;
};

} // namespace mspoly
