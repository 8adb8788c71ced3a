#include "mspoly/randgen.hpp"

namespace mspoly {

Rational RandGen::rational() {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    return rat(num(rng_), den(rng_));
}

Rational RandGen::nonzero_rational() {
    for (;;) {
        Rational q = rational();
        if (q != 0) return q;
    }
}

PowerSeries RandGen::series(long order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (auto& v : c) v = rational();
    return PowerSeries::from_ordinary(std::move(c));
}

PowerSeries RandGen::series_f0(long order) {
    PowerSeries f = series(order);
    std::vector<Rational> c = f.coeffs();
    c[0] = 0;
    return PowerSeries::from_ordinary(std::move(c));
}

PowerSeries RandGen::series_f1(long order) {
    PowerSeries f = series(order);
    std::vector<Rational> c = f.coeffs();
    if (c[0] == 0) c[0] = nonzero_rational();
    return PowerSeries::from_ordinary(std::move(c));
}

PowerSeries RandGen::series_invertible(long order) {
    PowerSeries f = series_f0(order);
    std::vector<Rational> c = f.coeffs();
    if (order >= 1 && c[1] == 0) c[1] = nonzero_rational();
    return PowerSeries::from_ordinary(std::move(c));
}

MultiPoly RandGen::poly(int max_var, int max_terms, bool laurent) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> var(laurent ? 0 : 1, max_var);
    std::uniform_int_distribution<int> exp(1, 3);
    std::uniform_int_distribution<int> nvars(0, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    MultiPoly out;
    int terms = nterms(rng_);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int vars = nvars(rng_);
        for (int i = 0; i < vars; ++i) {
            int v = var(rng_);
            int e = exp(rng_);
            if (laurent && v <= 1 && sign(rng_)) e = -e;
            if (m.exponent(v) == 0) m = m * Monomial::variable(v, e);
        }
        out += MultiPoly::term(rational(), m);
    }
    return out;
}

} // namespace mspoly
