#include "mspoly/series.hpp"

#include <algorithm>

#include "mspoly/combinat.hpp"
#include "mspoly/errors.hpp"
#include "mspoly/families.hpp"

namespace mspoly {

LaurentPoly1 LaurentPoly1::xpow(long k, const Rational& c) {
    LaurentPoly1 f;
    f.add(k, c);
    return f;
}

void LaurentPoly1::add(long k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

MultiPoly LaurentPoly1::derivative_at_x0(long k) const {
    MultiPoly out;
    for (const auto& [m, c] : coeffs_) {
        Rational factor = c * falling(m, k);
        if (factor == 0) continue;
        long e = m - k;
        out += e == 0 ? MultiPoly(factor) : MultiPoly::variable(0, static_cast<int>(e)) * factor;
    }
    return out;
}

Rational LaurentPoly1::derivative_at(long k, const Rational& x0) const {
    Rational sum(0);
    for (const auto& [m, c] : coeffs_) {
        Rational factor = c * falling(m, k);
        if (factor == 0) continue;
        if (x0 == 0 && m - k < 0) throw ZeroDenominator("Laurent derivative at 0");
        sum += factor * rational_pow(x0, m - k);
    }
    return sum;
}

PowerSeries PowerSeries::zero(long order) {
    PowerSeries f;
    f.coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
    return f;
}

PowerSeries PowerSeries::constant(const Rational& v, long order) {
    PowerSeries f = zero(order);
    f.coeffs_[0] = v;
    return f;
}

PowerSeries PowerSeries::identity(long order) {
    PowerSeries f = zero(std::max(order, 1L));
    f.coeffs_[1] = 1;
    return f.truncate(order);
}

PowerSeries PowerSeries::from_ordinary(std::vector<Rational> coeffs) {
    if (coeffs.empty()) coeffs.push_back(Rational(0));
    PowerSeries f;
    f.coeffs_ = std::move(coeffs);
    return f;
}

PowerSeries PowerSeries::from_taylor(const std::vector<Rational>& taylor) {
    std::vector<Rational> c(taylor.size());
    for (size_t n = 0; n < taylor.size(); ++n) c[n] = taylor[n] / Rational(factorial(static_cast<long>(n)));
    return from_ordinary(std::move(c));
}

PowerSeries PowerSeries::exp(long order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) c[n] = rat(Integer(1), factorial(n));
    return from_ordinary(std::move(c));
}

PowerSeries PowerSeries::expm(long order) {
    PowerSeries f = exp(order);
    f.coeffs_[0] = 0;
    return f;
}

PowerSeries PowerSeries::logm(long order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    for (long n = 1; n <= order; ++n) c[n] = rat(n % 2 == 1 ? 1 : -1, n);
    return from_ordinary(std::move(c));
}

PowerSeries PowerSeries::geometric(long order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(1));
    return from_ordinary(std::move(c));
}

const Rational& PowerSeries::coeff(long n) const {
    if (n < 0 || n > order()) throw DomainViolation("series coefficient beyond truncation order");
    return coeffs_[n];
}

Rational PowerSeries::taylor(long n) const {
    return coeff(n) * Rational(factorial(n));
}

bool PowerSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

PowerSeries PowerSeries::truncate(long n) const {
    if (n >= order()) return *this;
    if (n < 0) throw DomainViolation("negative truncation order");
    PowerSeries f;
    f.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + n + 1);
    return f;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries f = *this;
    for (auto& c : f.coeffs_) c = -c;
    return f;
}

PowerSeries PowerSeries::operator+(const PowerSeries& g) const {
    long n = std::min(order(), g.order());
    PowerSeries out = zero(n);
    for (long i = 0; i <= n; ++i) out.coeffs_[i] = coeffs_[i] + g.coeffs_[i];
    return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& g) const {
    return *this + (-g);
}

PowerSeries PowerSeries::operator*(const PowerSeries& g) const {
    long n = std::min(order(), g.order());
    PowerSeries out = zero(n);
    for (long i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; i + j <= n; ++j) out.coeffs_[i + j] += coeffs_[i] * g.coeffs_[j];
    }
    return out;
}

PowerSeries PowerSeries::operator*(const Rational& c) const {
    PowerSeries out = *this;
    for (auto& v : out.coeffs_) v *= c;
    return out;
}

PowerSeries PowerSeries::pow(long k) const {
    if (k < 0) return reciprocal().pow(-k);
    PowerSeries out = constant(Rational(1), order());
    PowerSeries base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

PowerSeries PowerSeries::reciprocal() const {
    if (coeffs_[0] == 0) throw NotAUnit("reciprocal of a series with zero constant term");
    long n = order();
    PowerSeries out = zero(n);
    Rational inv0 = Rational(1) / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (long m = 1; m <= n; ++m) {
        Rational s(0);
        for (long j = 1; j <= m; ++j) s += coeffs_[j] * out.coeffs_[m - j];
        out.coeffs_[m] = -inv0 * s;
    }
    return out;
}

PowerSeries PowerSeries::derive() const {
    long n = std::max(order() - 1, 0L);
    PowerSeries out = zero(n);
    for (long m = 0; m + 1 <= order(); ++m) {
        if (m > n) break;
        out.coeffs_[m] = coeffs_[m + 1] * Rational(m + 1);
    }
    return out;
}

PowerSeries PowerSeries::times_x() const {
    PowerSeries out = zero(order() + 1);
    for (long m = 0; m <= order(); ++m) out.coeffs_[m + 1] = coeffs_[m];
    return out;
}

PowerSeries PowerSeries::div_x() const {
    if (coeffs_[0] != 0) throw DomainViolation("div_x of a series with nonzero constant term");
    if (order() == 0) return zero(0);
    PowerSeries out = zero(order() - 1);
    for (long m = 1; m <= order(); ++m) out.coeffs_[m - 1] = coeffs_[m];
    return out;
}

PowerSeries compose_0case(const PowerSeries& f, const PowerSeries& g) {
    if (!g.is_F0()) throw CompositionCaseViolation("0-case composition with g(0) != 0");
    long n = std::min(f.order(), g.order());
    PowerSeries gt = g.truncate(n);
    // Horner over c_0..c_n of f; higher coefficients cannot reach order n
    // since g has no constant term.
    PowerSeries out = PowerSeries::constant(f.coeff(n), n);
    for (long k = n - 1; k >= 0; --k) {
        out = out * gt + PowerSeries::constant(f.coeff(k), n);
    }
    return out;
}

PowerSeries compose_1case(const LaurentPoly1& f, const PowerSeries& g) {
    if (!g.is_F1()) throw CompositionCaseViolation("1-case composition with g(0) = 0");
    PowerSeries out = PowerSeries::zero(g.order());
    for (const auto& [k, c] : f.coeffs()) {
        out = out + g.pow(k) * c;
    }
    return out;
}

PowerSeries lie_derive(const PowerSeries& phi, const PowerSeries& f) {
    PowerSeries dphi = phi.derive();
    if (dphi.coeff(0) == 0) throw NotAUnit("lie derivation with D(phi)(0) = 0");
    return f.derive() * dphi.reciprocal();
}

PowerSeries invert_series(const PowerSeries& f) {
    if (!f.is_invertible()) throw NotInvertible("series is not compositionally invertible");
    long n = f.order();

    // Route (a): taylor_m = A_{m,1}(f_1, ..., f_m).
    std::vector<Rational> ftay(static_cast<size_t>(n) + 1);
    for (long m = 0; m <= n; ++m) ftay[m] = f.taylor(m);
    std::vector<Rational> ta(static_cast<size_t>(n) + 1, Rational(0));
    for (long m = 1; m <= n; ++m) {
        ta[m] = evaluate(stirling_a(m, 1), [&](int var) { return ftay[var]; });
    }

    // Route (b): taylor_m = D_f^m(id)(0).
    std::vector<Rational> tb(static_cast<size_t>(n) + 1, Rational(0));
    PowerSeries rec = f.derive().reciprocal();
    PowerSeries g = PowerSeries::identity(n);
    for (long m = 1; m <= n; ++m) {
        g = g.derive() * rec;
        tb[m] = g.coeff(0);
    }

    if (ta != tb) throw Error("inverse-series routes disagree"); // cross-check is part of the contract
    return PowerSeries::from_taylor(ta);
}

PowerSeries exp_series(const PowerSeries& phi) {
    if (!phi.is_F0()) throw CompositionCaseViolation("exp of a series with nonzero constant term");
    long n = phi.order();
    PowerSeries sum = PowerSeries::constant(Rational(1), n);
    PowerSeries term = PowerSeries::constant(Rational(1), n);
    for (long k = 1; k <= n; ++k) {
        term = term * phi * rat(1, k);
        sum = sum + term;
    }
    return sum;
}

bool agree_to_order(const PowerSeries& a, const PowerSeries& b, long n) {
    if (a.order() < n || b.order() < n) return false;
    for (long m = 0; m <= n; ++m) {
        if (a.coeff(m) != b.coeff(m)) return false;
    }
    return true;
}

} // namespace mspoly
