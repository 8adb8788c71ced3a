#include "mspoly/extended.hpp"

#include "mspoly/combinat.hpp"
#include "mspoly/errors.hpp"
#include "mspoly/families.hpp"
#include "mspoly/inversion.hpp"

namespace mspoly {

namespace {

// P^_{n,k} with slot X_i -> X_{i+1}/(i+1).
MultiPoly potential_hat_shifted(long n, long k) {
    return compose_family(potential_hat(n, k),
                          [](int i) { return MultiPoly::variable(i + 1) * rat(1, i + 1); });
}

// R^_j with slot X_i -> X_{i+1}/(i+1).
MultiPoly reciprocal_shifted(long j) {
    return compose_family(reciprocal_poly_hat(j),
                          [](int i) { return MultiPoly::variable(i + 1) * rat(1, i + 1); });
}

} // namespace

MultiPoly bell_ext(long n, long k) {
    if (n == 0 && k == 0) return MultiPoly(1);
    Rational c = binom(n, n - k);
    if (c == 0 || n - k < 0) return MultiPoly();
    return c * potential_hat_shifted(n - k, k);
}

MultiPoly stirling_a_ext(long n, long k) {
    if (n == 0 && k == 0) return MultiPoly(1);
    Rational c = binom(n - 1, k - 1);
    if (c == 0 || n - k < 0) return MultiPoly();
    return c * compose_family(potential_hat(n - k, n),
                              [](int i) { return reciprocal_shifted(i); });
}

bool reciprocity_check(long n, long k) {
    MultiPoly lhs = stirling_a_ext(n, k);
    MultiPoly rhs = bell_ext(-k, -n);
    if ((n - k) % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

bool general_reciprocity(const BRepFamily& fam, long n, long k) {
    if (!fam.regular()) throw NotRegular("general reciprocity needs a regular family");
    MultiPoly lhs = fam.q_bar_ext(n, k);
    MultiPoly rhs = fam.q_ext(-k, -n);
    if ((n - k) % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

MultiPoly bell_via_assoc(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw DomainViolation("bell_via_assoc needs 0 <= k <= n");
    MultiPoly out;
    for (long j = 0; j <= k; ++j) {
        Rational c = binom(n, k + j);
        if (c == 0) continue;
        MultiPoly part = assoc_bell(k + j, j);
        if (part.is_zero()) continue;
        if (n - k - j != 0) part = MultiPoly::variable(1, static_cast<int>(n - k - j)) * part;
        out += part * c;
    }
    return out;
}

MultiPoly schloemilch_schlaefli(long n, long k) {
    if (n < k || k < 0) throw DomainViolation("schloemilch needs n >= k >= 0");
    MultiPoly out;
    for (long j = 0; j <= k; ++j) {
        Rational c = binom(k + n, k - j) * binom(k - n, k + j);
        if (c == 0) continue;
        MultiPoly part = bell(k + j, j) * c;
        if (part.is_zero()) continue;
        out += MultiPoly::variable(1, static_cast<int>(-(n + j))) * part;
    }
    return k % 2 == 0 ? out : -out;
}

namespace {

MultiPoly schloemilch_general_sum(const BRepFamily& fam, long n, long k, bool bar_inside) {
    if (n < k || k < 0) throw DomainViolation("schloemilch needs n >= k >= 0");
    if (!fam.regular()) throw NotRegular("generalized schloemilch needs a regular family");
    MultiPoly q11 = fam.generator(1);
    MultiPoly base = bar_inside ? q11 : compose_family(stirling_a(1, 1), [&](int) { return q11; });
    MultiPoly out;
    for (long j = 0; j <= k; ++j) {
        Rational c = binom(k + n, k - j) * binom(k - n, k + j);
        if (c == 0) continue;
        MultiPoly inner = bar_inside ? fam.q_bar(k + j, j) : fam.q(k + j, j);
        if (k + j == 0) inner = MultiPoly(1);
        if (inner.is_zero()) continue;
        out += base.pow(n + j) * inner * c;
    }
    return k % 2 == 0 ? out : -out;
}

} // namespace

MultiPoly schloemilch_general_bar(const BRepFamily& fam, long n, long k) {
    // Qbar_{n,n-k} = (-1)^k sum_j C(k+n,k-j) C(k-n,k+j) (Qbar_{1,1})^{n+j} Q_{k+j,j}
    return schloemilch_general_sum(fam, n, k, false);
}

MultiPoly schloemilch_general(const BRepFamily& fam, long n, long k) {
    // Q_{n,n-k} = (-1)^k sum_j C(k+n,k-j) C(k-n,k+j) (Q_{1,1})^{n+j} Qbar_{k+j,j}
    return schloemilch_general_sum(fam, n, k, true);
}

bool potential_reciprocity(long n, long k) {
    if (k > n || n == 0) throw DomainViolation("potential reciprocity needs k <= n, n != 0");
    MultiPoly lhs = potential_hat_shifted(n - k, k);
    MultiPoly rhs = compose_family(potential_hat(n - k, -n), [](int i) {
        return stirling_a(i + 1, 1) * rat(1, i + 1);
    });
    return lhs == rhs * rat(k, n);
}

bool schur_jabotinsky(const PowerSeries& phi, long n, long k) {
    if (!phi.is_invertible()) throw NotInvertible("Schur-Jabotinsky needs an invertible phi");
    if (n == 0 || k > n) throw DomainViolation("Schur-Jabotinsky needs k <= n, n != 0");
    PowerSeries inv = invert_series(phi);
    auto pot_coeff = [&](const PowerSeries& h, long nn, long kk) {
        // [x^nn] h^kk = P^_{nn-kk,kk}(h_1/1, h_2/2, ...) / (nn-kk)!
        MultiPoly p = potential_hat(nn - kk, kk);
        Rational v = evaluate(p, [&](int i) { return h.taylor(i + 1) / Rational(i + 1); });
        return v / Rational(factorial(nn - kk));
    };
    Rational a_nk = pot_coeff(phi, n, k);
    Rational b = pot_coeff(inv, -k, -n);
    if (a_nk != rat(k, 1) / Rational(n) * b) return false;
    if (k >= 1) {
        // a_{n,k} is an ordinary power-series coefficient; cross-check it.
        if (a_nk != phi.pow(k).coeff(n)) return false;
    }
    return true;
}

bool comtet_thm_c(long n, long k, long m) {
    if (m < n || n < 0) throw DomainViolation("theorem C needs m >= n >= 0");
    if (-k >= 0 && -k <= m) throw DomainViolation("theorem C needs -k outside {0..m}");
    MultiPoly lhs = potential(n, -k);
    MultiPoly rhs;
    for (long j = 0; j <= m; ++j) {
        Rational c = binom(m, j) / Rational(k + j);
        if (j % 2 != 0) c = -c;
        rhs += potential(n, j) * c;
    }
    rhs = rhs * (Rational(k) * binom(m + k, m));
    return lhs == rhs;
}

bool melzak_ring(const MultiPoly& p, long n, long m, long k) {
    if (m < n || n < 0) throw DomainViolation("Melzak needs m >= n >= 0");
    if (-k >= 0 && -k <= m) throw DomainViolation("Melzak needs k outside {-m..0}");
    if (t_degree(p) > n) throw DomainViolation("polynomial degree exceeds n");
    auto shifted = [&](const Rational& c) {
        MultiPoly::Assignment sigma;
        sigma.emplace(kTVar, t_monomial(1) + MultiPoly(c));
        return p.substitute(sigma);
    };
    MultiPoly lhs = shifted(Rational(k));
    MultiPoly rhs;
    for (long j = 0; j <= m; ++j) {
        Rational c = binom(m, j) / Rational(k + j);
        if (j % 2 != 0) c = -c;
        rhs += shifted(Rational(-j)) * c;
    }
    rhs = rhs * (Rational(k) * binom(m + k, m));
    return lhs == rhs;
}

bool melzak_samples(const MultiPoly& p, long n, long m, long k, const std::vector<Rational>& xs) {
    if (m < n || n < 0) throw DomainViolation("Melzak needs m >= n >= 0");
    if (-k >= 0 && -k <= m) throw DomainViolation("Melzak needs k outside {-m..0}");
    auto value_at = [&](const Rational& x) {
        return evaluate(p, [&](int) { return x; });
    };
    for (const Rational& x : xs) {
        Rational lhs = value_at(x + Rational(k));
        Rational rhs(0);
        for (long j = 0; j <= m; ++j) {
            Rational c = binom(m, j) / Rational(k + j);
            if (j % 2 != 0) c = -c;
            rhs += value_at(x - Rational(j)) * c;
        }
        rhs *= Rational(k) * binom(m + k, m);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace mspoly
