#include "mspoly/families.hpp"

#include <map>
#include <mutex>

#include "mspoly/combinat.hpp"
#include "mspoly/errors.hpp"
#include "mspoly/partitions.hpp"
#include "mspoly/recurrence.hpp"

namespace mspoly {

namespace {

RecurrenceTable& bell_table() {
    static RecurrenceTable t(MultiPoly::variable(1), 1, false);
    return t;
}

RecurrenceTable& stirling_a_table() {
    static RecurrenceTable t(MultiPoly::variable(1, -1), 1, true);
    return t;
}

} // namespace

const MultiPoly& bell(long n, long k) {
    return bell_table().get(n, k);
}

MultiPoly bell_partition_sum(long n, long k) {
    MultiPoly out;
    if (n < 0 || k < 0) return out;
    Integer nfac = factorial(n);
    for (const auto& type : partition_types(n, k)) {
        Integer den(1);
        Monomial::Exps exps;
        for (size_t i = 0; i < type.r.size(); ++i) {
            long r = type.r[i];
            if (r == 0) continue;
            long part = static_cast<long>(i) + 1;
            den *= factorial(r);
            Integer pf = factorial(part);
            for (long c = 0; c < r; ++c) den *= pf;
            exps.emplace_back(static_cast<int>(part), static_cast<int>(r));
        }
        out += MultiPoly::term(rat(nfac, den), Monomial::from_sorted(std::move(exps)));
    }
    return out;
}

const MultiPoly& stirling_a(long n, long k) {
    return stirling_a_table().get(n, k);
}

MultiPoly stirling_a_mainresult(long n, long k) {
    // A_{n,k} = sum_{j=k-1}^{n-1} (-1)^{n-1-j} C(2n-2-j,k-1) X_1^{j-2n+1}
    //           Btilde_{2n-1-k-j, n-1-j}
    if (n < 1 || k < 1 || k > n) return MultiPoly();
    MultiPoly out;
    for (long j = k - 1; j <= n - 1; ++j) {
        Rational c = binom(2 * n - 2 - j, k - 1);
        if ((n - 1 - j) % 2 != 0) c = -c;
        if (c == 0) continue;
        MultiPoly part = assoc_bell(2 * n - 1 - k - j, n - 1 - j);
        if (part.is_zero()) continue;
        out += MultiPoly::variable(1, static_cast<int>(j - 2 * n + 1)) * part * c;
    }
    return out;
}

MultiPoly stirling_a_partition_sum(long n, long k) {
    if (n < 1 || k < 1 || k > n) return MultiPoly();
    MultiPoly out;
    Rational kfac_inv = rat(Integer(1), factorial(k - 1));
    for (const auto& type : partition_types(2 * n - 1 - k, n - 1)) {
        long r1 = type.multiplicity(1);
        Integer num = factorial(2 * n - 2 - r1);
        Integer den(1);
        Monomial::Exps exps;
        for (size_t i = 0; i < type.r.size(); ++i) {
            long r = type.r[i];
            if (r == 0) continue;
            long part = static_cast<long>(i) + 1;
            if (part >= 2) {
                den *= factorial(r);
                Integer pf = factorial(part);
                for (long c = 0; c < r; ++c) den *= pf;
            }
            exps.emplace_back(static_cast<int>(part), static_cast<int>(r));
        }
        Rational coeff = rat(num, den) * kfac_inv;
        if ((n - 1 - r1) % 2 != 0) coeff = -coeff;
        out += MultiPoly::term(coeff, Monomial::from_sorted(std::move(exps)));
    }
    return MultiPoly::variable(1, static_cast<int>(-(2 * n - 1))) * out;
}

MultiPoly assoc_bell(long n, long k) {
    MultiPoly::Assignment sigma;
    sigma.emplace(1, MultiPoly());
    return bell(n, k).substitute(sigma);
}

MultiPoly complete_bell(long n) {
    MultiPoly out;
    for (long k = 0; k <= n; ++k) out += bell(n, k);
    return out;
}

MultiPoly logarithmic_poly(long n) {
    MultiPoly out;
    for (long k = 1; k <= n; ++k) {
        Rational c = rat(factorial(k - 1));
        if ((k - 1) % 2 != 0) c = -c;
        out += bell(n, k) * c;
    }
    return out;
}

MultiPoly geometric_poly(long n) {
    MultiPoly out;
    for (long k = 0; k <= n; ++k) out += bell(n, k) * Rational(factorial(k));
    return out;
}

MultiPoly potential_hat(long n, long k) {
    if (n < 0) return MultiPoly(); // void sum
    MultiPoly out;
    for (long j = 0; j <= n; ++j) {
        Rational c = falling(k, j);
        if (c == 0) continue;
        MultiPoly term = bell(n, j) * c;
        if (k - j != 0) term = term * MultiPoly::variable(0, static_cast<int>(k - j));
        out += term;
    }
    return out;
}

namespace {
MultiPoly at_x0_one(const MultiPoly& p) {
    MultiPoly::Assignment sigma;
    sigma.emplace(0, MultiPoly(1));
    return p.substitute(sigma);
}
} // namespace

MultiPoly potential(long n, long k) {
    return at_x0_one(potential_hat(n, k));
}

MultiPoly reciprocal_poly_hat(long n) {
    if (n < 0) return MultiPoly();
    MultiPoly out;
    for (long k = 0; k <= n; ++k) {
        Rational c = rat(factorial(k));
        if (k % 2 != 0) c = -c;
        out += MultiPoly::variable(0, static_cast<int>(-(k + 1))) * bell(n, k) * c;
    }
    return out;
}

MultiPoly reciprocal_poly(long n) {
    return at_x0_one(reciprocal_poly_hat(n));
}

MultiPoly tree_poly_hat(long n) {
    if (n < 1) throw DomainViolation("tree polynomial needs n >= 1");
    MultiPoly out;
    for (long k = 0; k <= n - 1; ++k) {
        Rational c = falling(n, k);
        if (c == 0) continue;
        MultiPoly term = bell(n - 1, k) * c;
        if (n - k != 0) term = term * MultiPoly::variable(0, static_cast<int>(n - k));
        out += term;
    }
    return out;
}

MultiPoly tree_poly(long n) {
    return at_x0_one(tree_poly_hat(n));
}

MultiPoly factorial_hat(long n, long k) {
    if (k < 0) throw DomainViolation("factorial polynomial needs k >= 0");
    MultiPoly out;
    for (long j = 0; j <= k; ++j) {
        Rational c = stirling1(k, j);
        if (c == 0) continue;
        out += potential_hat(n, j) * c;
    }
    return out;
}

MultiPoly factorial_poly(long n, long k) {
    return at_x0_one(factorial_hat(n, k));
}

Rational at_taylor(const MultiPoly& p, const PowerSeries& phi) {
    return evaluate(p, [&](int var) { return phi.taylor(var); });
}

MultiPoly fdb_poly(const PowerSeries& f, long n) {
    if (n < 0) return MultiPoly();
    MultiPoly out;
    for (long k = 0; k <= n; ++k) {
        Rational c = f.taylor(k);
        if (c != 0) out += bell(n, k) * c;
    }
    return out;
}

MultiPoly fdb_poly_hat(const LaurentPoly1& f, long n) {
    if (n < 0) return MultiPoly();
    MultiPoly out;
    for (long k = 0; k <= n; ++k) {
        MultiPoly c = f.derivative_at_x0(k);
        if (!c.is_zero()) out += c * bell(n, k);
    }
    return out;
}

bool first_composition_rule_check(const PowerSeries& f, const PowerSeries& g, long n) {
    PowerSeries h = compose_0case(f, g);
    MultiPoly lhs = fdb_poly(h, n);
    MultiPoly fn = fdb_poly(f, n);
    MultiPoly rhs = compose_family(fn, [&](int j) { return fdb_poly(g, j); });
    return lhs == rhs;
}

bool jabotinsky_b(const PowerSeries& f, const PowerSeries& g, long n, long k) {
    if (!f.is_F0() || !g.is_F0()) throw CaseViolation("Jabotinsky (i) needs f, g in F_0");
    PowerSeries h = compose_0case(f, g);
    Rational lhs = at_taylor(bell(n, k), h);
    Rational rhs(0);
    for (long j = k; j <= n; ++j) {
        rhs += at_taylor(bell(n, j), g) * at_taylor(bell(j, k), f);
    }
    return lhs == rhs;
}

bool jabotinsky_a(const PowerSeries& f, const PowerSeries& g, long n, long k) {
    if (!f.is_invertible() || !g.is_invertible()) {
        throw CaseViolation("Jabotinsky (ii) needs invertible f, g");
    }
    PowerSeries h = compose_0case(f, g);
    Rational lhs = at_taylor(stirling_a(n, k), h);
    Rational rhs(0);
    for (long j = k; j <= n; ++j) {
        rhs += at_taylor(stirling_a(n, j), f) * at_taylor(stirling_a(j, k), g);
    }
    return lhs == rhs;
}

Rational stirling1_via_unify(long n, long k) {
    return stirling_a(n, k).unify(Rational(1));
}

Rational stirling2_via_unify(long n, long k) {
    return bell(n, k).unify(Rational(1));
}

Rational rho(long s) {
    return evaluate(reciprocal_poly_hat(s), [](int var) { return rat(1, var + 1); });
}

Rational stirling1_via_potential(long n, long k) {
    if (n < 1 || k < 1 || k > n) throw DomainViolation("stirling1 index out of range");
    Rational v = evaluate(potential(n - k, n), [](int var) { return rho(var); });
    return binom(n - 1, k - 1) * v;
}

void clear_family_caches() {
    bell_table().clear();
    stirling_a_table().clear();
}

} // namespace mspoly
