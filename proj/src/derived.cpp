#include "mspoly/derived.hpp"

#include "mspoly/combinat.hpp"
#include "mspoly/errors.hpp"
#include "mspoly/families.hpp"
#include "mspoly/partitions.hpp"
#include "mspoly/recurrence.hpp"

namespace mspoly {

namespace {

// B_{n,k} with X_j -> c_j X_{j+shift} for scalar weights c_j.
MultiPoly bell_with_weights(long n, long k, const std::function<Rational(long)>& weight,
                            int shift = 0) {
    return compose_family(bell(n, k), [&](int j) {
        return MultiPoly::variable(j + shift) * weight(j);
    });
}

MultiPoly partition_sum_poly(long n, long k, const std::function<Rational(const PartitionType&)>& coeff) {
    MultiPoly out;
    for (const auto& type : partition_types(n, k)) {
        Monomial::Exps exps;
        for (size_t i = 0; i < type.r.size(); ++i) {
            if (type.r[i] != 0) {
                exps.emplace_back(static_cast<int>(i + 1), static_cast<int>(type.r[i]));
            }
        }
        out += MultiPoly::term(coeff(type), Monomial::from_sorted(std::move(exps)));
    }
    return out;
}

} // namespace

MultiPoly cycle_indicator(long n, long k) {
    if (n < 1 || k < 1 || k > n) throw DomainViolation("cycle indicator needs 1 <= k <= n");
    return bell_with_weights(n, k, [](long j) { return Rational(factorial(j - 1)); });
}

MultiPoly cycle_indicator_partition_sum(long n, long k) {
    if (n < 1 || k < 1 || k > n) throw DomainViolation("cycle indicator needs 1 <= k <= n");
    Integer nfac = factorial(n);
    return partition_sum_poly(n, k, [&](const PartitionType& type) {
        Integer den(1);
        for (size_t i = 0; i < type.r.size(); ++i) {
            long r = type.r[i];
            if (r == 0) continue;
            den *= factorial(r);
            Integer p(static_cast<long>(i + 1));
            for (long c = 0; c < r; ++c) den *= p;
        }
        return rat(nfac, den);
    });
}

MultiPoly cycle_indicator_full(long n) {
    MultiPoly out;
    for (long k = 1; k <= n; ++k) out += cycle_indicator(n, k);
    return out;
}

bool exponential_formula_check(const PowerSeries& f, long big_n) {
    if (!f.is_F0()) throw CaseViolation("exponential formula needs f in F_0");
    PowerSeries ef = exp_series(f);
    for (long n = 1; n <= big_n; ++n) {
        Rational lhs = ef.taylor(n);
        Rational rhs = evaluate(cycle_indicator_full(n), [&](int j) {
            return f.taylor(j) / Rational(factorial(j - 1));
        });
        if (lhs != rhs) return false;
    }
    return true;
}

MultiPoly lah_unsigned(long n, long k) {
    if (n < 1 || k < 1 || k > n) throw DomainViolation("Lah polynomial needs 1 <= k <= n");
    return bell_with_weights(n, k, [](long j) { return Rational(factorial(j)); });
}

MultiPoly lah_unsigned_partition_sum(long n, long k) {
    if (n < 1 || k < 1 || k > n) throw DomainViolation("Lah polynomial needs 1 <= k <= n");
    Integer nfac = factorial(n);
    return partition_sum_poly(n, k, [&](const PartitionType& type) {
        Integer den(1);
        for (long r : type.r) {
            if (r != 0) den *= factorial(r);
        }
        return rat(nfac, den);
    });
}

MultiPoly lah_signed(long n, long k) {
    if (n < 1 || k < 1 || k > n) throw DomainViolation("Lah polynomial needs 1 <= k <= n");
    MultiPoly out;
    for (long j = k; j <= n; ++j) {
        MultiPoly term = stirling_a(n, j) * bell(j, k);
        out += j % 2 == 0 ? term : -term;
    }
    return out;
}

MultiPoly forest_poly(long n, long k) {
    if (n < 1 || k < 1 || k > n) throw DomainViolation("forest polynomial needs 1 <= k <= n");
    return binom(n - 1, k - 1) * potential_hat(n - k, n);
}

MultiPoly forest_companion(long n, long k) {
    if (n < 1 || k < 1 || k > n) throw DomainViolation("forest companion needs 1 <= k <= n");
    return binom(n, k) * potential_hat(n - k, -k);
}

MultiPoly idempotency_poly(long n, long k) {
    if (n < 1 || k < 1 || k > n) throw DomainViolation("idempotency polynomial needs 1 <= k <= n");
    return binom(n, k) * potential_hat(n - k, k);
}

namespace {

RecurrenceTable& comtet_table() {
    static RecurrenceTable t(MultiPoly::variable(0), 0, true);
    return t;
}

} // namespace

const MultiPoly& comtet(long n, long k) {
    return comtet_table().get(n, k);
}

MultiPoly comtet_via_stirling(long n, long k) {
    if (n < 0 || k < 0 || k > n) return MultiPoly();
    if (n == 0) return MultiPoly(1);
    return compose_family(stirling_a(n, k), [](int j) { return reciprocal_poly_hat(j - 1); });
}

MultiPoly comtet_companion(long n, long k) {
    if (n < 0 || k < 0 || k > n) return MultiPoly();
    if (n == 0) return MultiPoly(1);
    return compose_family(bell(n, k), [](int j) { return reciprocal_poly_hat(j - 1); });
}

void clear_comtet_cache() {
    comtet_table().clear();
}

MultiPoly involution_poly(const PowerSeries& g, long n) {
    if (!g.is_invertible()) throw NotInvertible("involution polynomial needs invertible g");
    MultiPoly out;
    for (long k = 1; k <= n; ++k) {
        Rational c = at_taylor(lah_signed(k, 1), g);
        if (c != 0) out += bell(n, k) * c;
    }
    return out;
}

PowerSeries involution_series(const PowerSeries& g, long order) {
    if (!g.is_invertible()) throw NotInvertible("involution series needs invertible g");
    std::vector<Rational> taylor(static_cast<size_t>(order) + 1, Rational(0));
    for (long n = 1; n <= order; ++n) taylor[n] = at_taylor(lah_signed(n, 1), g);
    return PowerSeries::from_taylor(taylor);
}

bool involution_check(const PowerSeries& g, long big_n) {
    PowerSeries f = involution_series(g, big_n);
    return agree_to_order(compose_0case(f, f), PowerSeries::identity(big_n), big_n);
}

BRepFamily bell_family() {
    return BRepFamily([](long j) { return MultiPoly::variable(static_cast<int>(j)); });
}

BRepFamily cycle_family() {
    return BRepFamily([](long j) {
        return MultiPoly::variable(static_cast<int>(j)) * Rational(factorial(j - 1));
    });
}

BRepFamily lah_unsigned_family() {
    return BRepFamily([](long j) {
        return MultiPoly::variable(static_cast<int>(j)) * Rational(factorial(j));
    });
}

BRepFamily lah_signed_family() {
    return BRepFamily([](long j) { return lah_signed(j, 1); });
}

BRepFamily forest_family() {
    return BRepFamily([](long j) { return tree_poly_hat(j); });
}

BRepFamily comtet_family() {
    return BRepFamily([](long j) { return comtet(j, 1); });
}

} // namespace mspoly
