#include "mspoly/brep.hpp"

#include <mutex>

#include "mspoly/combinat.hpp"
#include "mspoly/errors.hpp"
#include "mspoly/extended.hpp"
#include "mspoly/families.hpp"

namespace mspoly {

struct BRepFamily::State {
    std::function<MultiPoly(long)> generator;
    mutable std::vector<MultiPoly> cache; // cache[j] = H_{j+1}
    mutable std::mutex mu;
};

BRepFamily::BRepFamily(std::function<MultiPoly(long)> generator) : state_(std::make_shared<State>()) {
    state_->generator = std::move(generator);
}

const MultiPoly& BRepFamily::generator(long j) const {
    if (j < 1) throw DomainViolation("generator index must be >= 1");
    std::lock_guard<std::mutex> lock(state_->mu);
    while (static_cast<long>(state_->cache.size()) < j) {
        state_->cache.push_back(state_->generator(static_cast<long>(state_->cache.size()) + 1));
    }
    return state_->cache[j - 1];
}

bool BRepFamily::regular() const {
    return !generator(1).is_zero();
}

MultiPoly BRepFamily::q(long n, long k) const {
    if (n == 0 && k == 0) return MultiPoly(1);
    if (k <= 0 || k > n) return MultiPoly();
    return compose_family(bell(n, k), [&](int j) { return generator(j); });
}

MultiPoly BRepFamily::q_bar(long n, long k) const {
    if (n == 0 && k == 0) return MultiPoly(1);
    if (k <= 0 || k > n) return MultiPoly();
    if (!regular()) throw NotRegular("orthogonal companion needs a regular family");
    return compose_family(stirling_a(n, k), [&](int j) { return generator(j); });
}

MultiPoly BRepFamily::q_ext(long n, long k) const {
    return compose_family(bell_ext(n, k), [&](int j) { return generator(j); });
}

MultiPoly BRepFamily::q_bar_ext(long n, long k) const {
    if (!regular()) throw NotRegular("orthogonal companion needs a regular family");
    return compose_family(stirling_a_ext(n, k), [&](int j) { return generator(j); });
}

BRepFamily brep_from_generator(std::function<MultiPoly(long)> generator) {
    return BRepFamily(std::move(generator));
}

BRepFamily brep_orthogonal(const BRepFamily& fam) {
    if (!fam.regular()) throw NotRegular("orthogonal companion needs a regular family");
    return BRepFamily([fam](long j) { return fam.q_bar(j, 1); });
}

bool brep_check_recurrence(const std::function<MultiPoly(long, long)>& q, long max_n,
                           std::pair<long, long>* witness) {
    auto q0 = [&](long n, long k) {
        if (k == 0) return n == 0 ? MultiPoly(1) : MultiPoly();
        return q(n, k);
    };
    for (long n = 1; n <= max_n; ++n) {
        for (long k = 1; k <= n; ++k) {
            MultiPoly rhs;
            for (long j = 1; j <= n - k + 1; ++j) {
                rhs += binom(n - 1, j - 1) * (q(j, 1) * q0(n - j, k - 1));
            }
            if (rhs != q(n, k)) {
                if (witness) *witness = {n, k};
                return false;
            }
        }
    }
    return true;
}

std::optional<std::pair<long, long>> brep_reject_witness(
    const std::function<MultiPoly(long, long)>& q, long max_n) {
    MultiPoly h1 = q(1, 1);
    if (h1.is_zero()) return std::make_pair(1L, 1L);

    if (!h1.is_invertible_monomial()) {
        // Interior solving needs division by powers of H_1; fall back to the
        // direct comparison against the forced generator H_j = Q_{j,1}.
        for (long n = 2; n <= max_n; ++n) {
            for (long k = n; k >= 1; --k) {
                MultiPoly expect =
                    compose_family(bell(n, k), [&](int j) { return q(j, 1); });
                if (expect != q(n, k)) return std::make_pair(n, k);
            }
        }
        return std::nullopt;
    }

    // Fresh per-row solve. Row n pins H_1 via the diagonal and determines
    // the interior H_2..H_{n-1} linearly (B_{n,k} is linear in its top
    // variable X_{n-k+1} with coefficient C(n,n-k+1) X_1^{k-1}); the k = 1
    // equation merely names H_n. A family is B-representable up to max_n
    // iff consecutive rows agree on the shared interior unknowns.
    std::map<long, MultiPoly> prev_interior;
    for (long n = 2; n <= max_n; ++n) {
        if (q(n, n) != h1.pow(n)) return std::make_pair(n, n);
        std::map<long, MultiPoly> interior;
        for (long j = 2; j <= n - 1; ++j) {
            long k = n - j + 1;
            MultiPoly::Assignment sigma;
            sigma.emplace(1, h1);
            for (long i = 2; i < j; ++i) sigma.emplace(static_cast<int>(i), interior.at(i));
            sigma.emplace(static_cast<int>(j), MultiPoly());
            MultiPoly lower = bell(n, k).substitute(sigma);
            MultiPoly hj = (q(n, k) - lower) * (Rational(1) / binom(n, j));
            hj = hj * h1.pow(-(n - j));
            auto it = prev_interior.find(j);
            if (it != prev_interior.end() && it->second != hj) return std::make_pair(n, k);
            interior.emplace(j, std::move(hj));
        }
        prev_interior = std::move(interior);
    }
    return std::nullopt;
}

std::vector<MultiPoly> stirling_inversion_forward(const BRepFamily& fam,
                                                  const std::vector<MultiPoly>& v) {
    std::vector<MultiPoly> u(v.size());
    for (size_t n = 0; n < v.size(); ++n) {
        MultiPoly s = n == 0 ? v[0] : MultiPoly();
        for (size_t k = 1; k <= n; ++k) s += fam.q(static_cast<long>(n), static_cast<long>(k)) * v[k];
        u[n] = std::move(s);
    }
    return u;
}

std::vector<MultiPoly> stirling_inversion_backward(const BRepFamily& fam,
                                                   const std::vector<MultiPoly>& u) {
    if (!fam.regular()) throw NotRegular("inversion needs a regular family");
    std::vector<MultiPoly> v(u.size());
    for (size_t n = 0; n < u.size(); ++n) {
        MultiPoly s = n == 0 ? u[0] : MultiPoly();
        for (size_t k = 1; k <= n; ++k) {
            s += fam.q_bar(static_cast<long>(n), static_cast<long>(k)) * u[k];
        }
        v[n] = std::move(s);
    }
    return v;
}

} // namespace mspoly
