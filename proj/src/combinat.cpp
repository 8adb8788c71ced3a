#include "mspoly/combinat.hpp"

#include <mutex>
#include <vector>

#include "mspoly/errors.hpp"

namespace mspoly {

Integer factorial(long n) {
    if (n < 0) throw DomainViolation("factorial of negative integer");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Rational binom(long n, long k) {
    if (k < 0) {
        if (n >= 0 || k > n) return Rational(0);
        return binom(n, n - k);
    }
    Rational out(1);
    for (long i = 0; i < k; ++i) {
        out *= rat(n - i, i + 1);
    }
    return out;
}

Rational falling(long x, long j) {
    if (j < 0) throw DomainViolation("falling power with negative index");
    Rational out(1);
    for (long i = 0; i < j; ++i) out *= Rational(x - i);
    return out;
}

namespace {

// Lower-triangular number tables grown on demand; guarded for concurrent use.
class StirlingTable {
public:
    explicit StirlingTable(bool first_kind) : first_kind_(first_kind) {
        rows_.push_back({Integer(1)});
    }

    Integer get(long n, long k) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(rows_.size()) <= n) {
            long m = static_cast<long>(rows_.size()) - 1; // extend row m -> m+1
            const auto& prev = rows_.back();
            std::vector<Integer> row(m + 2);
            for (long k2 = 0; k2 <= m + 1; ++k2) {
                Integer v = 0;
                if (k2 >= 1 && k2 - 1 <= m) v += prev[k2 - 1];
                if (k2 <= m) v += first_kind_ ? Integer(-m) * prev[k2] : Integer(k2) * prev[k2];
                row[k2] = v;
            }
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    bool first_kind_;
    std::vector<std::vector<Integer>> rows_;
    std::mutex mu_;
};

StirlingTable& s1_table() {
    static StirlingTable t(true);
    return t;
}

StirlingTable& s2_table() {
    static StirlingTable t(false);
    return t;
}

} // namespace

Rational stirling1(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw DomainViolation("stirling1 index out of range");
    return Rational(s1_table().get(n, k));
}

Rational stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw DomainViolation("stirling2 index out of range");
    return Rational(s2_table().get(n, k));
}

Rational stirling1_unsigned(long n, long k) {
    Rational v = stirling1(n, k);
    return v < 0 ? Rational(-v) : v;
}

Rational bell_number(long n) {
    Rational sum(0);
    for (long k = 0; k <= n; ++k) sum += stirling2(n, k);
    return sum;
}

} // namespace mspoly
