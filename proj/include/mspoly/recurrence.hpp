#pragma once

#include <mutex>
#include <vector>

#include "mspoly/multipoly.hpp"

namespace mspoly {

// Memoized triangular table driven by a differential recurrence
//   T_{n+1,k} = M.T_{n,k-1} + [M.]sum_{j>=lowest} X_{j+1} dT_{n,k}/dX_j,
// T_{0,0} = 1, T_{n,0} = 0 for n > 0. Expanding D^{n+1} = D(sum_k
// B_{n,k}^phi Dphi^k) puts the multiplier X_1 on the shift term only; for
// A_{n,k} and Comtet's C_{n,k} the multiplier (1/X_1 resp. X_0) factors out
// of both terms. Rows are grown lazily under a lock; entries are stable,
// so concurrent readers may hold references across later growth.
class RecurrenceTable {
public:
    RecurrenceTable(MultiPoly multiplier, int lowest_var, bool multiplier_on_sum)
        : multiplier_(std::move(multiplier)),
          lowest_var_(lowest_var),
          multiplier_on_sum_(multiplier_on_sum) {}

    const MultiPoly& get(long n, long k) {
        std::lock_guard<std::mutex> lock(mu_);
        if (n < 0 || k < 0 || k > n) return zero_;
        ensure_rows(n);
        return rows_[n][k];
    }

    // Test hook; invalidates previously returned references.
    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        rows_.clear();
    }

private:
    void ensure_rows(long n) {
        if (rows_.empty()) rows_.push_back({MultiPoly(1)});
        while (static_cast<long>(rows_.size()) <= n) {
            long m = static_cast<long>(rows_.size()) - 1;
            const auto& prev = rows_.back();
            std::vector<MultiPoly> row(m + 2);
            row[0] = MultiPoly();
            for (long k = 1; k <= m + 1; ++k) {
                MultiPoly shift = k - 1 <= m ? multiplier_ * prev[k - 1] : MultiPoly();
                MultiPoly sum;
                if (k <= m) {
                    const MultiPoly& t = prev[k];
                    int hi = t.max_variable();
                    for (int j = lowest_var_; j <= hi; ++j) {
                        MultiPoly d = t.derivative(j);
                        if (!d.is_zero()) sum += MultiPoly::variable(j + 1) * d;
                    }
                }
                row[k] = multiplier_on_sum_ ? shift + multiplier_ * sum : shift + sum;
            }
            rows_.push_back(std::move(row));
        }
    }

    MultiPoly multiplier_;
    int lowest_var_;
    bool multiplier_on_sum_;
    MultiPoly zero_;
    std::vector<std::vector<MultiPoly>> rows_;
    std::mutex mu_;
};

} // namespace mspoly
