#include "mspoly/partitions.hpp"

namespace mspoly {

namespace {

void enumerate(long remaining, long parts_left, long max_part, std::vector<long>& r,
               std::vector<PartitionType>& out) {
    if (remaining == 0 && parts_left == 0) {
        PartitionType t;
        t.r = r;
        while (!t.r.empty() && t.r.back() == 0) t.r.pop_back();
        out.push_back(std::move(t));
        return;
    }
    if (remaining <= 0 || parts_left <= 0 || max_part <= 0) return;
    if (remaining < parts_left || remaining > parts_left * max_part) return;
    long hi = remaining / max_part;
    if (hi > parts_left) hi = parts_left;
    for (long count = hi; count >= 0; --count) {
        r[max_part - 1] = count;
        enumerate(remaining - count * max_part, parts_left - count, max_part - 1, r, out);
        r[max_part - 1] = 0;
    }
}

} // namespace

std::vector<PartitionType> partition_types(long n, long k) {
    std::vector<PartitionType> out;
    if (n < 0 || k < 0) return out;
    if (n == 0 && k == 0) {
        out.push_back(PartitionType{});
        return out;
    }
    if (k == 0 || n < k) return out;
    long max_part = n - k + 1;
    std::vector<long> r(static_cast<size_t>(max_part), 0);
    enumerate(n, k, max_part, r, out);
    return out;
}

} // namespace mspoly
