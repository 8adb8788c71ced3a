#pragma once

#include <vector>

namespace mspoly {

// An (n,k)-partition type: multiplicities r_1, r_2, ... with sum(r_j) = k
// and sum(j*r_j) = n. r[i] is the multiplicity of part size i+1.
struct PartitionType {
    std::vector<long> r;

    long parts() const {
        long s = 0;
        for (long v : r) s += v;
        return s;
    }
    long total() const {
        long s = 0;
        for (size_t i = 0; i < r.size(); ++i) s += static_cast<long>(i + 1) * r[i];
        return s;
    }
    long multiplicity(long part) const {
        return (part >= 1 && part <= static_cast<long>(r.size())) ? r[part - 1] : 0;
    }
};

// All (n,k)-partition types, largest part first within the recursion, so the
// order is deterministic. (n,0) is empty for n > 0; (0,0) is the empty type.
std::vector<PartitionType> partition_types(long n, long k);

} // namespace mspoly
