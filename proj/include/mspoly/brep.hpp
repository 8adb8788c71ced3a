#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "mspoly/multipoly.hpp"

namespace mspoly {

// A family Q_{n,k} = B_{n,k}(H_1, ..., H_{n-k+1}) given by its generator
// sequence H_1, H_2, ... (extended lazily on demand). Regular iff H_1 != 0.
class BRepFamily {
public:
    explicit BRepFamily(std::function<MultiPoly(long)> generator);

    const MultiPoly& generator(long j) const; // H_j, j >= 1
    bool regular() const;

    // Q_{n,k}; Q_{n,0} = delta_{n,0}, zero outside the triangle.
    MultiPoly q(long n, long k) const;
    // Orthogonal companion A_{n,k}(H_1, ...); NotRegular when H_1 = 0.
    MultiPoly q_bar(long n, long k) const;

    // Integer-index extension: the redefined B_{n,k} (resp. A_{n,k})
    // composed with the generator.
    MultiPoly q_ext(long n, long k) const;
    MultiPoly q_bar_ext(long n, long k) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

BRepFamily brep_from_generator(std::function<MultiPoly(long)> generator);

// Companion family generated by A_{j,1}(H_1, ..., H_j).
BRepFamily brep_orthogonal(const BRepFamily& fam);

// The binomial recurrence criterion
//   Q_{n,k} = sum_{j=1}^{n-k+1} C(n-1,j-1) Q_{j,1} Q_{n-j,k-1}
// checked for 1 <= k <= n <= max_n (Q_{m,0} = delta_{m,0}); first failing
// (n,k) is reported through witness when given.
bool brep_check_recurrence(const std::function<MultiPoly(long, long)>& q, long max_n,
                           std::pair<long, long>* witness = nullptr);

// Row-extension rejection test: solves each row system B_{n,k}(H) = Q_{n,k}
// afresh (H_1 pinned by row 1, the diagonal checked against H_1^n, interior
// unknowns solved top-down; they appear linearly) and compares consecutive
// rows' interior solutions. Returns the first (n,k) at which no consistent
// generator extension exists, or nullopt. H_1 must be zero-free; when it is
// not a unit monomial the check falls back to comparing against the
// generator H_j = Q_{j,1} directly.
std::optional<std::pair<long, long>> brep_reject_witness(
    const std::function<MultiPoly(long, long)>& q, long max_n);

// Generalized Stirling inversion: U_n = sum_k Q_{n,k} V_k and its inverse
// V_n = sum_k Qbar_{n,k} U_k.
std::vector<MultiPoly> stirling_inversion_forward(const BRepFamily& fam,
                                                  const std::vector<MultiPoly>& v);
std::vector<MultiPoly> stirling_inversion_backward(const BRepFamily& fam,
                                                   const std::vector<MultiPoly>& u);

} // namespace mspoly
