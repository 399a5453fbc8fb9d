#pragma once

#include <vector>

#include "qplab/multiset.hpp"

namespace qplab {

// p_A(0..N): values[n] is the coefficient of x^n in prod_{a in A} 1/(1-x^a),
// one factor per multiset element (duplicates count as distinct sources).
struct PartitionSeries {
    Multiset A;
    std::vector<Int> values;  // index n = 0..N
};

PartitionSeries series(const Multiset& A, long N);

// Independent oracle: plain recursive enumeration over one nonnegative
// exponent per multiset element. Exponential; intended for small n.
Int brute_force_count(const Multiset& A, long n);

}  // namespace qplab
