#pragma once

#include <vector>

#include "qplab/multiset.hpp"
#include "qplab/polynomial.hpp"

namespace qplab {

// Taylor coefficients of prod_{a in A} (a t/2)/sinh(a t/2); sigma_0 = 1 and
// every odd coefficient vanishes.
struct SigmaSeries {
    Multiset A;
    std::vector<Rat> coefficients;  // sigma_0 .. sigma_upto
};

SigmaSeries sigma(const Multiset& A, long upto);

// The polynomial (1/prod a_i) * sum_{i=0}^{k-j} sigma_i (n+s_1/2)^{k-1-i}/(k-1-i)!,
// expanded in n. Requires 1 <= j <= k; unless allow_gcd_failure is set the
// gcd condition over j-element multisubsets must hold (callers that
// override are expected to surface a warning, since the truncation-error
// guarantee is void without it).
Polynomial almkvist_main_term(const Multiset& A, long j, bool allow_gcd_failure = false);

}  // namespace qplab
