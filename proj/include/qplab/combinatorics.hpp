#pragma once

#include "qplab/rational.hpp"

namespace qplab {

Int factorial(unsigned long n);

// C(n, r) for n >= 0; returns 0 when r < 0 or r > n. Negative n is rejected
// (std::domain_error) rather than extended.
Int binomial(const Int& n, const Int& r);
inline Int binomial(long n, long r) { return binomial(Int(n), Int(r)); }

// C(top, k) for rational top via the falling factorial
// top (top-1) ... (top-k+1) / k!.
Rat binomial_rat(const Rat& top, unsigned long k);

// Stirling numbers of the second kind.
Int stirling2(unsigned long v, unsigned long u);

}  // namespace qplab
