#include "qplab/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace qplab {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(const Int& n, const Int& r) {
    if (n < 0) throw std::domain_error("binomial: negative upper index");
    if (r < 0 || r > n) return 0;
    Int out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), r.get_ui());
    return out;
}

Rat binomial_rat(const Rat& top, unsigned long k) {
    Rat prod(1);
    for (unsigned long i = 0; i < k; ++i) prod *= top - Rat(static_cast<long>(i));
    return prod / Rat(factorial(k));
}

Int stirling2(unsigned long v, unsigned long u) {
    if (u > v) return 0;
    if (v == 0) return 1;  // S(0,0)
    if (u == 0) return 0;
    // S(n,k) = k S(n-1,k) + S(n-1,k-1); row-by-row, one row kept.
    std::vector<Int> row(u + 1, Int(0));
    row[0] = 1;  // row for n=0
    for (unsigned long n = 1; n <= v; ++n) {
        for (unsigned long k = std::min<unsigned long>(u, n); k >= 1; --k)
            row[k] = Int(static_cast<long>(k)) * row[k] + row[k - 1];
        row[0] = 0;
    }
    return row[u];
}

}  // namespace qplab
