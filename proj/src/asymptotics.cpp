#include "qplab/asymptotics.hpp"

#include <stdexcept>

#include "qplab/combinatorics.hpp"

namespace qplab {

namespace {

// Truncated product of power series stored as coefficient vectors.
std::vector<Rat> mul_trunc(const std::vector<Rat>& a, const std::vector<Rat>& b, std::size_t len) {
    std::vector<Rat> r(len, Rat(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Multiplicative inverse of a series with constant term 1.
std::vector<Rat> invert_trunc(const std::vector<Rat>& a, std::size_t len) {
    std::vector<Rat> inv(len, Rat(0));
    inv[0] = 1;
    for (std::size_t n = 1; n < len; ++n) {
        Rat acc(0);
        for (std::size_t i = 1; i <= n && i < a.size(); ++i) acc += a[i] * inv[n - i];
        inv[n] = -acc;
    }
    return inv;
}

}  // namespace

SigmaSeries sigma(const Multiset& A, long upto) {
    if (upto < 0) throw std::invalid_argument("sigma: upto must be >= 0");
    std::size_t len = static_cast<std::size_t>(upto) + 1;
    std::vector<Rat> acc(len, Rat(0));
    acc[0] = 1;
    for (auto a : A.parts()) {
        // sinh(a t/2) / (a t/2) = sum_m (a t / 2)^{2m} / (2m+1)!
        std::vector<Rat> direct(len, Rat(0));
        Rat half_a = make_rat(Int(static_cast<long>(a)), Int(2));
        Rat power(1);
        for (std::size_t m = 0; 2 * m < len; ++m) {
            direct[2 * m] = power / Rat(factorial(2 * m + 1));
            power *= half_a * half_a;
        }
        acc = mul_trunc(acc, invert_trunc(direct, len), len);
    }
    return SigmaSeries{A, std::move(acc)};
}

Polynomial almkvist_main_term(const Multiset& A, long j, bool allow_gcd_failure) {
    long k = static_cast<long>(A.k());
    if (j < 1 || j > k) throw std::invalid_argument("almkvist_main_term: need 1 <= j <= k");
    if (!allow_gcd_failure && !A.gcd_condition(static_cast<std::size_t>(j)))
        throw std::invalid_argument(
            "almkvist_main_term: gcd condition fails for " + std::to_string(j) +
            "-element multisubsets (pass the override to compute anyway)");
    SigmaSeries sig = sigma(A, k - j);
    Rat half_s1 = Rat(A.power_sum(1)) / 2;
    Polynomial sum;
    for (long i = 0; i <= k - j; ++i) {
        const Rat& s = sig.coefficients[static_cast<std::size_t>(i)];
        if (s == 0) continue;
        unsigned long e = static_cast<unsigned long>(k - 1 - i);
        Polynomial term = Polynomial::monomial(Rat(1), e).shifted(half_s1);
        sum += term * (s / Rat(factorial(e)));
    }
    return sum * (Rat(1) / Rat(A.product()));
}

}  // namespace qplab
