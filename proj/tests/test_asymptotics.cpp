#include <doctest.h>

#include <random>

#include "qplab/asymptotics.hpp"
#include "qplab/partitions.hpp"
#include "qplab/quasipoly.hpp"

using namespace qplab;

namespace {
Multiset ms(std::initializer_list<std::int64_t> parts) {
    return Multiset(std::vector<std::int64_t>(parts));
}

Multiset random_multiset(std::mt19937_64& rng, int max_k, std::int64_t max_part) {
    std::uniform_int_distribution<int> kdist(1, max_k);
    std::uniform_int_distribution<std::int64_t> part(1, max_part);
    int k = kdist(rng);
    std::vector<std::int64_t> parts;
    for (int i = 0; i < k; ++i) parts.push_back(part(rng));
    return Multiset(parts);
}

// closed forms in terms of power sums s_m
Rat sigma2_closed(const Multiset& A) { return -Rat(A.power_sum(2)) / 24; }
Rat sigma4_closed(const Multiset& A) {
    Rat s2(A.power_sum(2)), s4(A.power_sum(4));
    return (5 * s2 * s2 + 2 * s4) / 5760;
}
Rat sigma6_closed(const Multiset& A) {
    Rat s2(A.power_sum(2)), s4(A.power_sum(4)), s6(A.power_sum(6));
    return -(35 * s2 * s2 * s2 + 42 * s2 * s4 + 16 * s6) / 2903040;
}
}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("sigma series starts at 1 and vanishes at odd orders") {
    for (const auto& A : {ms({1}), ms({1, 2, 3}), ms({4, 4, 9}), ms({1, 1, 1, 1, 300})}) {
        auto sig = sigma(A, 9);
        CHECK(sig.coefficients[0] == 1);
        for (std::size_t i = 1; i < sig.coefficients.size(); i += 2)
            CHECK(sig.coefficients[i] == 0);
    }
}

TEST_CASE("sigma closed forms") {
    auto sig = sigma(ms({1, 2, 3}), 2);
    CHECK(sig.coefficients[2] == make_rat(-7, 12));  // -s_2/24 with s_2 = 14

    std::mt19937_64 rng(60601);
    for (int iter = 0; iter < 50; ++iter) {
        Multiset A = random_multiset(rng, 6, 20);
        auto s = sigma(A, 6);
        CHECK(s.coefficients[2] == sigma2_closed(A));
        CHECK(s.coefficients[4] == sigma4_closed(A));
        CHECK(s.coefficients[6] == sigma6_closed(A));
    }
}

TEST_CASE("sigma is multiplicative over disjoint unions") {
    std::mt19937_64 rng(222);
    for (int iter = 0; iter < 20; ++iter) {
        Multiset A = random_multiset(rng, 4, 12);
        Multiset B = random_multiset(rng, 4, 12);
        std::vector<std::int64_t> both = A.parts();
        both.insert(both.end(), B.parts().begin(), B.parts().end());
        auto sa = sigma(A, 8).coefficients;
        auto sb = sigma(B, 8).coefficients;
        auto sab = sigma(Multiset(both), 8).coefficients;
        for (std::size_t m = 0; m <= 8; ++m) {
            Rat conv(0);
            for (std::size_t i = 0; i <= m; ++i) conv += sa[i] * sb[m - i];
            CHECK(sab[m] == conv);
        }
    }
}

TEST_CASE("main term examples") {
    Polynomial p = almkvist_main_term(ms({1, 2}), 2);
    CHECK(p == Polynomial(std::vector<Rat>{make_rat(3, 4), make_rat(1, 2)}));

    CHECK(almkvist_main_term(ms({1, 1}), 1) ==
          Polynomial(std::vector<Rat>{Rat(1), Rat(1)}));

    Polynomial p5 = almkvist_main_term(ms({1, 2, 3, 4, 5}), 5);
    CHECK(p5.degree() == 4);
    CHECK(p5.leading() == make_rat(1, 2880));
}

TEST_CASE("main term preconditions") {
    CHECK_THROWS_AS(almkvist_main_term(ms({1, 2}), 0), std::invalid_argument);
    CHECK_THROWS_AS(almkvist_main_term(ms({1, 2}), 3), std::invalid_argument);
    // gcd condition fails for 1-element subsets of {2,4}
    CHECK_THROWS_AS(almkvist_main_term(ms({2, 4}), 1), std::invalid_argument);
    CHECK_NOTHROW(almkvist_main_term(ms({2, 4}), 1, /*allow_gcd_failure=*/true));
}

TEST_CASE("all-ones multisets are reproduced exactly") {
    // gcd condition holds at j=1, so the expansion carries no error term
    for (std::size_t k = 1; k <= 6; ++k) {
        Multiset A(std::vector<std::int64_t>(k, 1));
        Polynomial mt = almkvist_main_term(A, 1);
        auto s = series(A, 30);
        for (long n = 0; n <= 30; ++n)
            CHECK(mt(Rat(n)) == Rat(s.values[static_cast<std::size_t>(n)]));
    }
}

TEST_CASE("main term matches the recovered constant coefficient rows") {
    struct Case { Multiset A; long j; };
    const std::vector<Case> cases = {
        {ms({1, 1}), 1},          {ms({1, 1}), 2},       {ms({1, 2}), 2},
        {ms({1, 2, 3}), 2},       {ms({1, 2, 3}), 3},    {ms({1, 1, 2}), 2},
        {ms({1, 2, 3, 4}), 3},    {ms({1, 2, 3, 4}), 4}, {ms({1, 2, 2, 3}), 3},
        {ms({1, 2, 3, 4, 5}), 3}, {ms({1, 1, 1, 1, 300}), 2},
    };
    for (const auto& [A, j] : cases) {
        REQUIRE(A.gcd_condition(static_cast<std::size_t>(j)));
        long k = static_cast<long>(A.k());
        long period = static_cast<long>(A.lcm().get_si());
        auto qp = QuasiPolynomial::recover(series(A, period * (k + 1) - 1).values, period, k - 1);
        auto table = qp.coefficient_table();
        Polynomial mt = almkvist_main_term(A, j);
        for (long deg = k - 1; deg >= j - 1; --deg) {
            CHECK(table.constant[static_cast<std::size_t>(deg)]);
            CHECK(table.rows[static_cast<std::size_t>(deg)][0] ==
                  mt.coeff(static_cast<std::size_t>(deg)));
        }
    }
}

}  // TEST_SUITE
