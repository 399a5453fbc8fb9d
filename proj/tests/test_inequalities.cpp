#include <doctest.h>

#include <random>

#include "qplab/asymptotics.hpp"
#include "qplab/combinatorics.hpp"
#include "qplab/inequalities.hpp"
#include "qplab/partitions.hpp"
#include "qplab/roots.hpp"

using namespace qplab;

namespace {
Multiset ms(std::initializer_list<std::int64_t> parts) {
    return Multiset(std::vector<std::int64_t>(parts));
}

Window win(std::initializer_list<long> values, long base = 0) {
    Window w;
    w.base = base;
    for (long v : values) w.values.emplace_back(v);
    return w;
}

Window window_from(const std::vector<Int>& series_values, long first, std::size_t len) {
    Window w;
    w.base = first;
    for (std::size_t i = 0; i < len; ++i)
        w.values.emplace_back(series_values[static_cast<std::size_t>(first) + i]);
    return w;
}

Polynomial poly(std::initializer_list<Rat> coeffs) { return Polynomial(std::vector<Rat>(coeffs)); }

QuasiPolynomial partition_qp(const Multiset& A) {
    long period = static_cast<long>(A.lcm().get_si());
    long degree = static_cast<long>(A.k()) - 1;
    return QuasiPolynomial::recover(series(A, period * (degree + 2) - 1).values, period, degree);
}
}  // namespace

TEST_SUITE("inequalities") {

TEST_CASE("jensen polynomial coefficients") {
    CHECK(jensen_poly(win({1, 1, 1}), 2) == poly({Rat(1), Rat(2), Rat(1)}));
    CHECK(jensen_poly(win({1, 0, 1}), 2) == poly({Rat(1), Rat(0), Rat(1)}));
    CHECK(jensen_poly(win({1, 2}), 1) == poly({Rat(1), Rat(2)}));
    CHECK_THROWS_AS(jensen_poly(win({1, 2}), 2), std::invalid_argument);
}

TEST_CASE("hyperbolicity") {
    CHECK(is_hyperbolic(poly({Rat(1), Rat(2), Rat(1)})));
    CHECK_FALSE(is_hyperbolic(poly({Rat(1), Rat(0), Rat(1)})));
    CHECK(is_hyperbolic(Polynomial(Rat(5))));  // no roots to be non-real
    CHECK_THROWS_AS(is_hyperbolic(Polynomial()), std::domain_error);
    auto s = series(ms({1, 2, 3, 4, 5}), 110);
    // degree-2 jensen at n=100 is hyperbolic (its discriminant is the
    // turan2 value at 101, positive past the n=37 threshold)
    CHECK(is_hyperbolic(jensen_poly(window_from(s.values, 100, 3), 2)));
    CHECK(turan_expression(window_from(s.values, 100, 3), 2) > 0);
    // the degree-3 one is not: the turan3 expression at n=100 is negative
    // (cross-checked below), so a complex pair must be present
    CHECK_FALSE(is_hyperbolic(jensen_poly(window_from(s.values, 100, 4), 3)));
    CHECK(turan_expression(window_from(s.values, 99, 4), 3) < 0);
}

TEST_CASE("turan expressions") {
    CHECK(turan_expression(win({1, 1, 1}), 2) == 0);
    CHECK(turan_expression(win({1, 2, 3, 4}), 3) == 0);
    CHECK(turan_expression(win({1, 2, 3}), 2) == 1);  // 4 - 3
    auto s = series(ms({1, 2, 3, 4, 5}), 45);
    CHECK(turan_expression(window_from(s.values, 37, 3), 2) > 0);  // at n = 38
    CHECK(turan_expression(window_from(s.values, 36, 3), 2) < 0);  // at n = 37, last violation
    CHECK_THROWS_AS(turan_expression(win({1, 1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(turan_expression(win({1, 1, 1, 1, 1}), 5), std::invalid_argument);
}

TEST_CASE("laguerre expression raw vs printed forms") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> val(1, 10000);
    auto w2 = [&](const Window& w) -> Rat {  // 3 w2^2 - 4 w1 w3 + w0 w4
        return Rat(3) * w.values[2] * w.values[2] - Rat(4) * w.values[1] * w.values[3] +
               w.values[0] * w.values[4];
    };
    auto w3 = [&](const Window& w) -> Rat {  // 10 w3^2 - 15 w2 w4 + 6 w1 w5 - w0 w6
        return Rat(10) * w.values[3] * w.values[3] - Rat(15) * w.values[2] * w.values[4] +
               Rat(6) * w.values[1] * w.values[5] - w.values[0] * w.values[6];
    };
    for (int iter = 0; iter < 100; ++iter) {
        Window w;
        for (int i = 0; i < 7; ++i) w.values.emplace_back(val(rng));
        Window w5{0, {w.values.begin(), w.values.begin() + 5}};
        auto l2 = laguerre_expression(w5, 2);
        CHECK(l2.raw == 2 * w2(w5));
        CHECK(l2.reduced == w2(w5));
        auto l3 = laguerre_expression(w, 3);
        CHECK(l3.raw == 2 * w3(w));
        CHECK(l3.reduced == w3(w));
        auto l1 = laguerre_expression(Window{0, {w.values.begin(), w.values.begin() + 3}}, 1);
        CHECK(l1.raw == 2 * l1.reduced);
    }
    auto l0 = laguerre_expression(win({-7}), 0);
    CHECK(l0.raw == 49);
    CHECK(l0.reduced == 49);
    CHECK_THROWS_AS(laguerre_expression(win({1, 2}), 1), std::invalid_argument);
}

TEST_CASE("generalized laguerre explicit forms") {
    for (const Rat& alpha : {Rat(0), Rat(1), Rat(3), make_rat(1, 2), make_rat(7, 3)}) {
        CHECK(generalized_laguerre(0, alpha) == Polynomial(Rat(1)));
        CHECK(generalized_laguerre(1, alpha) == poly({alpha + 1, Rat(-1)}));
        CHECK(generalized_laguerre(2, alpha) ==
              poly({(alpha + 1) * (alpha + 2) / 2, -(alpha + 2), make_rat(1, 2)}));
        CHECK(generalized_laguerre(3, alpha) ==
              poly({(alpha + 1) * (alpha + 2) * (alpha + 3) / 6,
                    -(alpha + 2) * (alpha + 3) / 2, (alpha + 3) / 2, make_rat(-1, 6)}));
    }
    // leading sign (-1)^m
    for (long m = 0; m <= 6; ++m)
        CHECK(sign(generalized_laguerre(m, make_rat(5, 2)).leading()) == (m % 2 == 0 ? 1 : -1));
}

TEST_CASE("generalized laguerre has m positive real roots for integer alpha") {
    for (long alpha = 0; alpha <= 5; ++alpha)
        for (long m = 1; m <= 6; ++m) {
            Polynomial L = generalized_laguerre(m, Rat(alpha));
            CHECK(is_hyperbolic(L));
            CHECK(positive_root_count(L, true) == m);
        }
}

TEST_CASE("limit profile basics") {
    auto profile = limit_profile(ms({1, 1, 1}), 0, 50, {Rat(1), Rat(5)});
    for (const auto& s : profile.samples) {
        CHECK(s.value == 1);  // s = 0: constant 1 exactly
        CHECK(s.target == 1);
        CHECK(s.deviation == 0);
    }

    // two ones: l = 1, target (-1) 1! L_1^{(0)}(x) = x - 1
    auto p2 = limit_profile(ms({1, 1}), 1, 10000, {Rat(1)});
    CHECK(p2.target_poly == poly({Rat(-1), Rat(1)}));
    CHECK(p2.samples[0].deviation < make_rat(1, 100));

    CHECK_THROWS_AS(limit_profile(ms({2}), 1, 5, {Rat(1)}), std::invalid_argument);
}

TEST_CASE("limit profile converges monotonically for 1..5") {
    std::vector<Rat> xs{make_rat(1, 2), Rat(1), Rat(2)};
    auto s = series(ms({1, 2, 3, 4, 5}), 10002);
    auto at = [&](long n) { return limit_profile(s.values, 4, 2, n, xs); };
    auto p100 = at(100), p1000 = at(1000), p10000 = at(10000);
    // target 2 L_2^{(2)}(x) = x^2 - 8x + 12
    CHECK(p100.target_poly == poly({Rat(12), Rat(-8), Rat(1)}));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(p100.samples[i].deviation > p1000.samples[i].deviation);
        CHECK(p1000.samples[i].deviation > p10000.samples[i].deviation);
    }
}

TEST_CASE("r-log-concavity operator") {
    std::vector<Int> linear;
    for (long i = 0; i < 30; ++i) linear.emplace_back(i + 1);
    CHECK(r_log_concave_check(linear, 1, 0));

    std::vector<Int> geometric;
    for (long i = 0; i < 20; ++i) geometric.push_back(int_pow(Int(2), static_cast<unsigned long>(i)));
    CHECK_FALSE(r_log_concave_check(geometric, 1, 0));  // operator gives identically 0

    auto s = series(ms({1, 2, 3, 4, 5}), 2000);
    CHECK(r_log_concave_check(s.values, 1, 38));
    CHECK(r_log_concave_check(s.values, 1, 37));
    CHECK_FALSE(r_log_concave_check(s.values, 1, 36));  // entry 36 is the n=37 violation

    CHECK_THROWS_AS(r_log_concave_check(std::vector<Int>{1, 2}, 1, 0), std::invalid_argument);
}

TEST_CASE("binomial-sequence is infinitely log-concave at the start") {
    // rows of Pascal's triangle are a classic r-log-concave smoke input
    std::vector<Int> row;
    for (long i = 0; i <= 24; ++i) row.push_back(binomial(24, i));
    CHECK(r_log_concave_check(row, 2, 0));
}

TEST_CASE("turan expressions match hankel minors up to fixed factors") {
    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<long> val(1, 200);
    int nonzero3 = 0, nonzero4 = 0;
    for (int iter = 0; iter < 500; ++iter) {
        Window w;
        for (int i = 0; i < 5; ++i) w.values.emplace_back(val(rng));
        Window w4{0, {w.values.begin(), w.values.begin() + 4}};

        Rat t3 = turan_expression(w4, 3);
        Rat minor3 = hankel_minor_dets(jensen_poly(w4, 3)).at(2);
        // c^{2s-2} (c = top window entry) clears the Newton-sum denominators
        Rat clear3 = rat_pow(w.values[3], 4);
        CHECK(Rat(27) * t3 == clear3 * minor3);
        CHECK(sign(t3) == sign(minor3));
        if (t3 != 0) ++nonzero3;

        Rat t4 = turan_expression(w, 4);
        Rat minor4 = hankel_minor_dets(jensen_poly(w, 4)).at(3);
        Rat clear4 = rat_pow(w.values[4], 6);
        CHECK(Rat(256) * t4 == clear4 * minor4);
        CHECK(sign(t4) == sign(minor4));
        if (t4 != 0) ++nonzero4;
    }
    CHECK(nonzero3 > 400);  // the identity is not vacuous on this sample
    CHECK(nonzero4 > 400);
}

TEST_CASE("profile of the 1,2 staircase") {
    auto qp = partition_qp(ms({1, 2}));
    auto prof = inequality_profile(qp, ExprKind::turan2);
    REQUIRE(prof.period == 2);
    CHECK(prof.classes[0].degree == 1);
    CHECK(prof.classes[0].leading == make_rat(1, 2));
    CHECK(prof.classes[1].degree == 1);
    CHECK(prof.classes[1].leading == make_rat(-1, 2));
    CHECK(prof.min_degree == 1);
    CHECK(prof.min_leading == make_rat(-1, 2));
    CHECK(prof.argmin == std::vector<long>{1});
}

TEST_CASE("profile flags identically zero classes") {
    auto one = QuasiPolynomial::constant(Rat(1));
    auto prof = inequality_profile(one, ExprKind::turan2);
    CHECK(prof.classes[0].zero);
    CHECK(prof.min_zero);
}

TEST_CASE("profile rejects nonpositive leading pieces") {
    auto parity = QuasiPolynomial(2, {Polynomial(Rat(1)), Polynomial()});
    CHECK_THROWS_AS(inequality_profile(parity, ExprKind::turan2), std::invalid_argument);
}

TEST_CASE("profile is independent of the job count") {
    auto qp = partition_qp(ms({1, 2, 3}));
    auto a = inequality_profile(qp, ExprKind::laguerre, 2, false, 1);
    auto b = inequality_profile(qp, ExprKind::laguerre, 2, false, 4);
    REQUIRE(a.classes.size() == b.classes.size());
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        CHECK(a.classes[i].degree == b.classes[i].degree);
        CHECK(a.classes[i].leading == b.classes[i].leading);
    }
    CHECK(a.argmin == b.argmin);
}

TEST_CASE("monomial laguerre expression expands exactly") {
    // f(n) = n^2, d = 1: raw expression is 4n^2 + 8n + 2
    QuasiPolynomial f(1, {Polynomial::monomial(Rat(1), 2)});
    Polynomial raw = expression_on_class(f, 0, ExprKind::laguerre, 1, /*laguerre_raw=*/true);
    CHECK(raw == poly({Rat(2), Rat(8), Rat(4)}));
    CHECK(raw.leading() == Rat(factorial(2)) * Rat(binomial(2, 1)));
}

TEST_CASE("monomial laguerre leading terms across orders") {
    // raw leading term (2d)! C(l,d) n^{2(l-d)} for f = n^l
    for (long l = 1; l <= 12; ++l) {
        QuasiPolynomial f(1, {Polynomial::monomial(Rat(1), static_cast<std::size_t>(l))});
        for (long d = 1; d <= std::min<long>(5, l / 2); ++d) {
            auto prof = inequality_profile(f, ExprKind::laguerre, d, /*laguerre_raw=*/true);
            CHECK(prof.classes[0].degree == 2 * (l - d));
            CHECK(prof.classes[0].leading == Rat(factorial(static_cast<unsigned long>(2 * d))) *
                                                 Rat(binomial(l, d)));
        }
    }
}

TEST_CASE("profiles sample-check against direct evaluation") {
    // expression polynomial on class r must reproduce windowed values
    Multiset A = ms({1, 2, 3});
    auto qp = partition_qp(A);
    auto s = series(A, 200);
    for (ExprKind kind : {ExprKind::turan2, ExprKind::turan3, ExprKind::turan4}) {
        long back = kind_backward_span(kind);
        int d = kind == ExprKind::turan2 ? 2 : kind == ExprKind::turan3 ? 3 : 4;
        for (long n = 10; n <= 60; ++n) {
            Polynomial e = expression_on_class(qp, n % qp.period(), kind);
            Window w = window_from(s.values, n - back, static_cast<std::size_t>(back) +
                                                           static_cast<std::size_t>(
                                                               kind_forward_span(kind, d)) +
                                                           1);
            CHECK(e(Rat(n)) == turan_expression(w, d));
        }
    }
    for (long d = 0; d <= 3; ++d) {
        for (long n = 10; n <= 40; ++n) {
            Polynomial e = expression_on_class(qp, n % qp.period(), ExprKind::laguerre, d);
            Window w = window_from(s.values, n, static_cast<std::size_t>(2 * d) + 1);
            CHECK(e(Rat(n)) == laguerre_expression(w, d).reduced);
        }
    }
}

TEST_CASE("gcd hypothesis gives positive leading coefficients in every class") {
    struct Case { Multiset A; ExprKind kind; long d; };
    // turan order d needs gcd_condition(A, k-d); laguerre order d needs k-2d
    const std::vector<Case> cases = {
        {ms({1, 2, 3, 4, 5}), ExprKind::turan2, 0},
        {ms({1, 2, 3, 4, 5, 6, 7}), ExprKind::turan3, 0},
        {ms({1, 1, 2, 3}), ExprKind::turan2, 0},
        {ms({1, 2, 3, 4, 5}), ExprKind::laguerre, 1},
        {ms({1, 1, 2, 3}), ExprKind::laguerre, 1},
    };
    for (const auto& [A, kind, d] : cases) {
        long k = static_cast<long>(A.k());
        long order = kind == ExprKind::turan2 ? 2 : kind == ExprKind::turan3 ? 3 : d;
        std::size_t need = static_cast<std::size_t>(
            kind == ExprKind::laguerre ? k - 2 * order : k - order);
        REQUIRE(A.gcd_condition(need));
        auto prof = inequality_profile(partition_qp(A), kind, d);
        for (const auto& cp : prof.classes) {
            CHECK_FALSE(cp.zero);
            CHECK(sign(cp.leading) > 0);
        }
    }
}

TEST_CASE("threshold scan basics") {
    std::vector<Int> constant(50, Int(3));
    auto res = threshold_scan(constant, ExprKind::turan2, 2, 40);
    CHECK(res.violations.empty());
    CHECK_FALSE(res.last_violation.has_value());
    CHECK(res.holds_from == 1);  // first admissible index
    CHECK_FALSE(res.persists());

    auto s5 = series(ms({1, 2, 3, 4, 5}), 10002);
    auto scan = threshold_scan(s5.values, ExprKind::turan2, 2, 10000);
    std::vector<long> expected{1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31, 37};
    CHECK(scan.violations == expected);
    CHECK(*scan.last_violation == 37);
    CHECK(scan.holds_from == 38);
    CHECK_FALSE(scan.persists());

    CHECK_THROWS_AS(threshold_scan(constant, ExprKind::turan2, 2, 1000), std::invalid_argument);
}

TEST_CASE("threshold scan on squares never violates laguerre order 0") {
    std::vector<Int> seq;
    for (long i = 0; i < 120; ++i) seq.emplace_back(i * i - 10);  // sign-mixed inputs
    auto res = threshold_scan(seq, ExprKind::laguerre, 0, 100);
    CHECK(res.violations.empty());
}

TEST_CASE("threshold scan jensen and rlogconcave kinds") {
    auto s5 = series(ms({1, 2, 3, 4, 5}), 300);
    auto jres = threshold_scan(s5.values, ExprKind::jensen, 2, 200);
    auto tres = threshold_scan(s5.values, ExprKind::turan2, 2, 200);
    // J^{2,n} hyperbolic iff its discriminant 4(w_{n+1}^2 - w_n w_{n+2}) >= 0,
    // i.e. iff turan2 holds at n+1
    std::vector<long> shifted;
    for (long n : tres.violations) shifted.push_back(n - 1);
    CHECK(jres.violations == shifted);

    auto rres = threshold_scan(s5.values, ExprKind::rlogconcave, 1, 200);
    CHECK(*rres.last_violation == 36);  // entry index convention: entry i = turan2 at n=i+1
    CHECK(rres.holds_from == 37);
}

TEST_CASE("scan results are independent of the job count") {
    auto s = series(ms({1, 2, 3}), 500);
    auto a = threshold_scan(s.values, ExprKind::turan3, 3, 480, 1);
    auto b = threshold_scan(s.values, ExprKind::turan3, 3, 480, 4);
    CHECK(a.violations == b.violations);
    CHECK(a.holds_from == b.holds_from);
}

TEST_CASE("profile serialization") {
    auto prof = inequality_profile(partition_qp(ms({1, 2})), ExprKind::turan2);
    std::string json = prof.to_json();
    CHECK(json.find("\"kind\":\"turan2\"") != std::string::npos);
    CHECK(json.find("\"-1/2\"") != std::string::npos);
    std::string csv = prof.to_csv();
    CHECK(csv == "class,degree,leading_num,leading_den\n0,1,1,2\n1,1,-1,2\n");
}

}  // TEST_SUITE
