#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbc/interval.hpp"

using pbc::Interval;

TEST_CASE("exact values and outward rounding") {
    Interval third = Interval::exact(mpq_class(1, 3), 128);
    CHECK(third.cmp(mpq_class(1, 3)) == 0);
    CHECK(third.certainly_gt(mpq_class(33, 100)));
    CHECK(third.certainly_lt(mpq_class(34, 100)));
    CHECK(third.width() > 0);
    CHECK(third.width() < 1e-30);

    Interval five = Interval::exact(5L, 128);
    CHECK(five.certainly_ge(mpq_class(5)));
    CHECK(five.certainly_le(mpq_class(5)));
}

TEST_CASE("arithmetic encloses the exact result") {
    Interval a = Interval::exact(mpq_class(22, 7), 128);
    Interval b = Interval::exact(mpq_class(-3, 5), 128);
    Interval sum = a + b;
    CHECK(sum.cmp(mpq_class(22, 7) + mpq_class(-3, 5)) == 0);
    Interval prod = a * b;
    CHECK(prod.cmp(mpq_class(22, 7) * mpq_class(-3, 5)) == 0);
    Interval quot = a / b;
    CHECK(quot.cmp(mpq_class(22, 7) / mpq_class(-3, 5)) == 0);
    CHECK_THROWS_AS(a / (b + Interval::exact(mpq_class(3, 5), 128)), std::domain_error);
}

TEST_CASE("log and sqrt are monotone enclosures") {
    Interval two = Interval::exact(2L, 128);
    Interval l2 = two.log();
    CHECK(l2.certainly_gt(mpq_class(6931, 10000)));
    CHECK(l2.certainly_lt(mpq_class(6932, 10000)));
    Interval r2 = two.sqrt();
    CHECK((r2 * r2).cmp(mpq_class(2)) == 0);
    Interval root12 = Interval::exact(mpq_class(298, 1000), 128).rootn(12);
    CHECK(root12.certainly_gt(mpq_class(90, 100)));
    CHECK(root12.certainly_lt(mpq_class(905, 1000)));
}

TEST_CASE("log of big integers") {
    mpz_class big("123456789012345678901234567890");
    Interval l = Interval::log_of(big, 192);
    // e^66 < big < e^67
    CHECK(l.certainly_gt(mpq_class(66)));
    CHECK(l.certainly_lt(mpq_class(67)));
}

TEST_CASE("decide_predicate escalates precision") {
    int calls = 0;
    bool r = pbc::decide_predicate(
        [&](mpfr_prec_t p) -> std::optional<bool> {
            ++calls;
            if (p < 512) return std::nullopt;
            return true;
        },
        "test");
    CHECK(r);
    CHECK(calls == 3);
    CHECK_THROWS_AS(pbc::decide_predicate([](mpfr_prec_t) -> std::optional<bool> { return std::nullopt; },
                                          "never decides"),
                    pbc::indecisive_comparison);
}

TEST_CASE("pi constant") {
    Interval pi = Interval::pi_const(128);
    CHECK(pi.certainly_gt(mpq_class(314159, 100000)));
    CHECK(pi.certainly_lt(mpq_class(31416, 10000)));
}
