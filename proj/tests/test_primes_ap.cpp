#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "pbc/factor.hpp"
#include "pbc/primes_ap.hpp"

using namespace pbc;

TEST_CASE("class counts from the sieve") {
    APCountTables t24(24, 100);
    CHECK(t24.pi(100, 23) == 3);  // 23, 47, 71
    CHECK(t24.pi(100, 1) == 2);   // 73, 97
    APCountTables t5(5, 12);
    CHECK(t5.pi(12, 1) == 1);  // 11
    CHECK(t5.pi(1, 1) == 0);
    CHECK(t5.pi(12, 2) == 2);  // 2 and 7
    APCountTables t3(3, 1000);
    CHECK(t3.pi(10, 2) == 2);  // 2, 5
}

TEST_CASE("theta and psi") {
    APCountTables t(5, 200);
    // theta(25; 5, 4) = log 19 (primes 19; 4, 9, 14, 24 are not prime)
    Interval th = t.theta(25, 4, 128);
    CHECK(th.cmp(Interval::log_of(mpz_class(19), 128)) == 0);
    // psi adds prime powers: psi(125; 5, 1) counts 11, 31, 41, 61, 71, 101 and 11^2
    Interval ps = t.psi(125, 1, 128);
    Interval expect = Interval::log_of(mpz_class(11), 128).mul(mpq_class(2)) +
                      Interval::log_of(mpz_class(31), 128) + Interval::log_of(mpz_class(41), 128) +
                      Interval::log_of(mpz_class(61), 128) + Interval::log_of(mpz_class(71), 128) +
                      Interval::log_of(mpz_class(101), 128);
    CHECK(ps.cmp(expect) == 0);
    // theta <= psi everywhere
    for (unsigned long l : {1ul, 2ul, 3ul, 4ul})
        for (uint64_t y : {10ull, 50ull, 125ull, 200ull})
            CHECK_FALSE(t.psi(y, l, 128).certainly_lt(t.theta(y, l, 128)));
}

TEST_CASE("partition against the classless count") {
    APCountTables t(24, 5000);
    for (uint64_t y : {100ull, 1234ull, 5000ull}) {
        uint64_t sum = 0;
        for (unsigned long l = 1; l < 24; ++l)
            if (std::gcd(l, 24ul) == 1) sum += t.pi(y, l);
        uint64_t dividing = 2;  // 2 and 3 divide 24
        CHECK(sum + dividing == t.pi_all(y));
    }
}

TEST_CASE("least prime in the +-1 classes") {
    CHECK(least_prime_pm1(24) == 23);
    CHECK(least_prime_pm1(5) == 11);
    CHECK(least_prime_pm1(6) == 5);
    CHECK(least_prime_pm1(3) == 2);
    CHECK(least_prime_pm1(35) == 71);
}

TEST_CASE("gap checks near their thresholds") {
    CHECK(ap_gap_check(24, {5}, 15, 2000).status == AuditStatus::pass);
    CHECK(ap_gap_check(8, {3, 5}, 6, 2000).status == AuditStatus::pass);
    CHECK(ap_gap_check(12, {5}, 9, 2000).status == AuditStatus::pass);
    // below the threshold the window can be empty
    CHECK(ap_gap_check(24, {5}, 3, 14).status == AuditStatus::fail);
}

TEST_CASE("pointwise upper-count audit") {
    AuditReport rep = bt_audit(5, 1, {100});
    CHECK(rep.status == AuditStatus::pass);
    // pi(100; 5, 1) = 5 while the bound is about 16.7
    APCountTables t(5, 100);
    CHECK(t.pi(100, 1) == 5);
    AuditReport pre = bt_audit(5, 1, {4});
    CHECK(pre.status == AuditStatus::fail);  // y <= q rejected
    AuditReport ok3 = bt_audit(3, 2, {10, 100, 1000});
    CHECK(ok3.status == AuditStatus::pass);
}

TEST_CASE("tabulated psi/theta estimates hold at samples") {
    CHECK(rr_audit(5, 4, {10, 100, 10000}).status == AuditStatus::pass);
    CHECK(rr_audit(24, 23, {24, 1000, 10000}).status == AuditStatus::pass);
    CHECK_THROWS_AS(rr_audit(10, 3, {100}), std::domain_error);  // unsupported modulus
    AuditReport bad = rr_audit(5, 6, {100});
    CHECK(bad.status == AuditStatus::fail);  // l0 = 1 mod q rejected
}

TEST_CASE("combined estimate at large y") {
    CHECK(combined_sum_audit(24, 23, {1500, 4000}).status == AuditStatus::pass);
    CHECK(combined_sum_audit(12, 11, {1500, 4000}).status == AuditStatus::pass);
    CHECK(combined_sum_audit(24, 23, {100}).status == AuditStatus::fail);  // y < 1500
}

TEST_CASE("psi minus theta recount on a small range") {
    APCountTables t(8, 300);
    for (unsigned long l : {1ul, 3ul, 5ul, 7ul}) {
        Interval diff = t.psi(300, l, 128) - t.theta(300, l, 128);
        // direct recount of proper prime powers
        Interval expect = Interval::exact(0L, 128);
        for (uint64_t p : t.class_primes(l)) {
            unsigned extra = 0;
            for (uint64_t pe = p * p; pe <= 300; pe *= p) ++extra;
            if (extra)
                expect += Interval::log_of(mpz_class((unsigned long)p), 128) * Interval::exact(long(extra), 128);
            if (p * p > 300) break;
        }
        CHECK((diff - expect).contains_zero());
    }
}
