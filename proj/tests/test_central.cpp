#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbc/central.hpp"
#include "pbc/factor.hpp"

using namespace pbc;

TEST_CASE("central pair values") {
    CHECK(central_numbers(0).B == 1);
    CHECK(central_numbers(1).B == 2);
    CHECK(central_numbers(1).C == 1);
    CHECK(central_numbers(2).B == 6);
    CHECK(central_numbers(2).C == 2);
    CHECK(central_numbers(4).B == 70);
    CHECK(central_numbers(4).C == 14);
    const CentralPair& p30 = central_numbers(30);
    mpz_class b30;
    mpz_bin_uiui(b30.get_mpz_t(), 60, 30);
    CHECK(p30.B == b30);
    CHECK(p30.C * 31 == p30.B);
    // Catalan ratio recurrence C_{m+1} (m+2) = C_m (4m+2)
    for (unsigned m = 0; m < 50; ++m)
        CHECK(central_numbers(m + 1).C * (m + 2) == central_numbers(m).C * (4 * m + 2));
}

TEST_CASE("valuations by Legendre sums") {
    CHECK(nu_p_central(2, 4, CentralKind::B) == 1);
    CHECK(nu_p_central(7, 4, CentralKind::C) == 1);
    CHECK(nu_p_central(11, 2, CentralKind::B) == 0);
    CHECK(nu_p_central(2, 4, CentralKind::C) == 1);   // C_4 = 14
    CHECK(nu_p_central(23, 12, CentralKind::C) == 1); // C_12 = 2^2 7 17 19 23
    CHECK(nu_p_central(3, 12, CentralKind::C) == 0);
}

TEST_CASE("full-support reconstruction up to 2000") {
    for (unsigned m = 1; m <= 2000; ++m) {
        mpz_class prod_b = 1, prod_c = 1;
        for (uint32_t p : small_primes()) {
            if (p > 2 * m) break;
            unsigned nb = nu_p_central(p, m, CentralKind::B);
            if (nb) {
                mpz_class pe;
                mpz_ui_pow_ui(pe.get_mpz_t(), p, nb);
                prod_b *= pe;
            }
            unsigned nc = nu_p_central(p, m, CentralKind::C);
            if (nc) {
                mpz_class pe;
                mpz_ui_pow_ui(pe.get_mpz_t(), p, nc);
                prod_c *= pe;
            }
        }
        REQUIRE(prod_b == central_numbers(m).B);
        REQUIRE(prod_c == central_numbers(m).C);
    }
}

TEST_CASE("primes in the upper window divide both values once") {
    for (unsigned m = 2; m <= 400; ++m) {
        for (uint32_t p : small_primes()) {
            if (p <= m + 1) continue;
            if (p > 2 * m) break;
            REQUIRE(nu_p_central(p, m, CentralKind::B) == 1);
            REQUIRE(nu_p_central(p, m, CentralKind::C) == 1);
        }
    }
}

TEST_CASE("Stirling bounds bracket the exact log") {
    for (unsigned m = 1; m <= 2000; m += (m < 50 ? 1 : 37)) {
        StirlingBounds sb = stirling_log_interval(m, 256);
        Interval exact_log = (Interval::exact(central_numbers(m).C, 256) /
                              Interval::exact(2L, 256))
                                 .log();
        CHECK(sb.lo.certainly_lt(exact_log));
        CHECK(exact_log.certainly_lt(sb.hi));
    }
}

TEST_CASE("upper estimate C_m < 4^m / sqrt(pi m)") {
    for (unsigned m = 1; m <= 2000; m += (m < 40 ? 1 : 53)) {
        mpz_class four_m = mpz_class(1) << (2 * m);
        Interval bound = Interval::exact(four_m, 256) /
                         (Interval::pi_const(256) * Interval::exact(long(m), 256)).sqrt();
        CHECK(Interval::exact(central_numbers(m).C, 256).certainly_lt(bound));
    }
}

TEST_CASE("growth monotonicity by exact comparison") {
    AuditReport ok = growth_monotonicity_check(7, 500);
    CHECK(ok.status == AuditStatus::pass);
    AuditReport small = growth_monotonicity_check(7, 8);
    CHECK(small.status == AuditStatus::pass);
    AuditReport rejected = growth_monotonicity_check(2, 7);
    CHECK(rejected.status == AuditStatus::fail);
}

TEST_CASE("boundary growth values") {
    // log(C_m / 2) exceeds m, 1.36 m, 1.38 m at the stated thresholds
    struct Row {
        unsigned m;
        mpq_class coef;
    };
    for (const Row& row : {Row{14, mpq_class(1)}, Row{400, mpq_class(136, 100)}, Row{2100, mpq_class(138, 100)}}) {
        Interval lhs = log_central(row.m, CentralKind::C, 192) - Interval::log_of(mpz_class(2), 192);
        CHECK(lhs.certainly_gt(mpq_class(row.coef * row.m)));
        StirlingBounds sb = stirling_log_interval(row.m, 192);
        CHECK(sb.lo.certainly_gt(mpq_class(row.coef * row.m)));
    }
    // the thresholds are sharp: one step earlier the 1.36 floor fails
    Interval before = log_central(344, CentralKind::C, 192) - Interval::log_of(mpz_class(2), 192);
    CHECK(before.certainly_lt(mpq_class(136, 100) * 344));
}

TEST_CASE("weighted log bound") {
    CHECK(weighted_log_bound_check(7, 7).status == AuditStatus::pass);
    CHECK(weighted_log_bound_check(10, 1000).status == AuditStatus::pass);
    CHECK(weighted_log_bound_check(500, 500).status == AuditStatus::pass);
    CHECK(weighted_log_bound_check(3, 10).status == AuditStatus::fail);  // precondition
}
