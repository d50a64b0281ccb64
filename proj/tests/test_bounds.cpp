#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pbc/bounds.hpp"
#include "pbc/factor.hpp"
#include "pbc/primes_ap.hpp"

using namespace pbc;

TEST_CASE("quadratic-in-log evaluator") {
    // at log l = 1 the value is the coefficient sum 505.04
    Interval e = Interval::exact(1L, 128).exp();
    Interval at_e = f_voutier(e);
    CHECK(at_e.certainly_gt(mpq_class(50503, 100)));
    CHECK(at_e.certainly_lt(mpq_class(50505, 100)));
    Interval at_10 = f_voutier(mpq_class(10), 128);
    CHECK(at_10.certainly_gt(mpq_class(973)));
    CHECK(at_10.certainly_lt(mpq_class(97307, 100)));
    CHECK_THROWS_AS(f_voutier(mpq_class(1), 128), std::domain_error);
}

TEST_CASE("weight table") {
    CHECK(g_weight_exact(24) == mpq_class(1373, 4000));
    CHECK(g_weight_exact(9) == mpq_class(119, 200));
    CHECK(g_weight_exact(5) == mpq_class(261, 400));
    CHECK(delta0(13) == mpq_class(33, 10));
    CHECK_THROWS_AS(delta0(25), std::domain_error);
    // odd n0 >= 25 uses the closed formula
    Interval g29 = g_weight(29, 128);
    // 3.9/28 + 1.46 log 87 / 29 = 0.3641...
    CHECK(g29.certainly_gt(mpq_class(364, 1000)));
    CHECK(g29.certainly_lt(mpq_class(3642, 10000)));
    CHECK_THROWS_AS(g_weight(26, 128), std::domain_error);
    // exact agreement of the tabled values with delta0/phi at the rational level
    for (unsigned long n0 : {5ul, 7ul, 9ul, 11ul, 16ul, 24ul}) {
        CHECK(g_weight_exact(n0) * euler_phi(n0) == delta0(n0));
        CHECK(g_weight(n0, 128).cmp(g_weight_exact(n0)) == 0);
    }
}

TEST_CASE("valuation-weighted residue sums") {
    XiValue x11 = xi(11, 24, 128);
    CHECK(x11.xi1.certainly_le(mpq_class(0)));
    CHECK(x11.xi2.certainly_le(mpq_class(0)));
    XiValue x4 = xi(4, 8, 128);
    CHECK(x4.xi1.cmp(Interval::log_of(mpz_class(7), 128)) == 0);
    XiValue x2 = xi(2, 5, 128);
    CHECK(x2.xi1.certainly_le(mpq_class(0)));
    CHECK(x2.xi2.certainly_le(mpq_class(0)));
    // xi1 <= xi2 on a sample
    for (unsigned j : {10u, 50u, 200u}) {
        XiValue v = xi(j, 5, 128);
        CHECK_FALSE(v.xi2.certainly_lt(v.xi1));
    }
}

TEST_CASE("delta0 ratios on a short prefix") {
    for (unsigned long n0 : {5ul, 24ul, 13ul}) {
        AuditReport rep = delta0_audit(n0, 200, 128, 2);
        CHECK(rep.status == AuditStatus::pass);
    }
}

TEST_CASE("xi2 upper-bound chain at sampled indices") {
    // exact xi2 <= the sieve combination psi(2j) + theta(2j/2) + theta(2j/3)
    //                                 - theta(j) - theta(j/2), classwise +-1
    for (unsigned long n0 : {5ul, 24ul}) {
        APCountTables tables(n0, 4000);
        for (unsigned j : {100u, 500u, 1500u}) {
            XiValue v = xi(j, n0, 128);
            Interval chain = Interval::exact(0L, 128);
            for (unsigned long l : {1ul, n0 - 1}) {
                chain += tables.psi(2 * j, l, 128) + tables.theta(j, l, 128) +
                         tables.theta(2 * j / 3, l, 128) - tables.theta(j, l, 128) -
                         tables.theta(j / 2, l, 128);
            }
            CHECK_FALSE(chain.certainly_lt(v.xi2));
        }
    }
}

TEST_CASE("case tables for index 24") {
    Case24Context ctx{mpq_class(3433, 10000), mpq_class(3433, 10000), 0, mpq_class(298, 1000)};
    Case24Tables t = case24_tables(ctx, 128, 2);
    CHECK(t.y0.certainly_le(mpq_class(721, 100)));
    CHECK(t.alpha_log_cap.certainly_lt(mpq_class(2378, 100)));
    std::set<unsigned> t1_expected = {1, 2, 3, 4, 5, 6, 12, 13, 14, 37, 38, 39, 40, 41};
    std::set<unsigned> t2_expected = {1, 2, 3, 4, 5, 12, 37, 38};
    CHECK(t.t1 == t1_expected);
    CHECK(t.t2 == t2_expected);
    CHECK(t.lam1[4].certainly_ge(mpq_class(2639, 1000)));
    CHECK(t.lam1[5].certainly_ge(mpq_class(3737, 1000)));
    CHECK(t.lam1[12].certainly_ge(mpq_class(3111, 1000)));
    // the epsilon maximum is attained near j = 37
    CHECK(t.eps1[37].certainly_gt(mpq_class(34, 100)));
    CHECK(t.eps1[37].certainly_le(mpq_class(3433, 10000)));
}

TEST_CASE("m8 ratio caps") {
    // the 0.46 cap is violated at exactly four of its claimed rows; the
    // stated special caps at 4, 5, 12 hold
    AuditReport rep = m8_ratio_audit(128);
    CHECK(rep.status == AuditStatus::fail);
    std::set<std::string> failing;
    for (const auto& row : rep.rows)
        if (row.status == AuditStatus::fail) failing.insert(row.claim + " " + row.inputs);
    std::set<std::string> expected = {"catalan-cap-0.46 j=37", "catalan-cap-0.46 j=39",
                                      "catalan-cap-0.46 j=40", "binomial-cap-0.46 j=12"};
    CHECK(failing == expected);
    // the j = 4 ratio is log 7 / log 14
    XiValue v = xi(4, 8, 128);
    Interval ratio = v.xi1 / log_central(4, CentralKind::C, 128);
    CHECK(ratio.certainly_gt(mpq_class(73, 100)));
    CHECK(ratio.certainly_le(mpq_class(74, 100)));
}

TEST_CASE("full case-24 audit") {
    AuditReport rep = case24_audit(128, 2);
    // everything passes except the four known bad ratio-cap rows
    std::set<std::string> failing;
    for (const auto& row : rep.rows)
        if (row.status != AuditStatus::pass) failing.insert(row.claim + " " + row.inputs);
    std::set<std::string> expected = {
        "m8-ratios/catalan-cap-0.46 j=37", "m8-ratios/catalan-cap-0.46 j=39",
        "m8-ratios/catalan-cap-0.46 j=40", "m8-ratios/binomial-cap-0.46 j=12"};
    CHECK(failing == expected);
}

TEST_CASE("inequality margins at the boundary") {
    // even index boundary: all rows positive at n = 720
    AuditReport even = inequality_audit(IneqCase::even_720, 128);
    CHECK(even.status == AuditStatus::pass);
    // complex boundary n = 6500, both branches positive
    CHECK(inequality_audit(IneqCase::complex_small_alpha, 128).status == AuditStatus::pass);
    CHECK(inequality_audit(IneqCase::complex_large_alpha, 128).status == AuditStatus::pass);
    // the large-alpha margins are thin but decisively positive
    Interval m = inequality_margin(IneqCase::complex_large_alpha, 6500, 11, 0, 128);
    CHECK(m.certainly_positive());
    CHECK(m.certainly_lt(mpq_class(1, 100)));
}

TEST_CASE("real-case rows: the known good and the known bad") {
    AuditReport rep = inequality_audit(IneqCase::real_general, 128);
    size_t fails = 0;
    for (const auto& row : rep.rows) {
        if (row.status == AuditStatus::fail) {
            ++fails;
            // only the n0 = 9 and n0 = 11 rows fail to eliminate their case
            bool expected = row.inputs.find("n0=9 ") == 0 || row.inputs == "n0=9 n=9" ||
                            row.inputs == "n0=11 n=11";
            INFO(row.inputs);
            CHECK(expected);
        }
    }
    CHECK(fails == 2);
    // the display at n0 = 16 is positive
    CHECK(inequality_margin(IneqCase::real_general, 16, 16, 0, 128).certainly_positive());
    // n0 = 13 eliminates, n0 = 9 and 11 do not
    CHECK(inequality_margin(IneqCase::real_general, 13, 13, 0, 128).certainly_positive());
    CHECK(inequality_margin(IneqCase::real_general, 9, 9, 0, 128).certainly_negative());
    CHECK(inequality_margin(IneqCase::real_general, 11, 11, 0, 128).certainly_negative());
}

TEST_CASE("index coverage of the case rows") {
    // every even n > 720 is divisible by 32, 27, 25 or a prime above 5
    for (unsigned n = 722; n <= 100000; n += 2) {
        bool covered = n % 32 == 0 || n % 27 == 0 || n % 25 == 0;
        if (!covered) {
            unsigned m = n;
            for (unsigned p : {2u, 3u, 5u})
                while (m % p == 0) m /= p;
            covered = m > 1;
        }
        REQUIRE(covered);
    }
    // every odd n >= 6500 is divisible by 81, 25, 49 or a prime >= 11
    for (unsigned n = 6501; n <= 100001; n += 2) {
        bool covered = n % 81 == 0 || n % 25 == 0 || n % 49 == 0;
        if (!covered) {
            unsigned m = n;
            for (unsigned p : {3u, 5u, 7u})
                while (m % p == 0) m /= p;
            covered = m > 1;
        }
        REQUIRE(covered);
    }
}

TEST_CASE("delta1 bounds") {
    CHECK(delta1_audit(128).status == AuditStatus::pass);
}

TEST_CASE("xi caps for the V scan") {
    // the 0.52 cap fails for the residue pair {1, 7} at five indices; the
    // direct cube checks at those indices still close the case, and the
    // bracket constants hold
    AuditReport rep = v23_tables_audit(128, 2);
    CHECK(rep.status == AuditStatus::fail);
    size_t cap_fails = 0, cube_rows = 0;
    for (const auto& row : rep.rows) {
        if (row.claim == "xi-ratio-caps" && row.status == AuditStatus::fail) {
            ++cap_fails;
            CHECK(row.inputs.find("l0=7") != std::string::npos);
            CHECK(row.witness.find("22,25,33,34,35") != std::string::npos);
        }
        if (row.claim == "cube-check-at-violation") {
            ++cube_rows;
            CHECK(row.status == AuditStatus::pass);
        }
        if (row.claim.rfind("bracket", 0) == 0) CHECK(row.status == AuditStatus::pass);
    }
    CHECK(cap_fails == 1);
    CHECK(cube_rows == 5);
}

TEST_CASE("v-even composite audit") {
    AuditReport rep = inequality_audit(IneqCase::v_even, 128);
    CHECK(rep.status == AuditStatus::pass);
}
