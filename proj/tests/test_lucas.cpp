#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pbc/cyclotomic.hpp"
#include "pbc/lucas.hpp"

using namespace pbc;

TEST_CASE("parameter classification") {
    CHECK(classify_params(1, 1) == ParamClass::real_roots);
    CHECK(classify_params(1, -1) == ParamClass::degenerate);
    CHECK(classify_params(2, -1) == ParamClass::invalid);  // discriminant zero
    CHECK(classify_params(2, 4) == ParamClass::invalid);   // gcd
    CHECK(classify_params(3, 0) == ParamClass::invalid);   // s = 0
    CHECK(classify_params(1, -3) == ParamClass::complex_roots);
    CHECK(classify_params(0, 1) == ParamClass::degenerate);
    CHECK(classify_params(-1, 1) == ParamClass::real_roots);
    // exhaustive ratio test over a small box: degenerate iff the trace ratio
    // (r^2+2s)/(-s) is an integer in [-2, 2]
    for (long r = -10; r <= 10; ++r) {
        for (long s = -10; s <= 10; ++s) {
            if (s == 0) continue;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), mpz_class(r).get_mpz_t(), mpz_class(s).get_mpz_t());
            if (g != 1 || r * r + 4 * s == 0) continue;
            bool degenerate = classify_params(r, s) == ParamClass::degenerate;
            bool expected = false;
            long num = r * r + 2 * s;
            if (num % s == 0) {
                long q = -(num / s);
                expected = (q >= -2 && q <= 2);
            }
            CHECK(degenerate == expected);
        }
    }
}

TEST_CASE("normalization flips the sign of r") {
    LucasParams p = LucasParams::create(-3, 5);
    CHECK(p.r() == 3);
    CHECK(p.s() == 5);
    CHECK(p.negated());
    CHECK_FALSE(LucasParams::create(3, 5).negated());
    CHECK_THROWS_AS(LucasParams::create(1, -1), invalid_params);
    CHECK_THROWS_AS(LucasParams::create(2, -1), invalid_params);
}

TEST_CASE("term values") {
    LucasParams fib = LucasParams::create(1, 1);
    CHECK(u_term(fib, 0) == 0);
    CHECK(u_term(fib, 1) == 1);
    CHECK(u_term(fib, 5) == 5);
    CHECK(u_term(fib, 12) == 144);
    CHECK(v_term(fib, 0) == 2);
    CHECK(v_term(fib, 1) == 1);
    LucasParams pell = LucasParams::create(2, 1);
    CHECK(u_term(pell, 3) == 5);
    CHECK(v_term(pell, 3) == 14);
    CHECK(v_term(LucasParams::create(5, 1), 3) == 140);
}

TEST_CASE("doubling path matches plain recurrence") {
    for (auto [r, s] : {std::pair<long, long>{1, 1}, {2, 1}, {3, -2}, {1, -5}, {7, 4}}) {
        LucasParams params = LucasParams::create(r, s);
        mpz_class a = 0, b = 1, va = 2, vb = r;
        for (unsigned n = 1; n <= 200; ++n) {
            if (n > 1) {
                mpz_class c = params.r() * b + params.s() * a;
                a = b;
                b = c;
                mpz_class vc = params.r() * vb + params.s() * va;
                va = vb;
                vb = vc;
            }
            if (n >= 60 && n <= 70) {
                CHECK(u_term(params, n) == b);
                CHECK(v_term(params, n) == vb);
            }
            if (n == 200) {
                CHECK(u_term(params, n) == b);
                CHECK(v_term(params, n) == vb);
            }
        }
    }
}

TEST_CASE("sequence identities on random parameters") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> rd(1, 40), sd(-40, 40), nd(2, 150);
    int tried = 0;
    while (tried < 1000) {
        long r = rd(rng), s = sd(rng);
        if (classify_params(r, s) != ParamClass::real_roots &&
            classify_params(r, s) != ParamClass::complex_roots)
            continue;
        ++tried;
        LucasParams params = LucasParams::create(r, s);
        unsigned n = static_cast<unsigned>(nd(rng));
        mpz_class un = u_term(params, n), un1 = u_term(params, n - 1), un2 = u_term(params, n - 2);
        CHECK(un == params.r() * un1 + params.s() * un2);
        mpz_class vn = v_term(params, n), vn1 = v_term(params, n - 1), vn2 = v_term(params, n - 2);
        CHECK(vn == params.r() * vn1 + params.s() * vn2);
        // U_2n = U_n V_n
        CHECK(u_term(params, 2 * n) == un * vn);
        // V_n^2 - disc U_n^2 = 4 (-s)^n
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), mpz_class(-params.s()).get_mpz_t(), n);
        CHECK(vn * vn - params.discriminant() * un * un == 4 * q);
        // gcd(V_n, s) = 1
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), vn.get_mpz_t(), params.s().get_mpz_t());
        CHECK(g == 1);
    }
}

TEST_CASE("V_{4t} doubling identity") {
    for (auto [r, s] : {std::pair<long, long>{1, 1}, {2, 1}, {3, -1}, {1, -3}}) {
        LucasParams params = LucasParams::create(r, s);
        for (unsigned t = 1; t <= 25; ++t) {
            mpz_class v2t = v_term(params, 2 * t);
            mpz_class q;
            mpz_pow_ui(q.get_mpz_t(), mpz_class(-params.s()).get_mpz_t(), 2 * t);
            CHECK(v_term(params, 4 * t) == v2t * v2t - 2 * q);
        }
    }
}

TEST_CASE("positivity for real parameters") {
    for (auto [r, s] : {std::pair<long, long>{1, 1}, {2, 1}, {5, -3}, {9, -20}}) {
        LucasParams params = LucasParams::create(r, s);
        REQUIRE(params.real());
        for (unsigned n = 1; n <= 200; ++n) {
            CHECK(u_term(params, n) > 0);
            CHECK(v_term(params, n) > 0);
        }
    }
}

TEST_CASE("primitive divisor reports") {
    LucasParams fib = LucasParams::create(1, 1);
    PrimitiveDivisorReport r12 = primitive_divisors(fib, 12);
    CHECK(r12.complete);
    CHECK_FALSE(r12.has_primitive);
    // F_5 = 5 divides the discriminant, so it is not primitive
    PrimitiveDivisorReport r5 = primitive_divisors(fib, 5);
    CHECK_FALSE(r5.has_primitive);
    PrimitiveDivisorReport r7 = primitive_divisors(fib, 7);
    REQUIRE(r7.has_primitive);
    REQUIRE(r7.primitive_primes.size() == 1);
    CHECK(r7.primitive_primes[0] == 13);
    // primitive primes are +-1 mod n beyond n = 2
    for (auto [r, s] : {std::pair<long, long>{1, 1}, {2, 1}, {3, -1}, {1, 2}}) {
        LucasParams params = LucasParams::create(r, s);
        for (unsigned n = 3; n <= 40; ++n) {
            for (const mpz_class& p : primitive_divisors(params, n).primitive_primes) {
                unsigned long rem = mpz_fdiv_ui(p.get_mpz_t(), n);
                CHECK((rem == 1 || rem == n - 1));
            }
        }
    }
}

TEST_CASE("exception table rows") {
    CHECK(bhv_exceptions_for(7) == std::vector<std::pair<long, long>>{{1, -2}, {1, -5}});
    CHECK(bhv_exceptions_for(6).empty());
    CHECK(bhv_exceptions_for(13) == std::vector<std::pair<long, long>>{{1, -2}});
    CHECK(is_bhv_exception(5, 12, -377));
    CHECK_FALSE(is_bhv_exception(5, 12, -378));
    size_t total = 0;
    for (const auto& row : bhv_exception_table()) total += row.pairs.size();
    CHECK(total == 23);
}

TEST_CASE("log alpha enclosures") {
    Interval golden = alpha_log_interval(LucasParams::create(1, 1), 128);
    CHECK(golden.certainly_gt(mpq_class(4812, 10000)));
    CHECK(golden.certainly_lt(mpq_class(4813, 10000)));
    CHECK(golden.width() <= std::ldexp(1.0, -64));
    Interval l = alpha_log_interval(LucasParams::create(4, -1), 128);
    // log(2 + sqrt 3) = 1.3169...
    CHECK(l.certainly_gt(mpq_class(13169, 10000)));
    CHECK(l.certainly_lt(mpq_class(13170, 10000)));
    Interval c = alpha_log_interval(LucasParams::create(1, -3), 128);
    // half of log 3
    Interval half_log3 = Interval::log_of(mpz_class(3), 128).mul(mpq_class(1, 2));
    CHECK(c.cmp(half_log3) == 0);
    CHECK((c - half_log3).contains_zero());
}
