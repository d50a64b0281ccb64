#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbc/factor.hpp"

using namespace pbc;

TEST_CASE("primality at the edges") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(mpz_class("3215031751")));  // strong pseudoprime to 2,3,5,7
    CHECK(is_prime(mpz_class("2305843009213693951")));  // 2^61 - 1
    CHECK_FALSE(is_prime(mpz_class("2305843009213693953")));
    // 40-digit prime
    CHECK(is_prime(mpz_class("1000000000000000000000000000000000000003")));
    CHECK_FALSE(is_prime(mpz_class("1000000000000000000000000000000000000003") *
                         mpz_class("10000000000000000000000000000000193")));
}

TEST_CASE("factorization round trip") {
    mpz_class n = mpz_class("123456789123456789") * 1000003 * 1000003;
    FactoredInteger fi = factorize_or_throw(n);
    CHECK(fi.complete());
    CHECK(fi.value() == n);
    CHECK(fi.nu(1000003) >= 2);
    for (const auto& [p, e] : fi.factors) {
        CHECK(is_prime(p));
        CHECK(e >= 1);
    }
}

TEST_CASE("negative values carry their sign") {
    FactoredInteger fi = factorize_or_throw(mpz_class(-360));
    CHECK(fi.sign == -1);
    CHECK(fi.value() == -360);
    CHECK(fi.nu(2) == 3);
    CHECK(fi.nu(3) == 2);
    CHECK(fi.nu(5) == 1);
}

TEST_CASE("budget exhaustion reports an explicit cofactor") {
    // product of two 35-digit primes, far beyond a one-round rho budget
    mpz_class p("10000000000000000000000000000000193");
    mpz_class q("10000000000000100000000000000000017");
    FactorOptions tiny;
    tiny.rho_rounds = 1;
    tiny.rho_base_iters = 64;
    FactoredInteger fi = factorize(p * q, tiny);
    CHECK_FALSE(fi.complete());
    CHECK(*fi.unfactored_cofactor == p * q);
    CHECK_THROWS_AS(factorize_or_throw(p * q, tiny), factorization_error);
}

TEST_CASE("deterministic results") {
    mpz_class n = mpz_class("982451653") * mpz_class("899809363") * 7919;
    FactoredInteger a = factorize_or_throw(n);
    FactoredInteger b = factorize_or_throw(n);
    CHECK(a.factors == b.factors);
}

TEST_CASE("sieve and arithmetic helpers") {
    CHECK(small_primes().front() == 2);
    std::vector<uint64_t> ps = primes_up_to(30);
    CHECK(ps == std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(24) == 8);
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    CHECK(divisors_of(12) == std::vector<unsigned long>{1, 2, 3, 4, 6, 12});
}
