#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pbc {

struct factorization_error : std::runtime_error {
    explicit factorization_error(const std::string& what) : std::runtime_error(what) {}
};

// Arbitrary-precision integer with its prime factorization.  Map keys are
// certified prime; an unfactored composite remainder, when present, is carried
// explicitly so no caller can mistake a partial factorization for a full one.
struct FactoredInteger {
    int sign = 1;
    std::map<mpz_class, unsigned> factors;
    std::optional<mpz_class> unfactored_cofactor;

    bool complete() const { return !unfactored_cofactor.has_value(); }
    mpz_class value() const;
    unsigned nu(const mpz_class& p) const;
    mpz_class largest_prime() const;  // 1 if no prime factors; requires complete()
};

bool is_prime(const mpz_class& n);

struct FactorOptions {
    unsigned long trial_limit = 1000000;
    int rho_rounds = 48;  // deterministic polynomial schedule x^2 + c, c = 1, 2, ...
    unsigned long long rho_base_iters = 1ull << 15;
};

// Best-effort factorization; a surviving composite ends up in
// unfactored_cofactor.  factorize_or_throw refuses partial results.
FactoredInteger factorize(const mpz_class& n, const FactorOptions& opts = {});
FactoredInteger factorize_or_throw(const mpz_class& n, const FactorOptions& opts = {});

const mpz_class& cofactor_envelope();  // 10^40

const std::vector<uint32_t>& small_primes();         // primes below 1e6
std::vector<uint64_t> primes_up_to(uint64_t limit);  // segmented sieve

unsigned long euler_phi(unsigned long n);
int mobius(unsigned long n);
std::vector<unsigned long> divisors_of(unsigned long n);

}  // namespace pbc
