#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <vector>

#include "pbc/interval.hpp"
#include "pbc/report.hpp"

namespace pbc {

// Sieve-backed counting functions for primes in arithmetic progressions.
// Convention matching the audited statements: theta(y; q, l) sums log p over
// primes p <= y with p = l (mod q); psi(y; q, l) additionally weights p by the
// number of powers p^t <= y.
class APCountTables {
public:
    APCountTables(unsigned long q, uint64_t limit);

    unsigned long q() const { return q_; }
    uint64_t limit() const { return limit_; }

    uint64_t pi(uint64_t y, unsigned long l) const;
    uint64_t pi_all(uint64_t y) const;  // classless pi(y)
    // number of primes p = l (mod q) with lo < p <= hi
    uint64_t count_between(uint64_t lo, uint64_t hi, unsigned long l) const;
    Interval theta(uint64_t y, unsigned long l, mpfr_prec_t prec = 128) const;
    Interval psi(uint64_t y, unsigned long l, mpfr_prec_t prec = 128) const;
    const std::vector<uint64_t>& class_primes(unsigned long l) const;

private:
    unsigned long q_;
    uint64_t limit_;
    std::vector<std::vector<uint64_t>> by_class_;
    std::vector<uint64_t> all_;
};

// Least prime congruent to +-1 mod n (search bound 1e9).
mpz_class least_prime_pm1(unsigned long n);

// For every y in [y_lo, y_hi]: a prime p = r (mod q), r in residues, with
// y + 1 < p <= 2y.
AuditReport ap_gap_check(unsigned long q, const std::set<unsigned long>& residues, uint64_t y_lo,
                         uint64_t y_hi, unsigned workers = 1);

// Pointwise Brun-Titchmarsh sanity audit: pi(y; q, l) and pi(2y) - pi(y)
// against 2y / (phi(q) log(y/q)).
AuditReport bt_audit(unsigned long q, unsigned long l, const std::vector<uint64_t>& ys,
                     mpfr_prec_t prec = 128);

struct EpsEntry {
    mpq_class eps_psi;
    mpq_class eps_theta;
};
EpsEntry eps_table(unsigned long q);  // throws on unsupported modulus

// Pointwise sanity audit of the tabulated psi upper / theta lower estimates,
// plus the special q = 24, l = 5 bounds.
AuditReport rr_audit(unsigned long q, unsigned long l0, const std::vector<uint64_t>& ys,
                     mpfr_prec_t prec = 128);

// Pointwise audit of the combined psi/theta upper estimate used to bound
// valuation sums for large indices (y >= 1500).
AuditReport combined_sum_audit(unsigned long q, unsigned long l0, const std::vector<uint64_t>& ys,
                               mpfr_prec_t prec = 128);

}  // namespace pbc
