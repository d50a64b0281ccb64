#pragma once

#include <gmpxx.h>

#include "pbc/interval.hpp"
#include "pbc/report.hpp"

namespace pbc {

enum class CentralKind { C, B };

struct CentralPair {
    unsigned m = 0;
    mpz_class B;  // binom(2m, m)
    mpz_class C;  // B / (m + 1)
};

// Cached table of central pairs, grown on demand via the ratio recurrence
// B_{m+1} = B_m (4m+2)/(m+1).  References stay valid as the table grows.
const CentralPair& central_numbers(unsigned m);
const mpz_class& central_value(unsigned m, CentralKind kind);

// Legendre-sum valuations: nu_p(B_m) = sum (floor(2m/p^l) - 2 floor(m/p^l));
// nu_p(C_m) = nu_p(B_m) - nu_p(m+1).
unsigned nu_p_central(unsigned long p, unsigned m, CentralKind kind);

// Cached interval logs of C_m and B_m (per precision).
Interval log_central(unsigned m, CentralKind kind, mpfr_prec_t prec = 128);

struct StirlingBounds {
    unsigned m = 0;
    Interval sigma, tau;  // m log4 - sigma < log(C_m/2) < m log4 - tau
    Interval lo, hi;
};
StirlingBounds stirling_log_interval(unsigned m, mpfr_prec_t prec = 128);

// Exact big-integer verification that log(C_m/2)/m increases on [m_lo, m_hi].
AuditReport growth_monotonicity_check(unsigned m_lo, unsigned m_hi);

// (m log 2m / log(C_m/2)) * (log(C_M/2)/M) <= 1.0001 log 2M for 7 <= m <= M.
AuditReport weighted_log_bound_check(unsigned m, unsigned M, mpfr_prec_t prec = 128);

}  // namespace pbc
