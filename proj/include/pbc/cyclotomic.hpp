#pragma once

#include <gmpxx.h>

#include <set>
#include <vector>

#include "pbc/factor.hpp"
#include "pbc/interval.hpp"
#include "pbc/lucas.hpp"
#include "pbc/report.hpp"

namespace pbc {

// Homogenized cyclotomic value Phi_ell(alpha, beta), computed through the
// exact Moebius product of U-values (the alpha - beta factors cancel).
mpz_class cyclotomic_value(const LucasParams& params, unsigned ell);
mpz_class cyclotomic_value_raw(const mpz_class& r, const mpz_class& s, unsigned ell);

// Full factorization of |U_n| (resp. |V_n|), assembled from the cyclotomic
// pieces U_n = prod_{d | n, d >= 2} Phi_d so each factoring job stays small.
FactoredInteger factor_u_term(const LucasParams& params, unsigned n);
FactoredInteger factor_v_term(const LucasParams& params, unsigned n);

// Product of p^{nu_p(U_n)} over the primitive primes of U_n.  For n > 4,
// n not in {6, 12}, asserts |Phi_n| / primitive_part in {1, 2, P(n)}.
mpz_class primitive_part(const LucasParams& params, unsigned n);

struct MLogSum {
    unsigned long n0 = 0;
    Interval value;
    std::vector<std::pair<mpz_class, unsigned>> contributing;
};

// Sum of nu_p log p over primes p = +-1 (mod n0) dividing x.
MLogSum m_log_sum(const FactoredInteger& x, unsigned long n0, mpfr_prec_t prec = 128);
// Same with an arbitrary residue set mod q.
MLogSum residue_log_sum(const FactoredInteger& x, unsigned long q, const std::set<unsigned long>& residues,
                        mpfr_prec_t prec = 128);

// Lower bounds for M_{n0}(U_n) and M_{n0}(V_n).  n0 is a prime power p^h > 4
// (or p^h p1^h1 for the U case), n0 not in {6, 12}, with n0 p^t | n.  The
// 1 - x^n correction terms are evaluated from exact sequence values as
// log|U_n| + log|alpha-beta| - n log|alpha|.
Interval m_lower_bound_u(const LucasParams& params, unsigned n, unsigned long n0, unsigned t,
                         mpfr_prec_t prec = 128);
Interval m_lower_bound_v(const LucasParams& params, unsigned n, unsigned long n0, unsigned t,
                         mpfr_prec_t prec = 128);

// Exact-integer decision of m_log_sum >= m_lower_bound for the single-prime
// branches, where the log|alpha| terms cancel and the claim reduces to
// (class-prime part) * |U_red| * p^{t+1} >= |U_n| (same with V).  Returns
// nullopt for the two-prime branch.
std::optional<bool> m_bound_holds_exact(const LucasParams& params, unsigned n, unsigned long n0,
                                        unsigned t, TermKind kind, const FactoredInteger& term_factors);

// Valid (n0, t) choices for an index n: n0 = p^h (or p^h p1^h1 when two_primes)
// with n0 > 4, n0 not in {6, 12}, n0 p^t | n, and p odd when odd_only.
struct LemmaChoice {
    unsigned long n0 = 0;
    unsigned long p = 0;
    unsigned t = 0;
};
std::vector<LemmaChoice> lemma_choices(unsigned n, bool two_primes, bool odd_only);

// Exact integer telescoping identities behind the lower bounds, verified on a
// parameter/index grid.
AuditReport telescoping_audit(unsigned n_max_single, unsigned n_max_double);
// m_log_sum(U_n, n0) >= m_lower_bound_u (and the V analogue) on the grid.
AuditReport lemma_bound_soundness_audit(unsigned n_max, mpfr_prec_t prec = 128);

}  // namespace pbc
