#pragma once

#include <gmpxx.h>

#include <set>
#include <vector>

#include "pbc/central.hpp"
#include "pbc/interval.hpp"
#include "pbc/report.hpp"

namespace pbc {

// 44.88 log^2 l + 211.08 log l + 249.08 (l > 1), as an interval.
Interval f_voutier(const Interval& ell);
Interval f_voutier(const mpq_class& ell, mpfr_prec_t prec = 128);

// delta0 table for the small moduli; throws on unsupported n0.
mpq_class delta0(unsigned long n0);
// g(n0) = delta0 / phi(n0) for tabled n0; 3.9/phi(n0) + 1.46 log(3 n0)/n0 for
// odd n0 >= 25.
Interval g_weight(unsigned long n0, mpfr_prec_t prec = 128);
mpq_class g_weight_exact(unsigned long n0);  // tabled n0 only

struct XiValue {
    unsigned j = 0;
    unsigned long n0 = 0;
    Interval xi1, xi2;  // valuation-weighted log sums over C_j resp. B_j
};
XiValue xi(unsigned j, unsigned long n0, mpfr_prec_t prec = 128);
// General residue-set variant over B_j (or C_j).
Interval xi_residues(unsigned j, unsigned long q, const std::set<unsigned long>& residues,
                     CentralKind kind, mpfr_prec_t prec = 128);

// xi1(j) phi(n0) <= delta0 log C_j and xi2(j) phi(n0) <= delta0 log B_j for
// 2 <= j <= j_max.
AuditReport delta0_audit(unsigned long n0, unsigned j_max = 1500, mpfr_prec_t prec = 128,
                         unsigned workers = 1);

// delta1 = 47/15 + 2 sqrt2 eps_psi (1 + 1/sqrt3 + 1/sqrt5)/sqrt(1500)
//        + 2 eps_theta (1 + 1/sqrt2)/sqrt(1500), with delta1/1.37 <= delta0.
AuditReport delta1_audit(mpfr_prec_t prec = 128);

struct Case24Context {
    mpq_class eps0;
    mpq_class g;
    mpq_class lambda;
    mpq_class x0;
};

struct Case24Tables {
    std::vector<Interval> eps1, eps2;  // index j, 1 <= j < 420
    mpq_class eps0;
    std::vector<Interval> lam1, lam2;
    std::set<unsigned> t1, t2;
    mpq_class g, lambda, x0;
    Interval y0;
    Interval alpha_log_cap;  // y0 g / (8 - 23 g)
};

Case24Tables case24_tables(const Case24Context& ctx, mpfr_prec_t prec = 128, unsigned workers = 1);

// Full index-24 table/chain audit (epsilon caps, T sets, lambda floors, y0,
// alpha cap, the 5.8136 display, and the closing chain).
AuditReport case24_audit(mpfr_prec_t prec = 128, unsigned workers = 1);

// M_8 ratio caps used in the closing argument of the index-24 case.
AuditReport m8_ratio_audit(mpfr_prec_t prec = 128);

enum class IneqCase {
    even_720,
    complex_small_alpha,
    complex_large_alpha,
    real_general,
    case24_main,
    v_even,
    v_complex_small,
    v_complex_large,
    v_real,
};

// Signed margin of the displayed right side for one (n0, t) choice at index n;
// positive reproduces the contradiction the case analysis claims.
Interval inequality_margin(IneqCase c, unsigned n, unsigned long n0, unsigned t,
                           mpfr_prec_t prec = 128);

// All (n0, t) rows of a case at its boundary index, plus a confirmation grid
// at sampled larger n.
AuditReport inequality_audit(IneqCase c, mpfr_prec_t prec = 128);

// xi(m)/log C_m caps used by the V_{2,3} family scan (residues {1, l0} mod 12).
AuditReport v23_tables_audit(mpfr_prec_t prec = 128, unsigned workers = 1);

// (n0, t) rows of the even / complex case displays; exposed for the coverage
// property tests.
const std::vector<std::pair<unsigned long, unsigned>>& even_case_rows();
const std::vector<std::pair<unsigned long, unsigned>>& complex_case_rows();

}  // namespace pbc
