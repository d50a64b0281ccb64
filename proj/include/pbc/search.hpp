#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbc/central.hpp"
#include "pbc/lucas.hpp"
#include "pbc/report.hpp"

namespace pbc {

enum class SSign { positive, negative, both };

// Real-root parameter window: every emitted coprime nondegenerate pair has
// alpha in [c1, c2]; membership is decided exactly from the sign of the
// characteristic polynomial at the endpoints.
struct RSWindow {
    mpq_class c1, c2;
    SSign s_sign = SSign::both;
    std::vector<std::pair<mpz_class, mpz_class>> pairs;
};
RSWindow enumerate_rs(const mpq_class& c1, const mpq_class& c2, SSign s_sign);
// Same but with the window given on the log alpha scale (endpoints rational,
// membership decided by interval comparison).
std::vector<std::pair<mpz_class, mpz_class>> enumerate_rs_log_window(
    const std::optional<mpq_class>& log_alpha_min, const mpq_class& log_alpha_max, SSign s_sign,
    mpfr_prec_t prec = 128);

struct PBCPart {
    unsigned m = 0;
    CentralKind kind = CentralKind::C;
    bool operator<(const PBCPart& o) const {
        return m != o.m ? m < o.m : (kind == CentralKind::C && o.kind == CentralKind::B);
    }
    bool operator==(const PBCPart& o) const { return m == o.m && kind == o.kind; }
};

// Signed multiset of parts whose product is the target.
struct PBCFactorization {
    int sign = 1;
    std::vector<PBCPart> parts;  // sorted ascending
    mpz_class value() const;
    std::string str() const;
};

// Complete backtracking enumeration of representations of N as a signed
// product of central values with indices in [m_min, m_cap] (m_cap = 0 means
// unbounded).  The largest prime of the remaining target drives the branch.
std::vector<PBCFactorization> pbc_decompose(const mpz_class& N, unsigned m_min = 2,
                                            size_t max_solutions = 64, unsigned m_cap = 0);

struct ScanConstraints {
    std::optional<unsigned long> p_max;
    std::optional<mpz_class> required_divisor;
    bool require_primitive = false;
    unsigned m_min = 2;
};

struct ScanHit {
    mpz_class r, s;
    unsigned n = 0;
    mpz_class value;
    std::vector<PBCFactorization> reps;
};

std::vector<ScanHit> scan_u(const std::vector<std::pair<mpz_class, mpz_class>>& pairs, unsigned n,
                            const ScanConstraints& constraints, unsigned m_cap);
std::vector<ScanHit> scan_v(const std::vector<std::pair<mpz_class, mpz_class>>& pairs, unsigned n,
                            const ScanConstraints& constraints, unsigned m_cap);

struct V23Hit {
    long r = 0;
    int s = 0;
    unsigned n = 0;
    mpz_class value;
    std::string family;  // C_m, B_m, 2C_m or 2B_m
    unsigned m = 0;
};

// V_n membership in {C_m, B_m, 2C_m, 2B_m} for s = +-1, n in {2, 3, 6},
// r <= r_max, 2 <= m <= m_max; cross-checked against the cube-bracket
// shortcut for n = 3.
std::vector<V23Hit> v23_scan(unsigned r_max, unsigned m_max);

enum class PellForm { unit, quad };  // X^2 - dY^2 = +-1, W^2 - dZ^2 = +-4

struct PellSolution {
    unsigned long d = 0;
    unsigned n = 0;
    mpz_class x, y;
    PellForm form = PellForm::unit;
    int rhs_sign = 1;  // the solved equation has right side rhs_sign * (1 or 4)
    std::string family;
    unsigned m = 0;
};

// Fundamental solution of X^2 - dY^2 = +-1 by the continued fraction of
// sqrt(d); returns (X_1, Y_1, norm).
struct PellFundamental {
    mpz_class x, y;
    int norm = 1;
};
PellFundamental pell_fundamental(unsigned long d);
std::optional<PellFundamental> pell4_fundamental(unsigned long d);

std::vector<PellSolution> pell_scan(unsigned long d_max, unsigned n_max, unsigned m_max);

// Residue sweep behind the V_4 = 14 impossibility, plus nu_2(V_{4t}) <= 1 on
// a parameter grid.
AuditReport mod8_obstruction_check();

struct SearchWindow;      // plan.hpp
struct ExceptionalProbe;  // plan.hpp

// Enumerates the window's parameter pairs and scans the stated sequence term;
// pass iff the hit list matches the window's expectation.
AuditReport run_window_search(const SearchWindow& w, mpfr_prec_t prec = 128);

// V-term checks at the parameter pairs lacking a primitive divisor.
AuditReport v_exceptional_audit(const std::vector<ExceptionalProbe>& probes);

// Compares v23_scan output with the known complete row list.
AuditReport v23_audit(unsigned r_max, unsigned m_max);

// Pell coordinate membership: X hits only at the fundamental solution, the
// three known quad-form hits beyond it, and the pinned identities.
AuditReport pell_audit(unsigned long d_max, unsigned n_max, unsigned m_max);

}  // namespace pbc
