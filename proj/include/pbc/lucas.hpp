#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pbc/interval.hpp"

namespace pbc {

enum class ParamClass { invalid, degenerate, real_roots, complex_roots };

// Total classification of an integer pair (r, s) as Lucas-sequence parameters.
ParamClass classify_params(const mpz_class& r, const mpz_class& s);

struct invalid_params : std::invalid_argument {
    explicit invalid_params(const std::string& what) : std::invalid_argument(what) {}
};

// Validated recurrence parameters.  The sign convention r > 0 is enforced by
// replacing (r, s) with (-r, s) when needed; `negated()` records that this
// happened so reports can flag it.
class LucasParams {
public:
    static LucasParams create(const mpz_class& r, const mpz_class& s);

    const mpz_class& r() const { return r_; }
    const mpz_class& s() const { return s_; }
    const mpz_class& discriminant() const { return disc_; }
    bool real() const { return disc_ > 0; }
    bool negated() const { return negated_; }

    bool operator==(const LucasParams& o) const { return r_ == o.r_ && s_ == o.s_; }

private:
    LucasParams(mpz_class r, mpz_class s, bool negated)
        : r_(std::move(r)), s_(std::move(s)), disc_(r_ * r_ + 4 * s_), negated_(negated) {}
    mpz_class r_, s_, disc_;
    bool negated_;
};

enum class TermKind { U, V };

struct SequenceTerm {
    unsigned n = 0;
    mpz_class value;
    TermKind kind = TermKind::U;
};

mpz_class u_term(const LucasParams& params, unsigned n);
mpz_class v_term(const LucasParams& params, unsigned n);
SequenceTerm term(const LucasParams& params, unsigned n, TermKind kind);

// Recurrence values for an arbitrary integer pair; used for the auxiliary
// sequences with parameters (V_k, (-1)^(k-1) s^k) that arise in the
// telescoping identities, which need not satisfy the r > 0 normalization.
mpz_class u_term_raw(const mpz_class& r, const mpz_class& s, unsigned n);
mpz_class v_term_raw(const mpz_class& r, const mpz_class& s, unsigned n);

struct PrimitiveDivisorReport {
    unsigned n = 0;
    std::vector<mpz_class> primitive_primes;
    bool has_primitive = false;
    bool complete = true;  // false when an unfactored cofactor blocks the screen
    std::optional<mpz_class> unfactored_cofactor;
};

// Primes p | U_n with p not dividing any earlier term nor the discriminant.
PrimitiveDivisorReport primitive_divisors(const LucasParams& params, unsigned n);

// Known parameter pairs (5 <= n <= 30, n != 6) whose U_n has no primitive
// divisor.
struct BhvRow {
    unsigned n;
    std::vector<std::pair<long, long>> pairs;
};
const std::vector<BhvRow>& bhv_exception_table();
std::vector<std::pair<long, long>> bhv_exceptions_for(unsigned n);
bool is_bhv_exception(unsigned n, const mpz_class& r, const mpz_class& s);

// Rigorous enclosure of log|alpha|; width <= 2^(-precision/2).
Interval alpha_log_interval(const LucasParams& params, mpfr_prec_t prec = 128);
// log|alpha - beta| = (1/2) log|disc|
Interval root_gap_log_interval(const LucasParams& params, mpfr_prec_t prec = 128);

}  // namespace pbc
