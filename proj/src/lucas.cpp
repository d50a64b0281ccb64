#include "pbc/lucas.hpp"

#include <cassert>

namespace pbc {

ParamClass classify_params(const mpz_class& r, const mpz_class& s) {
    if (s == 0) return ParamClass::invalid;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
    if (g != 1) return ParamClass::invalid;
    mpz_class disc = r * r + 4 * s;
    if (disc == 0) return ParamClass::invalid;
    // alpha/beta is a root of unity iff (alpha/beta) + (beta/alpha) =
    // (r^2 + 2s)/(-s) is an integer in {0, +-1, +-2}.
    mpz_class num = r * r + 2 * s;
    if (mpz_divisible_p(num.get_mpz_t(), s.get_mpz_t())) {
        mpz_class q = -num / s;
        if (q >= -2 && q <= 2) return ParamClass::degenerate;
    }
    return disc > 0 ? ParamClass::real_roots : ParamClass::complex_roots;
}

LucasParams LucasParams::create(const mpz_class& r, const mpz_class& s) {
    switch (classify_params(r, s)) {
        case ParamClass::invalid:
            throw invalid_params("invalid Lucas parameters (" + r.get_str() + ", " + s.get_str() + ")");
        case ParamClass::degenerate:
            throw invalid_params("degenerate Lucas parameters (" + r.get_str() + ", " + s.get_str() + ")");
        default:
            break;
    }
    if (r < 0) return LucasParams(-r, s, true);
    return LucasParams(r, s, false);
}

// (U_n, V_n) by binary doubling on the identities
//   U_2k = U_k V_k,  V_2k = V_k^2 - 2 (-s)^k,
//   U_{k+1} = (r U_k + V_k)/2,  V_{k+1} = (disc U_k + r V_k)/2.
static void uv_pair(const mpz_class& r, const mpz_class& s, unsigned n, mpz_class& U, mpz_class& V) {
    if (n == 0) {
        U = 0;
        V = 2;
        return;
    }
    mpz_class disc = r * r + 4 * s;
    mpz_class q0 = -s;  // (-s)^k alongside (U_k, V_k)
    U = 1;
    V = r;
    mpz_class Q = q0;
    int bits = 0;
    for (unsigned t = n; t > 1; t >>= 1) ++bits;
    for (int i = bits - 1; i >= 0; --i) {
        mpz_class U2 = U * V;
        mpz_class V2 = V * V - 2 * Q;
        Q = Q * Q;
        U = U2;
        V = V2;
        if ((n >> i) & 1u) {
            mpz_class Un = (r * U + V) / 2;
            mpz_class Vn = (disc * U + r * V) / 2;
            U = Un;
            V = Vn;
            Q *= q0;
        }
    }
}

static mpz_class term_impl(const mpz_class& r, const mpz_class& s, unsigned n, TermKind kind) {
    if (n <= 64) {
        mpz_class a = (kind == TermKind::U) ? 0 : 2;
        mpz_class b = (kind == TermKind::U) ? 1 : r;
        if (n == 0) return a;
        for (unsigned i = 1; i < n; ++i) {
            mpz_class c = r * b + s * a;
            a = b;
            b = c;
        }
        return b;
    }
    mpz_class U, V;
    uv_pair(r, s, n, U, V);
    return kind == TermKind::U ? U : V;
}

mpz_class u_term(const LucasParams& params, unsigned n) {
    return term_impl(params.r(), params.s(), n, TermKind::U);
}

mpz_class v_term(const LucasParams& params, unsigned n) {
    return term_impl(params.r(), params.s(), n, TermKind::V);
}

SequenceTerm term(const LucasParams& params, unsigned n, TermKind kind) {
    return SequenceTerm{n, term_impl(params.r(), params.s(), n, kind), kind};
}

mpz_class u_term_raw(const mpz_class& r, const mpz_class& s, unsigned n) {
    return term_impl(r, s, n, TermKind::U);
}

mpz_class v_term_raw(const mpz_class& r, const mpz_class& s, unsigned n) {
    return term_impl(r, s, n, TermKind::V);
}

const std::vector<BhvRow>& bhv_exception_table() {
    static const std::vector<BhvRow> table = {
        {5, {{1, 1}, {1, -2}, {1, -3}, {1, -4}, {2, -11}, {12, -55}, {12, -377}}},
        {7, {{1, -2}, {1, -5}}},
        {8, {{1, -2}, {2, -7}}},
        {10, {{2, -3}, {5, -7}, {5, -18}}},
        {12, {{1, 1}, {1, -2}, {1, -3}, {1, -4}, {1, -5}, {2, -15}}},
        {13, {{1, -2}}},
        {18, {{1, -2}}},
        {30, {{1, -2}}},
    };
    return table;
}

std::vector<std::pair<long, long>> bhv_exceptions_for(unsigned n) {
    for (const auto& row : bhv_exception_table())
        if (row.n == n) return row.pairs;
    return {};
}

bool is_bhv_exception(unsigned n, const mpz_class& r, const mpz_class& s) {
    for (const auto& [rr, ss] : bhv_exceptions_for(n))
        if (r == rr && s == ss) return true;
    return false;
}

Interval alpha_log_interval(const LucasParams& params, mpfr_prec_t prec) {
    if (params.real()) {
        // alpha = (r + sqrt(disc)) / 2
        Interval num = Interval::exact(params.r(), prec) + Interval::exact(params.discriminant(), prec).sqrt();
        return num.log() - Interval::log_of(mpz_class(2), prec);
    }
    // complex conjugate roots: |alpha|^2 = -s
    mpz_class abs_s = -params.s();
    return Interval::log_of(abs_s, prec).mul(mpq_class(1, 2));
}

Interval root_gap_log_interval(const LucasParams& params, mpfr_prec_t prec) {
    mpz_class d = params.discriminant();
    if (d < 0) d = -d;
    return Interval::log_of(d, prec).mul(mpq_class(1, 2));
}

}  // namespace pbc
