#include "pbc/central.hpp"

#include <deque>
#include <map>
#include <mutex>

namespace pbc {

namespace {

std::mutex g_central_mutex;
std::deque<CentralPair> g_central;  // deque keeps references stable

void ensure_central(unsigned m) {
    if (g_central.empty()) g_central.push_back(CentralPair{0, 1, 1});
    while (g_central.size() <= m) {
        const CentralPair& last = g_central.back();
        unsigned k = last.m;
        CentralPair next;
        next.m = k + 1;
        next.B = last.B * (4 * mpz_class(k) + 2) / (k + 1);
        next.C = next.B / (k + 2);
        g_central.push_back(std::move(next));
    }
}

}  // namespace

const CentralPair& central_numbers(unsigned m) {
    std::lock_guard<std::mutex> lock(g_central_mutex);
    ensure_central(m);
    return g_central[m];
}

const mpz_class& central_value(unsigned m, CentralKind kind) {
    const CentralPair& p = central_numbers(m);
    return kind == CentralKind::B ? p.B : p.C;
}

unsigned nu_p_central(unsigned long p, unsigned m, CentralKind kind) {
    if (p < 2 || m == 0) return 0;
    unsigned long nu = 0;
    for (unsigned long long pe = p; pe <= 2ull * m; pe *= p) {
        nu += (2ull * m) / pe - 2 * (m / pe);
        if (pe > (2ull * m) / p) break;  // avoid overflow of pe *= p
    }
    if (kind == CentralKind::C) {
        unsigned long mm = m + 1;
        while (mm % p == 0) {
            --nu;
            mm /= p;
        }
    }
    return static_cast<unsigned>(nu);
}

Interval log_central(unsigned m, CentralKind kind, mpfr_prec_t prec) {
    struct Key {
        unsigned m;
        int kind;
        long prec;
        bool operator<(const Key& o) const {
            if (m != o.m) return m < o.m;
            if (kind != o.kind) return kind < o.kind;
            return prec < o.prec;
        }
    };
    static std::mutex mu;
    static std::map<Key, Interval> cache;
    Key key{m, kind == CentralKind::B ? 1 : 0, prec};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Interval v = Interval::log_of(central_value(m, kind), prec);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, v).first->second;
}

StirlingBounds stirling_log_interval(unsigned m, mpfr_prec_t prec) {
    if (m < 1) throw std::domain_error("stirling_log_interval: m >= 1 required");
    StirlingBounds out;
    out.m = m;
    Interval log2 = Interval::log_of(mpz_class(2), prec);
    Interval log_m1 = Interval::log_of(mpz_class(m + 1), prec);
    Interval log_sqrt_pim =
        (Interval::pi_const(prec) * Interval::exact(mpz_class(m), prec)).log().mul(mpq_class(1, 2));
    Interval common = log2 + log_m1 + log_sqrt_pim;
    out.sigma = common + Interval::exact(mpq_class(1, 6 * mpz_class(m)), prec) -
                Interval::exact(mpq_class(1, 24 * mpz_class(m) + 1), prec);
    out.tau = common + Interval::exact(mpq_class(2, 12 * mpz_class(m) + 1), prec) -
              Interval::exact(mpq_class(1, 24 * mpz_class(m)), prec);
    Interval mlog4 = Interval::log_of(mpz_class(4), prec) * Interval::exact(mpz_class(m), prec);
    out.lo = mlog4 - out.sigma;
    out.hi = mlog4 - out.tau;
    return out;
}

AuditReport growth_monotonicity_check(unsigned m_lo, unsigned m_hi) {
    AuditReport rep;
    rep.name = "central-growth";
    if (m_lo < 7 || m_lo >= m_hi) {
        rep.add(AuditRow{"precondition", "m_lo=" + std::to_string(m_lo) + " m_hi=" + std::to_string(m_hi),
                         "", "", "requires 7 <= m_lo < m_hi", AuditStatus::fail});
        return rep;
    }
    // log(C_m/2)/m < log(C_{m+1}/2)/(m+1)  <=>  2 C_{m+1}^m > C_m^{m+1}
    for (unsigned m = m_lo; m < m_hi; ++m) {
        mpz_class lhs, rhs;
        mpz_pow_ui(lhs.get_mpz_t(), central_value(m + 1, CentralKind::C).get_mpz_t(), m);
        lhs *= 2;
        mpz_pow_ui(rhs.get_mpz_t(), central_value(m, CentralKind::C).get_mpz_t(), m + 1);
        if (lhs <= rhs) {
            rep.add(AuditRow{"ratio-increase", "m=" + std::to_string(m), "", "",
                             "2 C_{m+1}^m <= C_m^{m+1} at m=" + std::to_string(m), AuditStatus::fail});
            return rep;
        }
    }
    rep.note("ratio-increase", "m in [" + std::to_string(m_lo) + ", " + std::to_string(m_hi) + ")",
             "exact comparisons");
    return rep;
}

AuditReport weighted_log_bound_check(unsigned m, unsigned M, mpfr_prec_t prec) {
    AuditReport rep;
    rep.name = "central-weighted-log";
    if (m < 7 || m > M) {
        rep.add(AuditRow{"precondition", "m=" + std::to_string(m) + " M=" + std::to_string(M), "", "",
                         "requires 7 <= m <= M", AuditStatus::fail});
        return rep;
    }
    try {
        bool ok = decide_predicate(
            [&](mpfr_prec_t p) -> std::optional<bool> {
                Interval log_cm2 = log_central(m, CentralKind::C, p) - Interval::log_of(mpz_class(2), p);
                Interval log_cM2 = log_central(M, CentralKind::C, p) - Interval::log_of(mpz_class(2), p);
                mpz_class two_m(2 * mpz_class(m)), two_M(2 * mpz_class(M));
                Interval lhs = (Interval::exact(mpz_class(m), p) * Interval::log_of(two_m, p) / log_cm2) *
                               (log_cM2 / Interval::exact(mpz_class(M), p));
                Interval rhs = Interval::log_of(two_M, p).mul(mpq_class(10001, 10000));
                if (lhs.certainly_le(rhs)) return true;
                if (rhs.certainly_lt(lhs)) return false;
                return std::nullopt;
            },
            "weighted log bound", prec);
        rep.check(ok, "weighted-log-le", "m=" + std::to_string(m) + " M=" + std::to_string(M));
    } catch (const indecisive_comparison& e) {
        rep.add(AuditRow{"weighted-log-le", "m=" + std::to_string(m) + " M=" + std::to_string(M), "", "",
                         e.what(), AuditStatus::undecided});
    }
    return rep;
}

}  // namespace pbc
