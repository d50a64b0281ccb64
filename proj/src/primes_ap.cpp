#include "pbc/primes_ap.hpp"

#include <algorithm>
#include <numeric>

#include "pbc/factor.hpp"
#include "pbc/parallel.hpp"

namespace pbc {

APCountTables::APCountTables(unsigned long q, uint64_t limit) : q_(q), limit_(limit) {
    if (q < 1 || limit < q) throw std::domain_error("APCountTables: need q >= 1 and limit >= q");
    by_class_.resize(q);
    all_ = primes_up_to(limit);
    for (uint64_t p : all_) by_class_[p % q].push_back(p);
}

uint64_t APCountTables::pi(uint64_t y, unsigned long l) const {
    const auto& v = by_class_[l % q_];
    return std::upper_bound(v.begin(), v.end(), y) - v.begin();
}

uint64_t APCountTables::pi_all(uint64_t y) const {
    return std::upper_bound(all_.begin(), all_.end(), y) - all_.begin();
}

uint64_t APCountTables::count_between(uint64_t lo, uint64_t hi, unsigned long l) const {
    const auto& v = by_class_[l % q_];
    auto a = std::upper_bound(v.begin(), v.end(), lo);
    auto b = std::upper_bound(v.begin(), v.end(), hi);
    return b - a;
}

const std::vector<uint64_t>& APCountTables::class_primes(unsigned long l) const {
    return by_class_[l % q_];
}

Interval APCountTables::theta(uint64_t y, unsigned long l, mpfr_prec_t prec) const {
    Interval sum = Interval::exact(0L, prec);
    for (uint64_t p : by_class_[l % q_]) {
        if (p > y) break;
        sum += Interval::log_of(mpz_class(static_cast<unsigned long>(p)), prec);
    }
    return sum;
}

Interval APCountTables::psi(uint64_t y, unsigned long l, mpfr_prec_t prec) const {
    Interval sum = Interval::exact(0L, prec);
    for (uint64_t p : by_class_[l % q_]) {
        if (p > y) break;
        long mult = 1;
        for (uint64_t pe = p; pe <= y / p; pe *= p) ++mult;
        sum += Interval::log_of(mpz_class(static_cast<unsigned long>(p)), prec) * Interval::exact(mult, prec);
    }
    return sum;
}

mpz_class least_prime_pm1(unsigned long n) {
    if (n < 3) throw std::domain_error("least_prime_pm1: n >= 3 required");
    const unsigned long bound = 1000000000ul;
    for (unsigned long k = 1;; ++k) {
        unsigned long lo = k * n - 1, hi = k * n + 1;
        if (lo > bound) throw std::runtime_error("least_prime_pm1: search bound exceeded");
        if (is_prime(mpz_class(lo))) return mpz_class(lo);
        if (is_prime(mpz_class(hi))) return mpz_class(hi);
    }
}

AuditReport ap_gap_check(unsigned long q, const std::set<unsigned long>& residues, uint64_t y_lo,
                         uint64_t y_hi, unsigned workers) {
    AuditReport rep;
    rep.name = "ap-gap";
    std::string inputs = "q=" + std::to_string(q) + " y in [" + std::to_string(y_lo) + ", " +
                         std::to_string(y_hi) + "]";
    if (y_lo < 1 || y_lo > y_hi) {
        rep.add(AuditRow{"precondition", inputs, "", "", "requires 1 <= y_lo <= y_hi", AuditStatus::fail});
        return rep;
    }
    APCountTables tables(q, 2 * y_hi + 2);
    std::vector<uint8_t> ok = parallel_map<uint8_t>(y_hi - y_lo + 1, workers, [&](size_t i) -> uint8_t {
        uint64_t y = y_lo + i;
        uint64_t total = 0;
        for (unsigned long r : residues) total += tables.count_between(y + 1, 2 * y, r);
        return total > 0 ? 1 : 0;
    });
    for (size_t i = 0; i < ok.size(); ++i) {
        if (!ok[i]) {
            rep.add(AuditRow{"gap-exists", inputs, "", "",
                             "no admissible prime in (y+1, 2y] at y=" + std::to_string(y_lo + i),
                             AuditStatus::fail});
            return rep;
        }
    }
    rep.note("gap-exists", inputs, std::to_string(y_hi - y_lo + 1) + " values checked");
    return rep;
}

AuditReport bt_audit(unsigned long q, unsigned long l, const std::vector<uint64_t>& ys, mpfr_prec_t prec) {
    AuditReport rep;
    rep.name = "brun-titchmarsh-sanity";
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), mpz_class(q).get_mpz_t(), l);
    if (g != 1) {
        rep.add(AuditRow{"precondition", "q=" + std::to_string(q) + " l=" + std::to_string(l), "", "",
                         "gcd(l, q) != 1", AuditStatus::fail});
        return rep;
    }
    uint64_t y_max = 0;
    for (uint64_t y : ys) y_max = std::max(y_max, y);
    APCountTables tables(q, 2 * y_max + 2);
    unsigned long phi = euler_phi(q);
    for (uint64_t y : ys) {
        std::string inputs = "q=" + std::to_string(q) + " l=" + std::to_string(l) + " y=" + std::to_string(y);
        if (y <= q) {
            rep.add(AuditRow{"precondition", inputs, "", "", "requires y > q", AuditStatus::fail});
            continue;
        }
        mpq_class ratio(y, q);
        ratio.canonicalize();
        Interval rhs = Interval::exact(mpz_class(2 * mpz_class(static_cast<unsigned long>(y))), prec) /
                       (Interval::exact(mpz_class(phi), prec) * Interval::log_of(ratio, prec));
        Interval margin1 = rhs - Interval::exact(mpz_class(tables.pi(y, l)), prec);
        rep.check_margin(margin1, "pi-upper", inputs,
                         "pi=" + std::to_string(tables.pi(y, l)));
        uint64_t window = tables.pi(2 * y, l) - tables.pi(y, l);
        Interval margin2 = rhs - Interval::exact(mpz_class(window), prec);
        rep.check_margin(margin2, "pi-window-upper", inputs, "count=" + std::to_string(window));
    }
    if (rep.status == AuditStatus::pass)
        rep.note("scope", "q=" + std::to_string(q), "pointwise sanity check, not a proof");
    return rep;
}

EpsEntry eps_table(unsigned long q) {
    switch (q) {
        case 5: return {mpq_class(807, 1000), mpq_class(1413, 1000)};
        case 7: return {mpq_class(78, 100), mpq_class(1106, 1000)};
        case 8: return {mpq_class(927, 1000), mpq_class(3, 2)};
        case 9: return {mpq_class(789, 1000), mpq_class(111, 100)};
        case 12: return {mpq_class(863, 1000), mpq_class(3, 2)};
        case 16: return {mpq_class(774, 1000), mpq_class(103, 100)};
        case 24: return {mpq_class(745, 1000), mpq_class(3, 2)};
        default:
            if (q >= 11 && q <= 23 && mobius(q) == -1 && is_prime(mpz_class(q)))
                return {mpq_class(912, 1000), mpq_class(11, 10)};
            throw std::domain_error("eps_table: unsupported modulus " + std::to_string(q));
    }
}

AuditReport rr_audit(unsigned long q, unsigned long l0, const std::vector<uint64_t>& ys, mpfr_prec_t prec) {
    AuditReport rep;
    rep.name = "ap-count-estimates";
    EpsEntry eps = eps_table(q);
    if (l0 % q == 1 % q || std::gcd(l0 % q, q) != 1) {
        rep.add(AuditRow{"precondition", "q=" + std::to_string(q) + " l0=" + std::to_string(l0), "", "",
                         "l0 must be coprime to q and != 1 mod q", AuditStatus::fail});
        return rep;
    }
    uint64_t y_max = 0;
    for (uint64_t y : ys) y_max = std::max(y_max, y);
    APCountTables tables(q, y_max + 1);
    unsigned long phi = euler_phi(q);
    for (uint64_t y : ys) {
        std::string inputs = "q=" + std::to_string(q) + " l0=" + std::to_string(l0) + " y=" + std::to_string(y);
        if (y < q) {
            rep.add(AuditRow{"precondition", inputs, "", "", "requires y >= q", AuditStatus::fail});
            continue;
        }
        Interval sqrt_y = Interval::exact(mpz_class(static_cast<unsigned long>(y)), prec).sqrt();
        Interval base = Interval::exact(mpq_class(2 * mpz_class(static_cast<unsigned long>(y)), phi), prec);
        Interval psi_sum = tables.psi(y, 1, prec) + tables.psi(y, l0, prec);
        Interval psi_bound =
            base * (Interval::exact(1L, prec) +
                    Interval::exact(mpq_class(eps.eps_psi * phi), prec) / sqrt_y);
        rep.check_margin(psi_bound - psi_sum, "psi-upper", inputs);
        Interval theta_sum = tables.theta(y, 1, prec) + tables.theta(y, l0, prec);
        Interval theta_bound =
            base * (Interval::exact(1L, prec) -
                    Interval::exact(mpq_class(eps.eps_theta * phi), prec) / sqrt_y);
        rep.check_margin(theta_sum - theta_bound, "theta-lower", inputs);
        if (q == 24) {
            Interval base5 = Interval::exact(mpq_class(mpz_class(static_cast<unsigned long>(y)), phi), prec);
            Interval lower = base5 * (Interval::exact(1L, prec) - Interval::exact(mpz_class(phi), prec) / sqrt_y);
            Interval upper = base5 * (Interval::exact(1L, prec) +
                                      Interval::exact(mpq_class(eps.eps_psi * phi), prec) / sqrt_y);
            Interval theta5 = tables.theta(y, 5, prec);
            Interval psi5 = tables.psi(y, 5, prec);
            rep.check_margin(theta5 - lower, "theta5-lower", inputs);
            // psi - theta is a sum of logs over proper prime powers, so the
            // inequality is structural; equality happens when none exist
            rep.check(!(psi5 - theta5).certainly_negative(), "theta-le-psi", inputs);
            rep.check_margin(upper - psi5, "psi5-upper", inputs);
        }
    }
    if (rep.status == AuditStatus::pass)
        rep.note("scope", "q=" + std::to_string(q), "pointwise sanity check, not a proof");
    return rep;
}

AuditReport combined_sum_audit(unsigned long q, unsigned long l0, const std::vector<uint64_t>& ys,
                               mpfr_prec_t prec) {
    AuditReport rep;
    rep.name = "combined-psi-theta";
    EpsEntry eps = eps_table(q);
    uint64_t y_max = 0;
    for (uint64_t y : ys) y_max = std::max(y_max, y);
    APCountTables tables(q, 2 * y_max + 2);
    unsigned long phi = euler_phi(q);
    for (uint64_t y : ys) {
        std::string inputs = "q=" + std::to_string(q) + " l0=" + std::to_string(l0) + " y=" + std::to_string(y);
        if (y < 1500) {
            rep.add(AuditRow{"precondition", inputs, "", "", "requires y >= 1500", AuditStatus::fail});
            continue;
        }
        Interval lhs = Interval::exact(0L, prec);
        for (unsigned long l : {1ul, l0}) {
            lhs += tables.psi(2 * y, l, prec) - tables.theta(y, l, prec) +
                   tables.theta((2 * y) / 3, l, prec) - tables.theta(y / 2, l, prec) +
                   tables.theta((2 * y) / 5, l, prec);
        }
        Interval sqrt_y = Interval::exact(mpz_class(static_cast<unsigned long>(y)), prec).sqrt();
        Interval sqrt2 = Interval::exact(2L, prec).sqrt();
        Interval sqrt3 = Interval::exact(3L, prec).sqrt();
        Interval sqrt5 = Interval::exact(5L, prec).sqrt();
        Interval one = Interval::exact(1L, prec);
        Interval brace = Interval::exact(mpq_class(47, 15), prec) +
                         (sqrt2.mul(mpq_class(2)) * Interval::exact(eps.eps_psi, prec) / sqrt_y) *
                             (one + one / sqrt3 + one / sqrt5) +
                         (Interval::exact(mpq_class(eps.eps_theta * 2), prec) / sqrt_y) * (one + one / sqrt2);
        Interval rhs = Interval::exact(mpq_class(mpz_class(static_cast<unsigned long>(y)), phi), prec) * brace;
        rep.check_margin(rhs - lhs, "combined-upper", inputs);
    }
    return rep;
}

}  // namespace pbc
