#include "pbc/factor.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>

namespace pbc {

mpz_class FactoredInteger::value() const {
    mpz_class v = sign;
    for (const auto& [p, e] : factors) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    if (unfactored_cofactor) v *= *unfactored_cofactor;
    return v;
}

unsigned FactoredInteger::nu(const mpz_class& p) const {
    auto it = factors.find(p);
    return it == factors.end() ? 0 : it->second;
}

mpz_class FactoredInteger::largest_prime() const {
    if (!complete()) throw factorization_error("largest_prime on incomplete factorization");
    if (factors.empty()) return 1;
    return factors.rbegin()->first;
}

const mpz_class& cofactor_envelope() {
    static const mpz_class e = []() {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, 40);
        return t;
    }();
    return e;
}

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = []() {
        const uint32_t limit = 1000000;
        std::vector<bool> comp(limit, false);
        std::vector<uint32_t> ps;
        for (uint32_t i = 2; i < limit; ++i) {
            if (comp[i]) continue;
            ps.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j < limit; j += i) comp[j] = true;
        }
        return ps;
    }();
    return primes;
}

std::vector<uint64_t> primes_up_to(uint64_t limit) {
    std::vector<uint64_t> out;
    if (limit < 2) return out;
    const auto& base = small_primes();
    if (limit >= uint64_t(base.back()) * base.back())
        throw std::domain_error("primes_up_to: limit too large");
    const uint64_t seg = 1u << 20;
    std::vector<bool> comp;
    for (uint64_t lo = 2; lo <= limit; lo += seg) {
        uint64_t hi = std::min(limit, lo + seg - 1);
        comp.assign(hi - lo + 1, false);
        for (uint32_t p : base) {
            uint64_t p2 = uint64_t(p) * p;
            if (p2 > hi) break;
            uint64_t start = std::max<uint64_t>(p2, ((lo + p - 1) / p) * p);
            for (uint64_t j = start; j <= hi; j += p) comp[j - lo] = true;
        }
        for (uint64_t v = lo; v <= hi; ++v)
            if (!comp[v - lo]) out.push_back(v);
    }
    return out;
}

static bool miller_rabin(const mpz_class& n, const mpz_class& a) {
    // n odd > 2, 1 < a < n
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Strong Lucas probable-prime test with Selfridge parameters.
static bool strong_lucas_prp(const mpz_class& n) {
    if (mpz_perfect_square_p(n.get_mpz_t())) return false;
    long d_abs = 5;
    int sign = 1;
    mpz_class D;
    while (true) {
        D = sign * d_abs;
        int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0 && mpz_cmpabs(D.get_mpz_t(), n.get_mpz_t()) != 0) return false;
        d_abs += 2;
        sign = -sign;
        if (d_abs > 1000) return false;  // unreachable for non-squares
    }
    // P = 1, Q = (1 - D) / 4
    mpz_class Q = (1 - D) / 4;
    mpz_class d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    mpz_class half = (n + 1) / 2;  // inverse of 2 mod n (n odd)
    auto mod = [&](mpz_class v) {
        v %= n;
        if (v < 0) v += n;
        return v;
    };
    // binary chain on bits of d computing U_k, V_k, Q^k mod n
    mpz_class U = 1, V = 1, Qk = mod(Q);  // k = 1
    long bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (long i = bits - 2; i >= 0; --i) {
        // double: k -> 2k
        U = mod(U * V);
        V = mod(V * V - 2 * Qk);
        Qk = mod(Qk * Qk);
        if (mpz_tstbit(d.get_mpz_t(), i)) {
            // k -> k+1 with P = 1
            mpz_class U1 = mod(mod(U + V) * half);
            mpz_class V1 = mod(mod(D * U + V) * half);
            U = U1;
            V = V1;
            Qk = mod(Qk * Q);
        }
    }
    if (U == 0 || V == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = mod(V * V - 2 * Qk);
        if (V == 0) return true;
        Qk = mod(Qk * Qk);
    }
    return false;
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    static const unsigned long small[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                          23, 29, 31, 37, 41, 43, 47, 53};
    for (unsigned long p : small) {
        if (mpz_cmp_ui(n.get_mpz_t(), p) == 0) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // deterministic witness set for the 64-bit range
        for (unsigned long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
            if (!miller_rabin(n, a)) return false;
        return true;
    }
    // BPSW plus extra trial witnesses
    if (!miller_rabin(n, 2)) return false;
    if (!strong_lucas_prp(n)) return false;
    for (unsigned long a : {3, 5, 7, 11, 13})
        if (!miller_rabin(n, a)) return false;
    return true;
}

// Brent's variant of Pollard rho with deterministic parameters.
static mpz_class pollard_brent(const mpz_class& n, unsigned long c, unsigned long long max_iters) {
    mpz_class y = 2, m = 128, g = 1, r = 1, q = 1, x, ys;
    unsigned long long iters = 0;
    while (g == 1 && iters < max_iters) {
        x = y;
        for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
        mpz_class k = 0;
        while (k < r && g == 1) {
            ys = y;
            mpz_class rem = r - k;
            mpz_class count = m < rem ? m : rem;
            for (mpz_class i = 0; i < count; ++i) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            iters += mpz_get_ui(count.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        // backtrack one step at a time
        do {
            ys = (ys * ys + c) % n;
            mpz_class diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g != n && g != 1) return g;
    return 1;
}

FactoredInteger factorize(const mpz_class& n, const FactorOptions& opts) {
    if (n == 0) throw factorization_error("factorize(0)");
    FactoredInteger fi;
    mpz_class m = n;
    if (m < 0) {
        fi.sign = -1;
        m = -m;
    }
    if (m == 1) return fi;

    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    for (uint32_t p : small_primes()) {
        if (p > opts.trial_limit) break;
        if (mpz_cmp_ui(root.get_mpz_t(), p) < 0) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            fi.factors[mpz_class(p)] = e;
            mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
        }
    }
    if (m == 1) return fi;
    unsigned long covered = std::min<unsigned long>(opts.trial_limit, small_primes().back());
    if (mpz_cmp_ui(root.get_mpz_t(), covered) < 0 || is_prime(m)) {
        // remainder is prime: either below the squared trial bound or certified
        fi.factors[m] += 1;
        return fi;
    }

    std::vector<mpz_class> stack{m};
    std::vector<mpz_class> stuck;
    while (!stack.empty()) {
        mpz_class t = stack.back();
        stack.pop_back();
        if (t == 1) continue;
        if (is_prime(t)) {
            fi.factors[t] += 1;
            continue;
        }
        if (mpz_perfect_square_p(t.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
            stack.push_back(r);
            stack.push_back(r);
            continue;
        }
        mpz_class d = 1;
        for (int round = 1; round <= opts.rho_rounds && d == 1; ++round) {
            unsigned long long iters = opts.rho_base_iters << std::min(round / 2, 12);
            d = pollard_brent(t, round, iters);
        }
        if (d == 1 || d == t) {
            stuck.push_back(t);
        } else {
            stack.push_back(d);
            stack.push_back(t / d);
        }
    }
    if (!stuck.empty()) {
        mpz_class prod = 1;
        for (const auto& t : stuck) prod *= t;
        fi.unfactored_cofactor = prod;
    }
    return fi;
}

FactoredInteger factorize_or_throw(const mpz_class& n, const FactorOptions& opts) {
    FactoredInteger fi = factorize(n, opts);
    if (!fi.complete()) {
        std::string msg = fi.unfactored_cofactor > cofactor_envelope()
                              ? "unfactored cofactor exceeds the 10^40 envelope"
                              : "factorization budget exhausted on cofactor";
        throw factorization_error(msg + ": " + fi.unfactored_cofactor->get_str());
    }
    return fi;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

int mobius(unsigned long n) {
    int mu = 1;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            mu = -mu;
        }
    }
    if (m > 1) mu = -mu;
    return mu;
}

std::vector<unsigned long> divisors_of(unsigned long n) {
    std::vector<unsigned long> ds;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace pbc
