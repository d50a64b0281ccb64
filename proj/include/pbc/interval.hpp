#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace pbc {

struct indecisive_comparison : std::runtime_error {
    explicit indecisive_comparison(const std::string& what) : std::runtime_error(what) {}
};

// Closed interval [lo, hi] with outward-rounded mpfr endpoints.  Every
// operation encloses the exact result, so a decisive comparison against a
// rational constant is a proof at the working precision.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 128);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    mpfr_prec_t precision() const { return prec_; }

    static Interval exact(long v, mpfr_prec_t prec = 128);
    static Interval exact(const mpz_class& v, mpfr_prec_t prec = 128);
    static Interval exact(const mpq_class& v, mpfr_prec_t prec = 128);
    static Interval pi_const(mpfr_prec_t prec = 128);
    static Interval log_of(const mpz_class& v, mpfr_prec_t prec = 128);  // v > 0
    static Interval log_of(const mpq_class& v, mpfr_prec_t prec = 128);  // v > 0

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // o must not contain zero
    Interval operator-() const;
    Interval& operator+=(const Interval& o) { *this = *this + o; return *this; }
    Interval& operator-=(const Interval& o) { *this = *this - o; return *this; }

    Interval add(const mpq_class& c) const;
    Interval sub(const mpq_class& c) const;
    Interval mul(const mpq_class& c) const;
    Interval div(const mpq_class& c) const;

    Interval log() const;   // requires lo > 0
    Interval exp() const;
    Interval sqrt() const;  // requires lo >= 0
    Interval rootn(unsigned long n) const;
    Interval abs() const;

    static Interval max(const Interval& a, const Interval& b);
    static Interval min(const Interval& a, const Interval& b);

    bool contains_zero() const;
    // -1: entirely below c; +1: entirely above c; 0: straddles or touches.
    int cmp(const mpq_class& c) const;
    int cmp(const Interval& o) const;
    bool certainly_le(const mpq_class& c) const;
    bool certainly_lt(const mpq_class& c) const;
    bool certainly_ge(const mpq_class& c) const;
    bool certainly_gt(const mpq_class& c) const;
    bool certainly_lt(const Interval& o) const;
    bool certainly_le(const Interval& o) const;
    bool certainly_positive() const;
    bool certainly_negative() const;

    double width() const;
    double approx() const;  // midpoint estimate, display only
    std::string lo_str(int digits = 20) const;
    std::string hi_str(int digits = 20) const;
    std::string str(int digits = 20) const;

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

// Runs a tri-state predicate at increasing precision (start, 2*start, ...,
// max_prec) until it decides; throws indecisive_comparison otherwise.
template <class F>
bool decide_predicate(F&& eval, const char* what, mpfr_prec_t start = 128, mpfr_prec_t max_prec = 1024) {
    for (mpfr_prec_t p = start; p <= max_prec; p *= 2) {
        std::optional<bool> r = eval(p);
        if (r.has_value()) return *r;
    }
    throw indecisive_comparison(what);
}

}  // namespace pbc
