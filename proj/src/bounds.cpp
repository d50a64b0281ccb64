#include "pbc/bounds.hpp"

#include <algorithm>

#include "pbc/factor.hpp"
#include "pbc/parallel.hpp"
#include "pbc/primes_ap.hpp"

namespace pbc {

Interval f_voutier(const Interval& ell) {
    Interval L = ell.log();
    return (L * L).mul(mpq_class(4488, 100)) + L.mul(mpq_class(21108, 100)) +
           Interval::exact(mpq_class(24908, 100), L.precision());
}

Interval f_voutier(const mpq_class& ell, mpfr_prec_t prec) {
    if (ell <= 1) throw std::domain_error("f_voutier: ell > 1 required");
    return f_voutier(Interval::exact(ell, prec));
}

mpq_class delta0(unsigned long n0) {
    switch (n0) {
        case 5: return mpq_class(261, 100);
        case 7: return mpq_class(319, 100);
        case 9: return mpq_class(357, 100);
        case 16: return mpq_class(289, 100);
        case 24: return mpq_class(1373, 500);  // 2.746
        default:
            if (n0 >= 11 && n0 <= 23 && is_prime(mpz_class(n0))) return mpq_class(33, 10);
            throw std::domain_error("delta0: unsupported modulus " + std::to_string(n0));
    }
}

mpq_class g_weight_exact(unsigned long n0) {
    mpq_class g = delta0(n0) / euler_phi(n0);
    g.canonicalize();
    return g;
}

Interval g_weight(unsigned long n0, mpfr_prec_t prec) {
    bool tabled = (n0 == 9 || n0 == 16 || n0 == 24 ||
                   (n0 <= 23 && n0 >= 5 && is_prime(mpz_class(n0))));
    if (tabled) return Interval::exact(g_weight_exact(n0), prec);
    if (n0 >= 25 && n0 % 2 == 1) {
        mpq_class lead(39, 10 * mpz_class(euler_phi(n0)));
        lead.canonicalize();
        mpq_class coef(146, 100 * mpz_class(n0));
        coef.canonicalize();
        return Interval::exact(lead, prec) +
               Interval::log_of(mpz_class(3 * n0), prec) * Interval::exact(coef, prec);
    }
    throw std::domain_error("g_weight: unsupported modulus " + std::to_string(n0));
}

XiValue xi(unsigned j, unsigned long n0, mpfr_prec_t prec) {
    XiValue out;
    out.j = j;
    out.n0 = n0;
    out.xi1 = Interval::exact(0L, prec);
    out.xi2 = Interval::exact(0L, prec);
    for (uint32_t p : small_primes()) {
        if (p > 2ull * j) break;
        unsigned long rem = p % n0;
        if (rem != 1 % n0 && rem != n0 - 1) continue;
        unsigned nb = nu_p_central(p, j, CentralKind::B);
        if (nb == 0) continue;
        Interval logp = Interval::log_of(mpz_class(static_cast<unsigned long>(p)), prec);
        unsigned nc = nu_p_central(p, j, CentralKind::C);
        if (nc > 0) out.xi1 += logp * Interval::exact(long(nc), prec);
        out.xi2 += logp * Interval::exact(long(nb), prec);
    }
    return out;
}

Interval xi_residues(unsigned j, unsigned long q, const std::set<unsigned long>& residues,
                     CentralKind kind, mpfr_prec_t prec) {
    Interval sum = Interval::exact(0L, prec);
    for (uint32_t p : small_primes()) {
        if (p > 2ull * j) break;
        if (!residues.count(p % q)) continue;
        unsigned nu = nu_p_central(p, j, kind);
        if (nu == 0) continue;
        sum += Interval::log_of(mpz_class(static_cast<unsigned long>(p)), prec) *
               Interval::exact(long(nu), prec);
    }
    return sum;
}

AuditReport delta0_audit(unsigned long n0, unsigned j_max, mpfr_prec_t prec, unsigned workers) {
    AuditReport rep;
    rep.name = "delta0/n0=" + std::to_string(n0);
    mpq_class d0 = delta0(n0);
    long phi = long(euler_phi(n0));
    central_numbers(j_max);  // warm the table before the parallel section

    struct Row {
        bool ok1 = true, ok2 = true, undecided = false;
        double ratio1 = 0, ratio2 = 0;
    };
    std::vector<Row> rows = parallel_map<Row>(j_max - 1, workers, [&](size_t i) {
        unsigned j = static_cast<unsigned>(i) + 2;
        Row row;
        auto check_one = [&](CentralKind kind, bool& ok, double& ratio) {
            try {
                ok = decide_predicate(
                    [&](mpfr_prec_t p) -> std::optional<bool> {
                        XiValue v = xi(j, n0, p);
                        const Interval& val = (kind == CentralKind::C) ? v.xi1 : v.xi2;
                        Interval lhs = val * Interval::exact(phi, p);
                        Interval rhs = log_central(j, kind, p).mul(d0);
                        ratio = (lhs / rhs).approx();
                        if (lhs.certainly_le(rhs)) return true;
                        if (rhs.certainly_lt(lhs)) return false;
                        return std::nullopt;
                    },
                    "delta0 ratio", prec);
            } catch (const indecisive_comparison&) {
                row.undecided = true;
            }
        };
        check_one(CentralKind::C, row.ok1, row.ratio1);
        check_one(CentralKind::B, row.ok2, row.ratio2);
        return row;
    });

    double max1 = 0, max2 = 0;
    unsigned arg1 = 0, arg2 = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        unsigned j = static_cast<unsigned>(i) + 2;
        if (rows[i].undecided)
            rep.add(AuditRow{"ratio", "j=" + std::to_string(j), "", "", "indecisive at max precision",
                             AuditStatus::undecided});
        if (!rows[i].ok1)
            rep.add(AuditRow{"catalan-ratio", "j=" + std::to_string(j), "", "",
                             "xi1 phi > delta0 log C_j", AuditStatus::fail});
        if (!rows[i].ok2)
            rep.add(AuditRow{"binomial-ratio", "j=" + std::to_string(j), "", "",
                             "xi2 phi > delta0 log B_j", AuditStatus::fail});
        if (rows[i].ratio1 > max1) {
            max1 = rows[i].ratio1;
            arg1 = j;
        }
        if (rows[i].ratio2 > max2) {
            max2 = rows[i].ratio2;
            arg2 = j;
        }
    }
    rep.note("summary", "n0=" + std::to_string(n0) + " j<=" + std::to_string(j_max),
             "max xi1 ratio " + std::to_string(max1) + " at j=" + std::to_string(arg1) +
                 ", max xi2 ratio " + std::to_string(max2) + " at j=" + std::to_string(arg2));
    return rep;
}

AuditReport delta1_audit(mpfr_prec_t prec) {
    AuditReport rep;
    rep.name = "delta1";
    auto delta1_for = [&](unsigned long q) {
        EpsEntry eps = eps_table(q);
        Interval s1500 = Interval::exact(1500L, prec).sqrt();
        Interval one = Interval::exact(1L, prec);
        Interval s2 = Interval::exact(2L, prec).sqrt();
        Interval s3 = Interval::exact(3L, prec).sqrt();
        Interval s5 = Interval::exact(5L, prec).sqrt();
        return Interval::exact(mpq_class(47, 15), prec) +
               (s2.mul(mpq_class(2)) * Interval::exact(eps.eps_psi, prec) / s1500) *
                   (one + one / s3 + one / s5) +
               (Interval::exact(mpq_class(eps.eps_theta * 2), prec) / s1500) * (one + one / s2);
    };
    for (unsigned long n0 : {5ul, 7ul, 9ul, 11ul, 13ul, 16ul, 17ul, 19ul, 23ul, 24ul}) {
        Interval d1 = delta1_for(n0);
        Interval margin = Interval::exact(delta0(n0), prec) - d1.div(mpq_class(137, 100));
        rep.check_margin(margin, "delta1-vs-delta0", "n0=" + std::to_string(n0),
                         "delta1 in " + d1.str(8));
    }
    // q = 12 variant feeding the V_{2,3} scan: (delta1/4)(1500/log C_1500) < 0.62
    Interval d1 = delta1_for(12);
    Interval lhs = d1.mul(mpq_class(1, 4)) * Interval::exact(1500L, prec) /
                   log_central(1500, CentralKind::C, prec);
    rep.check_margin(Interval::exact(mpq_class(62, 100), prec) - lhs, "delta1-q12-ratio",
                     "m=1500", "value " + lhs.str(8));
    return rep;
}

// epsilon/lambda tables for the index-24 case
Case24Tables case24_tables(const Case24Context& ctx, mpfr_prec_t prec, unsigned workers) {
    const unsigned J = 420;
    central_numbers(J);
    Case24Tables out;
    out.eps0 = ctx.eps0;
    out.g = ctx.g;
    out.lambda = ctx.lambda;
    out.x0 = ctx.x0;
    out.eps1.assign(J, Interval(prec));
    out.eps2.assign(J, Interval(prec));
    out.lam1.assign(J, Interval(prec));
    out.lam2.assign(J, Interval(prec));

    struct Slot {
        Interval e1, e2, l1, l2;
        bool in_t1 = false, in_t2 = false;
    };
    std::vector<Slot> slots = parallel_map<Slot>(J - 1, workers, [&](size_t i) {
        unsigned j = static_cast<unsigned>(i) + 1;
        Slot s;
        XiValue v = xi(j, 24, prec);
        // eps_kj = M_24 / log of the table value; 0/0 at C_1 = 1 is taken as 0
        if (j == 1) {
            s.e1 = Interval::exact(0L, prec);
        } else {
            s.e1 = v.xi1 / log_central(j, CentralKind::C, prec);
        }
        s.e2 = v.xi2 / log_central(j, CentralKind::B, prec);
        Interval logC = (j == 1) ? Interval::exact(0L, prec) : log_central(j, CentralKind::C, prec);
        s.l1 = logC - v.xi1.div(ctx.eps0);
        s.l2 = log_central(j, CentralKind::B, prec) - v.xi2.div(ctx.eps0);
        mpq_class cap(58136, 10000);
        auto member = [&](const Interval& lam, const char* what) {
            return decide_predicate(
                [&](mpfr_prec_t p2) -> std::optional<bool> {
                    Interval l = lam;
                    if (p2 != prec) {
                        XiValue v2 = xi(j, 24, p2);
                        if (what[0] == '1') {
                            Interval lc = (j == 1) ? Interval::exact(0L, p2)
                                                   : log_central(j, CentralKind::C, p2);
                            l = lc - v2.xi1.div(ctx.eps0);
                        } else {
                            l = log_central(j, CentralKind::B, p2) - v2.xi2.div(ctx.eps0);
                        }
                    }
                    if (l.certainly_le(cap)) return true;
                    if (l.certainly_gt(cap)) return false;
                    return std::nullopt;
                },
                what, prec);
        };
        s.in_t1 = member(s.l1, "1:lambda1 membership");
        s.in_t2 = member(s.l2, "2:lambda2 membership");
        return s;
    });
    for (size_t i = 0; i < slots.size(); ++i) {
        unsigned j = static_cast<unsigned>(i) + 1;
        out.eps1[j] = slots[i].e1;
        out.eps2[j] = slots[i].e2;
        out.lam1[j] = slots[i].l1;
        out.lam2[j] = slots[i].l2;
        if (slots[i].in_t1) out.t1.insert(j);
        if (slots[i].in_t2) out.t2.insert(j);
    }

    // y0 = log6/g - lambda + max(log12 + (1 - 1/g) log(1+x0), log((1-x0)/(1-x0^(1/12))))
    Interval log6 = Interval::log_of(mpz_class(6), prec);
    Interval term1 = Interval::log_of(mpz_class(12), prec) +
                     Interval::log_of(mpq_class(1 + ctx.x0), prec)
                         .mul(mpq_class(1) - mpq_class(1) / ctx.g);
    Interval x0_12 = Interval::exact(ctx.x0, prec).rootn(12);
    Interval term2 = ((Interval::exact(1L, prec) - Interval::exact(ctx.x0, prec)) /
                      (Interval::exact(1L, prec) - x0_12))
                         .log();
    out.y0 = Interval::exact(mpq_class(1) / ctx.g, prec) * log6 -
             Interval::exact(ctx.lambda, prec) + Interval::max(term1, term2);
    mpq_class denom = 8 - 23 * ctx.g;
    if (denom <= 0) throw std::domain_error("case24_tables: 8 - 23g must be positive");
    out.alpha_log_cap = out.y0.mul(ctx.g) / Interval::exact(denom, prec);
    return out;
}

AuditReport m8_ratio_audit(mpfr_prec_t prec) {
    AuditReport rep;
    rep.name = "m8-ratios";
    Case24Context ctx{mpq_class(3433, 10000), mpq_class(3433, 10000), 0, mpq_class(298, 1000)};
    Case24Tables t = case24_tables(ctx, prec);
    auto ratio_le = [&](unsigned j, CentralKind kind, const mpq_class& cap, const std::string& claim) {
        XiValue v = xi(j, 8, prec);
        const Interval& m8 = (kind == CentralKind::C) ? v.xi1 : v.xi2;
        Interval margin = log_central(j, kind, prec).mul(cap) - m8;
        rep.check_margin(margin, claim, "j=" + std::to_string(j));
    };
    for (unsigned j : t.t1) {
        if (j < 2 || j == 4 || j == 5 || j == 12) continue;
        ratio_le(j, CentralKind::C, mpq_class(46, 100), "catalan-cap-0.46");
    }
    for (unsigned j : t.t2) {
        if (j < 2) continue;
        ratio_le(j, CentralKind::B, mpq_class(46, 100), "binomial-cap-0.46");
    }
    ratio_le(4, CentralKind::C, mpq_class(74, 100), "catalan-cap-j4");
    ratio_le(5, CentralKind::C, mpq_class(53, 100), "catalan-cap-j5");
    ratio_le(12, CentralKind::C, mpq_class(65, 100), "catalan-cap-j12");
    return rep;
}

AuditReport case24_audit(mpfr_prec_t prec, unsigned workers) {
    AuditReport rep;
    rep.name = "case24";
    const mpq_class eps0(3433, 10000);
    Case24Context main_ctx{eps0, eps0, 0, mpq_class(298, 1000)};
    Case24Tables t = case24_tables(main_ctx, prec, workers);

    // epsilon caps
    bool cap_all = true, zero_before_12 = true, cap_restricted = true;
    unsigned worst = 0;
    for (unsigned j = 1; j < 420; ++j) {
        if (!(t.eps1[j].certainly_le(eps0) && t.eps2[j].certainly_le(eps0))) {
            cap_all = false;
            worst = j;
        }
        if (j < 12 && !(t.eps1[j].certainly_le(0) && t.eps2[j].certainly_le(0))) zero_before_12 = false;
        if (j >= 2 && j <= 85 && !(j >= 37 && j <= 43)) {
            if (!(t.eps1[j].certainly_le(mpq_class(29, 100)) &&
                  t.eps2[j].certainly_le(mpq_class(29, 100))))
                cap_restricted = false;
        }
    }
    rep.check(cap_all, "eps-cap-0.3433", "j<420", cap_all ? "" : "violated at j=" + std::to_string(worst));
    rep.check(zero_before_12, "eps-zero-below-12", "j<12");
    rep.check(cap_restricted, "eps-cap-0.29", "2<=j<=85, j not in [37,43]");

    // exact T sets
    std::set<unsigned> t1_expected = {1, 2, 3, 4, 5, 6, 12, 13, 14, 37, 38, 39, 40, 41};
    std::set<unsigned> t2_expected = {1, 2, 3, 4, 5, 12, 37, 38};
    auto set_str = [](const std::set<unsigned>& s) {
        std::string out;
        for (unsigned j : s) out += (out.empty() ? "" : ",") + std::to_string(j);
        return out;
    };
    rep.check(t.t1 == t1_expected, "t1-set", "threshold 5.8136", "T1 = {" + set_str(t.t1) + "}");
    rep.check(t.t2 == t2_expected, "t2-set", "threshold 5.8136", "T2 = {" + set_str(t.t2) + "}");

    // lambda floors at j = 4, 5, 12 and the multiplicity caps they imply
    struct Floor {
        unsigned j;
        mpq_class v;
    };
    for (const Floor& f : {Floor{4, mpq_class(2639, 1000)}, Floor{5, mpq_class(3737, 1000)},
                           Floor{12, mpq_class(3111, 1000)}}) {
        rep.check(t.lam1[f.j].certainly_ge(f.v), "lambda-floor", "j=" + std::to_string(f.j),
                  t.lam1[f.j].str(8));
    }
    mpq_class budget(58136, 10000);
    rep.check(3 * mpq_class(2639, 1000) > budget, "t4-cap", "3 floors exceed budget");
    rep.check(2 * mpq_class(3737, 1000) > budget, "t5-cap", "2 floors exceed budget");
    rep.check(2 * mpq_class(3111, 1000) > budget, "t12-cap", "2 floors exceed budget");

    // y0 and the alpha cap for the main context
    rep.check(t.y0.certainly_le(mpq_class(721, 100)), "y0-main", "g=0.3433 x0=0.298", t.y0.str(8));
    rep.check(t.alpha_log_cap.certainly_lt(mpq_class(2378, 100)), "alpha-log-cap", "g=0.3433",
              t.alpha_log_cap.str(8));

    // the 5.8136 display: 7.21 - (8/0.3433 - 23) log 100 <= 5.8136
    Interval display = Interval::exact(mpq_class(721, 100), prec) -
                       Interval::log_of(mpz_class(100), prec)
                           .mul(mpq_class(8) / eps0 - 23);
    rep.check(display.certainly_le(budget), "budget-display", "", display.str(10));

    // restricted context: below the 0.29 cap everything collapses to alpha < 5.88
    Case24Context small_ctx{mpq_class(29, 100), mpq_class(29, 100), 0, mpq_class(1, 4)};
    Case24Tables ts = case24_tables(small_ctx, prec, workers);
    rep.check(ts.y0.certainly_le(mpq_class(812, 100)), "y0-restricted", "g=0.29 x0=0.25", ts.y0.str(8));
    rep.check(ts.alpha_log_cap.certainly_lt(Interval::log_of(mpq_class(588, 100), prec)),
              "alpha-cap-restricted", "alpha < 5.88", ts.alpha_log_cap.str(8));

    // middle context: no Catalan factor at j = 37, 38 forces alpha < 84.3 < 100
    Case24Context mid_ctx{mpq_class(324, 1000), mpq_class(324, 1000), 0, mpq_class(28, 100)};
    bool mid_eps_ok = true;
    for (unsigned j = 1; j < 420; ++j) {
        if (j == 37 || j == 38) {
            if (!t.eps2[j].certainly_lt(mpq_class(324, 1000))) mid_eps_ok = false;
        } else if (!(t.eps1[j].certainly_le(mpq_class(324, 1000)) &&
                     t.eps2[j].certainly_le(mpq_class(324, 1000)))) {
            mid_eps_ok = false;
        }
    }
    rep.check(mid_eps_ok, "eps-cap-0.324", "j<420 excluding Catalan eps at 37, 38");
    Case24Tables tm = case24_tables(mid_ctx, prec, workers);
    rep.check(tm.y0.certainly_le(mpq_class(75, 10)), "y0-mid", "g=0.324 x0=0.28", tm.y0.str(8));
    rep.check(tm.alpha_log_cap.certainly_lt(Interval::log_of(mpq_class(843, 10), prec)),
              "alpha-cap-mid", "alpha < 84.3", tm.alpha_log_cap.str(8));

    // index caps from the size of log U_24
    Interval log100 = Interval::log_of(mpz_class(100), prec);
    Interval lhs86 = log_central(86, CentralKind::C, prec) - Interval::log_of(mpz_class(2), prec);
    rep.check_margin(lhs86 - log100.mul(24), "mk-cap-85", "log(C_86/2) > 24 log 100");
    Interval lhs420 = (log_central(420, CentralKind::C, prec) - Interval::log_of(mpz_class(2), prec))
                          .div(mpq_class(24));
    rep.check_margin(lhs420 - Interval::exact(mpq_class(2378, 100), prec), "mk-cap-420",
                     "log(C_420/2)/24 > 23.78");

    // closing chain: 0.56 log C_4 + 0.07 log C_5 + 0.19 log C_12 <= 4.07 while
    // (12 - 0.46*23) log 100 - 0.46 log 12 - log 2 >= 4.7
    Interval chain_hi = log_central(4, CentralKind::C, prec).mul(mpq_class(56, 100)) +
                        log_central(5, CentralKind::C, prec).mul(mpq_class(7, 100)) +
                        log_central(12, CentralKind::C, prec).mul(mpq_class(19, 100));
    rep.check(chain_hi.certainly_le(mpq_class(407, 100)), "chain-upper", "", chain_hi.str(10));
    Interval chain_lo = log100.mul(mpq_class(12) - mpq_class(46, 100) * 23) -
                        Interval::log_of(mpz_class(12), prec).mul(mpq_class(46, 100)) -
                        Interval::log_of(mpz_class(2), prec);
    rep.check(chain_lo.certainly_ge(mpq_class(47, 10)), "chain-lower", "", chain_lo.str(10));
    rep.check_margin(chain_lo - chain_hi, "chain-contradiction", "4.07 < 4.7");

    rep.absorb(m8_ratio_audit(prec));
    return rep;
}

const std::vector<std::pair<unsigned long, unsigned>>& even_case_rows() {
    static const std::vector<std::pair<unsigned long, unsigned>> rows = {
        {16, 1}, {9, 1}, {5, 1}, {7, 0}, {11, 0}, {13, 0}, {17, 0}, {19, 0}, {23, 0}, {29, 0}};
    return rows;
}

const std::vector<std::pair<unsigned long, unsigned>>& complex_case_rows() {
    static const std::vector<std::pair<unsigned long, unsigned>> rows = {
        {9, 2}, {5, 1}, {7, 1}, {11, 0}, {13, 0}, {17, 0}, {19, 0}, {23, 0}, {29, 0}};
    return rows;
}

namespace {

unsigned long smallest_prime_factor(unsigned long n) {
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

mpz_class pow_ul(unsigned long b, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

Interval log_phi_golden(mpfr_prec_t prec) {
    // log((1 + sqrt 5)/2)
    Interval num = Interval::exact(1L, prec) + Interval::exact(5L, prec).sqrt();
    return num.log() - Interval::log_of(mpz_class(2), prec);
}

}  // namespace

Interval inequality_margin(IneqCase c, unsigned n, unsigned long n0, unsigned t, mpfr_prec_t prec) {
    unsigned long p = smallest_prime_factor(n0);
    mpz_class pt1 = pow_ul(p, t + 1);
    Interval g = g_weight(n0, prec);
    Interval log2pt1 = Interval::log_of(mpz_class(2 * pt1), prec);
    Interval one = Interval::exact(1L, prec);
    Interval inv_pt1 = Interval::exact(mpq_class(1, pt1), prec);
    Interval nn = Interval::exact(long(n), prec);

    switch (c) {
        case IneqCase::even_720:
            // 1/2 - 1/p^{t+1} - g/2 - log(2 p^{t+1})/(0.68 n)
            return Interval::exact(mpq_class(1, 2), prec) - inv_pt1 - g.mul(mpq_class(1, 2)) -
                   log2pt1 / nn.mul(mpq_class(68, 100));
        case IneqCase::complex_small_alpha:
        case IneqCase::v_complex_small:
            // 1.38 (1 - g) - 4/p^{t+1} - log(2 p^{t+1})/n
            return (one - g).mul(mpq_class(138, 100)) - inv_pt1.mul(mpq_class(4)) - log2pt1 / nn;
        case IneqCase::complex_large_alpha:
        case IneqCase::v_complex_large:
            // 1 - 1/p^{t+1} - g - (1 - g) f(n)/n - log(2 p^{t+1})/(4n)
            return one - inv_pt1 - g -
                   (one - g) * f_voutier(mpq_class(long(n)), prec) / nn -
                   log2pt1 / nn.mul(mpq_class(4));
        case IneqCase::real_general:
        case IneqCase::v_real: {
            if (n0 == 16) {
                // 1/2 - g(16) - log2/(16 log phi)
                return Interval::exact(mpq_class(1, 2), prec) - g -
                       Interval::log_of(mpz_class(2), prec) /
                           log_phi_golden(prec).mul(mpq_class(16));
            }
            // log phi - log(2p)/(n (1 - 1/p - g))
            Interval denom = (one - Interval::exact(mpq_class(1, p), prec) - g) * nn;
            Interval rhs = Interval::log_of(mpz_class(2 * mpz_class(p)), prec) / denom;
            return log_phi_golden(prec) - rhs;
        }
        case IneqCase::case24_main:
            return Interval::exact(mpq_class(58136, 10000), prec) -
                   (Interval::exact(mpq_class(721, 100), prec) -
                    Interval::log_of(mpz_class(100), prec)
                        .mul(mpq_class(8) / mpq_class(3433, 10000) - 23));
        default:
            throw std::domain_error("inequality_margin: case has no single displayed margin");
    }
}

AuditReport inequality_audit(IneqCase c, mpfr_prec_t prec) {
    AuditReport rep;
    switch (c) {
        case IneqCase::even_720: {
            rep.name = "even-720";
            for (auto [n0, t] : even_case_rows()) {
                for (unsigned n : {720u, 1440u, 3600u, 7200u}) {
                    Interval m = inequality_margin(c, n, n0, t, prec);
                    rep.check_margin(m, "margin",
                                     "n0=" + std::to_string(n0) + " t=" + std::to_string(t) +
                                         " n=" + std::to_string(n));
                }
                // the 0.65-denominator variant of the same display
                unsigned long p = smallest_prime_factor(n0);
                mpz_class pt1 = pow_ul(p, t + 1);
                Interval g = g_weight(n0, prec);
                Interval alt = Interval::exact(mpq_class(1, 2), prec) -
                               Interval::exact(mpq_class(1, pt1), prec) - g.mul(mpq_class(1, 2)) -
                               Interval::log_of(mpz_class(2 * pt1), prec) /
                                   Interval::exact(720L, prec).mul(mpq_class(65, 100));
                rep.check_margin(alt, "margin-0.65",
                                 "n0=" + std::to_string(n0) + " t=" + std::to_string(t) + " n=720");
            }
            break;
        }
        case IneqCase::complex_small_alpha:
        case IneqCase::complex_large_alpha:
        case IneqCase::v_complex_small:
        case IneqCase::v_complex_large: {
            bool small = (c == IneqCase::complex_small_alpha || c == IneqCase::v_complex_small);
            rep.name = small ? "complex-small-alpha" : "complex-large-alpha";
            for (auto [n0, t] : complex_case_rows()) {
                for (unsigned n : {6500u, 13000u, 32500u, 65000u}) {
                    Interval m = inequality_margin(c, n, n0, t, prec);
                    rep.check_margin(m, "margin",
                                     "n0=" + std::to_string(n0) + " t=" + std::to_string(t) +
                                         " n=" + std::to_string(n));
                }
            }
            break;
        }
        case IneqCase::real_general:
        case IneqCase::v_real: {
            rep.name = (c == IneqCase::real_general) ? "real-general" : "v-real";
            if (c == IneqCase::real_general) {
                Interval m16 = inequality_margin(c, 16, 16, 0, prec);
                rep.check_margin(m16, "display-16", "n0=16");
            }
            for (unsigned long n0 : {9ul, 13ul, 17ul, 19ul, 23ul, 29ul}) {
                Interval m = inequality_margin(c, unsigned(n0), n0, 0, prec);
                rep.check_margin(m, "eliminated", "n0=" + std::to_string(n0) + " n=" + std::to_string(n0));
            }
            {
                // n0 = 11 at the boundary n = 11
                Interval m = inequality_margin(c, 11, 11, 0, prec);
                rep.check_margin(m, "eliminated", "n0=11 n=11");
            }
            // the p = 5, 7 windows: n log alpha <= log(2p)/(1 - 1/p - g(p))
            for (auto [p, cap] : {std::pair<unsigned long, mpq_class>{5, mpq_class(1562, 100)},
                                  {7, mpq_class(811, 100)}}) {
                Interval g = Interval::exact(g_weight_exact(p), prec);
                Interval denom = Interval::exact(1L, prec) - Interval::exact(mpq_class(1, p), prec) - g;
                Interval val = Interval::log_of(mpz_class(2 * mpz_class(p)), prec) / denom;
                rep.check_margin(Interval::exact(cap, prec) - val, "window-cap",
                                 "p=" + std::to_string(p), val.str(8));
            }
            break;
        }
        case IneqCase::case24_main: {
            rep.name = "case24-main";
            rep.check_margin(inequality_margin(c, 24, 24, 0, prec), "budget-display", "");
            break;
        }
        case IneqCase::v_even: {
            rep.name = "v-even";
            // nu_2(V_{4t}) <= 1 and the mod 8 obstruction; the divisibility
            // filter on the family values 2..5 leaves only 14.
            bool sweep_ok = true;
            for (unsigned long r = 0; r < 8; r += 2) {
                for (unsigned long s = 1; s < 8; s += 2) {
                    unsigned long v4 = (r * r % 8 * ((r * r + 4 * s) % 8) + 2 * s * s) % 8;
                    if (v4 == 6) sweep_ok = false;
                }
            }
            rep.check(sweep_ok, "mod8-sweep", "r even, s odd", "V_4 = 2 (mod 8) on all classes");
            std::vector<mpz_class> candidates;
            for (unsigned m = 2; m <= 5; ++m) {
                for (CentralKind kind : {CentralKind::C, CentralKind::B}) {
                    const mpz_class& val = central_value(m, kind);
                    if (nu_p_central(2, m, kind) > 1) continue;
                    bool odd_ok = true, has_odd = false;
                    FactoredInteger fi = factorize_or_throw(val);
                    for (const auto& [pp, e] : fi.factors) {
                        (void)e;
                        if (pp == 2) continue;
                        has_odd = true;
                        unsigned long rem = mpz_fdiv_ui(pp.get_mpz_t(), 8);
                        if (rem != 1 && rem != 7) odd_ok = false;
                    }
                    if (odd_ok && has_odd) candidates.push_back(val);
                }
            }
            rep.check(candidates.size() == 1 && candidates[0] == 14, "forced-value",
                      "family values m in [2,5], nu_2 <= 1, odd primes = +-1 mod 8",
                      candidates.size() == 1 ? candidates[0].get_str() : "multiple candidates");
            break;
        }
    }
    return rep;
}

AuditReport v23_tables_audit(mpfr_prec_t prec, unsigned workers) {
    AuditReport rep;
    rep.name = "v23-tables";
    central_numbers(1500);
    for (unsigned long l0 : {7ul, 11ul}) {
        std::set<unsigned long> residues{1, l0};
        struct Row {
            bool ok = true;
            double ratio = 0;
        };
        std::vector<Row> rows = parallel_map<Row>(1499 - 16 + 1, workers, [&](size_t i) {
            unsigned m = static_cast<unsigned>(i) + 16;
            mpq_class cap = (m <= 35) ? mpq_class(52, 100) : mpq_class(59, 100);
            Row row;
            Interval x = xi_residues(m, 12, residues, CentralKind::B, prec);
            Interval rhs = log_central(m, CentralKind::C, prec).mul(cap);
            row.ratio = (x / log_central(m, CentralKind::C, prec)).approx();
            row.ok = x.certainly_lt(rhs);
            return row;
        });
        double worst = 0;
        unsigned argworst = 0;
        std::vector<unsigned> violations;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].ok) violations.push_back(static_cast<unsigned>(i) + 16);
            if (rows[i].ratio > worst) {
                worst = rows[i].ratio;
                argworst = static_cast<unsigned>(i) + 16;
            }
        }
        std::string witness = "max ratio " + std::to_string(worst) + " at m=" + std::to_string(argworst);
        if (!violations.empty()) {
            witness += "; cap violated at m in {";
            for (size_t i = 0; i < violations.size(); ++i)
                witness += (i ? "," : "") + std::to_string(violations[i]);
            witness += "}";
        }
        rep.check(violations.empty(), "xi-ratio-caps", "l0=" + std::to_string(l0) + " m in [16, 1499]",
                  witness);
        // where the cap fails, settle the underlying cube equation directly:
        // no r >= 4 has r(r^2 + 3s) in the family at these indices
        int s = (l0 == 7) ? 1 : -1;
        for (unsigned m : violations) {
            bool any_solution = false;
            const CentralPair& cp = central_numbers(m);
            for (const mpz_class& fam : {cp.C, cp.B, mpz_class(2 * cp.C), mpz_class(2 * cp.B)}) {
                mpz_class root;
                mpz_root(root.get_mpz_t(), fam.get_mpz_t(), 3);
                for (mpz_class r : {mpz_class(root - 1), root, mpz_class(root + 1), mpz_class(root + 2)}) {
                    if (r < 4) continue;
                    if (r * (r * r + 3 * s) == fam) any_solution = true;
                }
            }
            rep.check(!any_solution, "cube-check-at-violation",
                      "m=" + std::to_string(m) + " s=" + std::to_string(s),
                      "direct verification of the family equation");
        }
    }
    Interval log12 = Interval::log_of(mpz_class(12), prec);
    rep.check(
        (log12 / Interval::exact(mpq_class(2, 3) - mpq_class(52, 100), prec))
            .certainly_lt(log_central(16, CentralKind::C, prec)),
        "bracket-16", "log12/(2/3 - 0.52) < log C_16");
    rep.check(
        (log12 / Interval::exact(mpq_class(2, 3) - mpq_class(59, 100), prec))
            .certainly_lt(log_central(36, CentralKind::C, prec)),
        "bracket-36", "log12/(2/3 - 0.59) < log C_36");
    Interval final_bound = log12 / Interval::exact(mpq_class(2, 3) - mpq_class(62, 100), prec);
    rep.check(final_bound.certainly_lt(mpq_class(54)), "bracket-54", "log12/(2/3 - 0.62) < 54");
    rep.check(Interval::exact(mpq_class(54), prec).certainly_lt(log_central(50, CentralKind::C, prec)),
              "bracket-c50", "54 < log C_50");
    return rep;
}

}  // namespace pbc
