#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pbc/plan.hpp"
#include "pbc/search.hpp"

using namespace pbc;

namespace {

// brute-force oracle: all (r, s) in the integer box with alpha in [c1, c2]
std::vector<std::pair<mpz_class, mpz_class>> rs_oracle(const mpq_class& c1, const mpq_class& c2) {
    std::vector<std::pair<mpz_class, mpz_class>> out;
    double c2d = mpq_get_d(c2.get_mpq_t());
    long r_max = static_cast<long>(2 * c2d) + 2;
    long s_box = static_cast<long>(c2d * c2d) + 2;
    for (long r = 1; r <= r_max; ++r) {
        for (long s = -s_box; s <= s_box; ++s) {
            if (classify_params(r, s) != ParamClass::real_roots) continue;
            // alpha in [c1, c2] exactly: 2 alpha = r + sqrt(disc)
            mpq_class lo = 2 * c1 - r, hi = 2 * c2 - r;
            mpz_class disc = mpz_class(r) * r + 4 * s;
            bool ge = lo <= 0 || lo * lo <= disc;
            bool le = hi >= 0 && disc <= hi * hi;
            if (ge && le) out.emplace_back(r, s);
        }
    }
    return out;
}

// per-target oracle: plain non-decreasing DFS over parts that divide the
// remaining quotient (independent of the largest-prime branching)
void oracle_rec(const mpz_class& target, size_t min_idx, const std::vector<PBCPart>& all,
                std::vector<PBCPart>& cur, std::set<std::string>& out) {
    if (target == 1) {
        if (!cur.empty()) out.insert(PBCFactorization{1, cur}.str());
        return;
    }
    for (size_t i = min_idx; i < all.size(); ++i) {
        const mpz_class& v = central_value(all[i].m, all[i].kind);
        if (v <= 1 || v > target) continue;
        if (!mpz_divisible_p(target.get_mpz_t(), v.get_mpz_t())) continue;
        cur.push_back(all[i]);
        oracle_rec(target / v, i, all, cur, out);
        cur.pop_back();
    }
}

std::set<std::string> oracle_decompose(const mpz_class& target, unsigned m_min, unsigned m_max) {
    std::vector<PBCPart> all;
    for (unsigned m = m_min; m <= m_max; ++m) {
        all.push_back(PBCPart{m, CentralKind::C});
        all.push_back(PBCPart{m, CentralKind::B});
    }
    std::set<std::string> out;
    std::vector<PBCPart> cur;
    oracle_rec(target, 0, all, cur, out);
    return out;
}

}  // namespace

TEST_CASE("window enumeration matches the box oracle") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> cd(1.2, 20.0);
    for (int trial = 0; trial < 50; ++trial) {
        double a = cd(rng), b = cd(rng);
        if (a > b) std::swap(a, b);
        mpq_class c1(static_cast<long>(a * 100), 100), c2(static_cast<long>(b * 100), 100);
        c1.canonicalize();
        c2.canonicalize();
        if (c1 <= 0 || c1 > c2) continue;
        RSWindow win = enumerate_rs(c1, c2, SSign::both);
        auto oracle = rs_oracle(c1, c2);
        std::sort(oracle.begin(), oracle.end());
        REQUIRE(win.pairs == oracle);
    }
}

TEST_CASE("window contains the golden pair and respects constraints") {
    RSWindow w = enumerate_rs(mpq_class(1609, 1000), mpq_class(1619, 1000), SSign::both);
    bool has_fib = false;
    for (const auto& [r, s] : w.pairs)
        if (r == 1 && s == 1) has_fib = true;
    CHECK(has_fib);
    RSWindow pos = enumerate_rs(mpq_class(16, 10), mpq_class(588, 100), SSign::positive);
    for (const auto& [r, s] : pos.pairs) {
        CHECK(s > 0);
        CHECK(mpq_class(r) < pos.c2);  // r < c2 for s > 0
        CHECK(classify_params(r, s) == ParamClass::real_roots);
    }
    CHECK_THROWS_AS(enumerate_rs(mpq_class(0), mpq_class(1), SSign::both), std::domain_error);
}

TEST_CASE("representations of small targets") {
    auto reps144 = pbc_decompose(144, 2);
    REQUIRE(reps144.size() == 1);
    CHECK(reps144[0].str() == "C2*C2*B2*B2");
    auto reps144_all = pbc_decompose(144, 1);
    CHECK(reps144_all.size() == 3);  // B1/C2 choices at the two value-2 slots
    bool has_b1 = false;
    for (const auto& rep : reps144_all)
        if (rep.str() == "B1*B1*B2*B2") has_b1 = true;
    CHECK(has_b1);
    auto reps5 = pbc_decompose(5, 2);
    REQUIRE(reps5.size() == 1);
    CHECK(reps5[0].str() == "C3");
    CHECK(pbc_decompose(3, 2).empty());
    CHECK(pbc_decompose(3, 1).empty());
    auto neg = pbc_decompose(-40, 2);
    REQUIRE(!neg.empty());
    for (const auto& rep : neg) {
        CHECK(rep.sign == -1);
        CHECK(rep.value() == -40);
    }
    auto unit = pbc_decompose(1, 1);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].str() == "C1");
    CHECK(pbc_decompose(1, 2).empty());
    CHECK_THROWS_AS(pbc_decompose(0, 2), std::domain_error);
}

TEST_CASE("decomposition agrees with the brute-force oracle") {
    // randomized targets below 1e12, half of them random products of parts
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<long long> td(2, 1000000000000ll);
    std::vector<mpz_class> targets;
    for (int i = 0; i < 500; ++i) targets.push_back(mpz_class(static_cast<long>(td(rng))));
    std::vector<mpz_class> part_values;
    for (unsigned m = 2; m <= 8; ++m) {
        part_values.push_back(central_numbers(m).C);
        part_values.push_back(central_numbers(m).B);
    }
    std::uniform_int_distribution<size_t> pd(0, part_values.size() - 1);
    for (int i = 0; i < 500; ++i) {
        mpz_class v = 1;
        mpz_class cap("1000000000000");
        while (true) {
            mpz_class next = v * part_values[pd(rng)];
            if (next > cap) break;
            v = next;
            if (rng() % 3 == 0) break;
        }
        if (v > 1) targets.push_back(v);
    }
    for (const mpz_class& target : targets) {
        auto reps = pbc_decompose(target, 2, 4096, 8);
        std::set<std::string> got;
        for (const auto& rep : reps) got.insert(rep.str());
        std::set<std::string> expect = oracle_decompose(target, 2, 8);
        if (got != expect) {
            CAPTURE(target.get_str());
            REQUIRE(got == expect);
        }
    }
}

TEST_CASE("sequence scans") {
    std::vector<std::pair<mpz_class, mpz_class>> fib{{1, 1}};
    auto hits = scan_u(fib, 12, ScanConstraints{}, 6);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].value == 144);
    auto v_hits = scan_v({{2, 1}}, 3, ScanConstraints{}, 5);
    REQUIRE(v_hits.size() == 1);
    CHECK(v_hits[0].value == 14);
    CHECK(v_hits[0].reps.front().str() == "C4");
    auto v4 = scan_v({{1, 1}}, 3, ScanConstraints{}, 5);
    REQUIRE(v4.size() == 1);
    CHECK(v4[0].value == 4);
    CHECK(v4[0].reps.front().str() == "C2*C2");
}

TEST_CASE("exception-table term checks") {
    // representable terms among the exceptional pairs: the real ones are the
    // two known rows, and several complex rows exist
    std::map<std::pair<long, long>, std::vector<unsigned>> u_hits;
    for (const auto& row : bhv_exception_table()) {
        for (const auto& [r, s] : row.pairs) {
            auto hits = scan_u({{mpz_class(r), mpz_class(s)}}, row.n, ScanConstraints{}, 0);
            if (!hits.empty()) u_hits[{r, s}].push_back(row.n);
        }
    }
    CHECK(u_hits[{1, 1}] == std::vector<unsigned>{5, 12});
    // all other hitting pairs are complex
    for (const auto& [pair, ns] : u_hits) {
        if (pair == std::pair<long, long>{1, 1}) continue;
        CHECK(classify_params(pair.first, pair.second) == ParamClass::complex_roots);
    }
    CHECK(u_hits.count({1, -4}));   // U_5 = 5
    CHECK(u_hits.count({2, -11}));  // U_5 = 5
    CHECK(u_hits.count({2, -7}));   // U_8 = -40
}

TEST_CASE("V rows for small indices and units") {
    // the five published rows plus the row the inverted cube bracket missed:
    // (17, -1) has V_3 = 17 * 286 = 4862 = C_9
    std::vector<V23Hit> rows = v23_scan(100, 15);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].r == 2);
    CHECK(rows[0].n == 2);
    CHECK(rows[0].family == "B2");
    CHECK(rows[1].r == 4);
    CHECK(rows[1].s == -1);
    CHECK(rows[1].family == "C4");
    CHECK(rows[2].family == "2C2");
    CHECK(rows[3].family == "C4");
    CHECK(rows[4].family == "2B4");
    CHECK(rows[5].r == 17);
    CHECK(rows[5].s == -1);
    CHECK(rows[5].n == 3);
    CHECK(rows[5].value == 4862);
    CHECK(rows[5].family == "C9");
    // it is a quad-form Pell coordinate as well: 4862^2 - 285*288^2 = 4
    CHECK(mpz_class(4862) * 4862 - mpz_class(285) * 288 * 288 == 4);
    AuditReport rep = v23_audit(100, 15);
    CHECK(rep.status == AuditStatus::fail);
    size_t extra = 0;
    for (const auto& row : rep.rows)
        if (row.claim == "extra-row" && row.status == AuditStatus::fail) {
            ++extra;
            CHECK(row.witness.find("(17, -1; n=3) -> C9") != std::string::npos);
        }
    CHECK(extra == 1);
}

TEST_CASE("pell fundamentals") {
    PellFundamental f2 = pell_fundamental(2);
    CHECK(f2.x == 1);
    CHECK(f2.y == 1);
    CHECK(f2.norm == -1);
    PellFundamental f7 = pell_fundamental(7);
    CHECK(f7.x == 8);
    CHECK(f7.y == 3);
    CHECK(f7.norm == 1);
    PellFundamental f29 = pell_fundamental(29);
    CHECK(f29.x == 70);
    CHECK(f29.y == 13);
    CHECK(f29.norm == -1);
    auto q5 = pell4_fundamental(5);
    REQUIRE(q5.has_value());
    CHECK(q5->x == 1);
    CHECK(q5->y == 1);
    auto q3 = pell4_fundamental(3);
    REQUIRE(q3.has_value());
    CHECK(q3->x == 4);
    CHECK(q3->y == 2);
}

TEST_CASE("pell scans and the known quad-form rows") {
    AuditReport rep = pell_audit(200, 12, 50);
    for (const auto& row : rep.rows) {
        INFO(row.claim << " " << row.inputs << " " << row.witness);
        CHECK(row.status == AuditStatus::pass);
    }
    std::vector<PellSolution> hits = pell_scan(50, 8, 20);
    bool d2w2 = false, d3w2 = false, d2w3 = false, d29x1 = false;
    for (const auto& h : hits) {
        if (h.form == PellForm::quad && h.d == 2 && h.n == 2 && h.x == 6) d2w2 = true;
        if (h.form == PellForm::quad && h.d == 3 && h.n == 2 && h.x == 14) d3w2 = true;
        if (h.form == PellForm::quad && h.d == 2 && h.n == 3 && h.x == 14) d2w3 = true;
        if (h.form == PellForm::unit && h.d == 29 && h.n == 1 && h.x == 70) d29x1 = true;
    }
    CHECK(d2w2);
    CHECK(d3w2);
    CHECK(d2w3);
    CHECK(d29x1);
}

TEST_CASE("residue obstruction") {
    CHECK(mod8_obstruction_check().status == AuditStatus::pass);
    // direct values: V_4 = 34 for (2, 1) and 322 for (4, 1), both 2 mod 8
    CHECK(v_term(LucasParams::create(2, 1), 4) % 8 == 2);
    CHECK(v_term(LucasParams::create(4, 1), 4) % 8 == 2);
}

TEST_CASE("exceptional V probes reproduce the known representable terms") {
    SearchPlan plan = SearchPlan::builtin();
    AuditReport rep = v_exceptional_audit(plan.v_exceptional);
    // honest outcome: six of the twelve probes have representable V-terms
    CHECK(rep.status == AuditStatus::fail);
    CHECK(rep.failures() == 6);
    std::set<std::string> witnesses;
    for (const auto& row : rep.rows)
        if (row.status == AuditStatus::fail) witnesses.insert(row.inputs + " " + row.witness);
    bool has_27 = false, has_1m3 = false;
    for (const std::string& w : witnesses) {
        if (w.find("(2, -7, 4)") != std::string::npos && w.find("= 2 =") != std::string::npos) has_27 = true;
        if (w.find("(1, -3, 6)") != std::string::npos && w.find("10") != std::string::npos) has_1m3 = true;
    }
    CHECK(has_27);
    CHECK(has_1m3);
}

TEST_CASE("plan file round trip") {
    SearchPlan plan = SearchPlan::builtin();
    CHECK(plan.version == 1);
    CHECK(plan.real_57.size() == 8);
    CHECK(plan.n24.size() == 2);
    CHECK(plan.v_cases.size() == 8);
    CHECK(plan.v_exceptional.size() == 12);
    SearchPlan from_disk = SearchPlan::from_file(std::string(SOURCE_DIR) + "/data/search_plan.json");
    CHECK(from_disk.real_57.size() == plan.real_57.size());
    CHECK(from_disk.n24.size() == plan.n24.size());
    CHECK(from_disk.v23_r_max == plan.v23_r_max);
}
