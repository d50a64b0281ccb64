#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pbc/bounds.hpp"
#include "pbc/central.hpp"
#include "pbc/cyclotomic.hpp"
#include "pbc/lucas.hpp"
#include "pbc/plan.hpp"
#include "pbc/primes_ap.hpp"
#include "pbc/search.hpp"

using nlohmann::ordered_json;

namespace {

struct RunConfig {
    long precision_bits = 128;
    unsigned j_max = 1500;
    uint64_t y_max = 100000;
    unsigned long d_max = 200;
    unsigned n_max = 12;
    unsigned m_max = 50;
    unsigned m_min = 2;
    unsigned workers = 1;
    std::string format = "text";
    bool no_meta = false;
    std::string plan_path;
};

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["precision_bits"] = cfg.precision_bits;
    j["j_max"] = cfg.j_max;
    j["y_max"] = cfg.y_max;
    j["d_max"] = cfg.d_max;
    j["n_max"] = cfg.n_max;
    j["m_max"] = cfg.m_max;
    j["m_min"] = cfg.m_min;
    j["workers"] = cfg.workers;
    return j;
}

ordered_json report_json(const pbc::AuditReport& rep) {
    ordered_json j;
    j["name"] = rep.name;
    j["status"] = pbc::status_name(rep.status);
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.rows) {
        ordered_json r;
        r["claim_ref"] = row.claim;
        r["inputs"] = row.inputs;
        r["margin_lo"] = row.margin_lo;
        r["margin_hi"] = row.margin_hi;
        r["witness"] = row.witness;
        r["status"] = pbc::status_name(row.status);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

void emit(const std::vector<pbc::AuditReport>& reports, const RunConfig& cfg, double seconds) {
    if (cfg.format == "json") {
        ordered_json doc;
        doc["config"] = config_json(cfg);
        ordered_json arr = ordered_json::array();
        for (const auto& rep : reports) arr.push_back(report_json(rep));
        doc["reports"] = std::move(arr);
        if (!cfg.no_meta) doc["meta"] = {{"runtime_seconds", seconds}};
        std::cout << doc.dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        std::cout << "report,status,claim_ref,inputs,margin_lo,margin_hi,witness,row_status\n";
        auto escape = [](const std::string& s) {
            std::string out = "\"";
            for (char c : s) {
                if (c == '"') out += "\"\"";
                else out += c;
            }
            return out + "\"";
        };
        for (const auto& rep : reports)
            for (const auto& row : rep.rows)
                std::cout << escape(rep.name) << "," << pbc::status_name(rep.status) << ","
                          << escape(row.claim) << "," << escape(row.inputs) << ","
                          << escape(row.margin_lo) << "," << escape(row.margin_hi) << ","
                          << escape(row.witness) << "," << pbc::status_name(row.status) << "\n";
        return;
    }
    for (const auto& rep : reports) {
        std::cout << "[" << pbc::status_name(rep.status) << "] " << rep.name << "\n";
        for (const auto& row : rep.rows) {
            std::cout << "  [" << pbc::status_name(row.status) << "] " << row.claim;
            if (!row.inputs.empty()) std::cout << " (" << row.inputs << ")";
            if (!row.margin_lo.empty()) std::cout << " margin [" << row.margin_lo << ", " << row.margin_hi << "]";
            if (!row.witness.empty()) std::cout << " : " << row.witness;
            std::cout << "\n";
        }
    }
    if (!cfg.no_meta) std::cout << "runtime: " << seconds << " s\n";
}

int exit_code(const std::vector<pbc::AuditReport>& reports) {
    bool any_fail = false, any_undecided = false;
    for (const auto& rep : reports) {
        if (rep.status == pbc::AuditStatus::fail) any_fail = true;
        if (rep.status == pbc::AuditStatus::undecided) any_undecided = true;
    }
    if (any_fail) return 1;
    if (any_undecided) return 2;
    return 0;
}

pbc::SearchPlan load_plan(const RunConfig& cfg) {
    if (!cfg.plan_path.empty()) return pbc::SearchPlan::from_file(cfg.plan_path);
    return pbc::SearchPlan::builtin();
}

std::vector<pbc::AuditReport> run_verify(const std::string& lemma, const RunConfig& cfg) {
    std::vector<pbc::AuditReport> out;
    mpfr_prec_t prec = cfg.precision_bits;
    if (lemma == "m14") {
        out.push_back(pbc::growth_monotonicity_check(7, 500));
        pbc::AuditReport rep;
        rep.name = "growth-thresholds";
        struct Row {
            unsigned m;
            mpq_class coef;
        };
        for (const Row& row : {Row{14, mpq_class(1)}, Row{400, mpq_class(136, 100)}, Row{2100, mpq_class(138, 100)}}) {
            pbc::Interval lhs = pbc::log_central(row.m, pbc::CentralKind::C, prec) -
                                pbc::Interval::log_of(mpz_class(2), prec);
            rep.check_margin(lhs - pbc::Interval::exact(mpq_class(row.coef * row.m), prec),
                             "log-central-floor", "m=" + std::to_string(row.m));
        }
        out.push_back(rep);
        out.push_back(pbc::weighted_log_bound_check(7, 7, prec));
        out.push_back(pbc::weighted_log_bound_check(10, 1000, prec));
        out.push_back(pbc::weighted_log_bound_check(500, 500, prec));
    } else if (lemma == "pix") {
        out.push_back(pbc::bt_audit(5, 1, {100, 1000, 10000}, prec));
        out.push_back(pbc::bt_audit(3, 2, {10, 100, 1000}, prec));
        out.push_back(pbc::bt_audit(24, 23, {100, 1000, 10000}, prec));
    } else if (lemma == "rr") {
        for (unsigned long q : {5ul, 7ul, 8ul, 9ul, 11ul, 12ul, 13ul, 16ul, 17ul, 19ul, 23ul, 24ul}) {
            std::vector<uint64_t> ys = {q, 100, 1000, 10000};
            out.push_back(pbc::rr_audit(q, q - 1, ys, prec));
        }
    } else if (lemma == "gaps") {
        out.push_back(pbc::ap_gap_check(24, {5}, 15, cfg.y_max, cfg.workers));
        out.push_back(pbc::ap_gap_check(8, {3, 5}, 6, cfg.y_max, cfg.workers));
        out.push_back(pbc::ap_gap_check(12, {5}, 9, cfg.y_max, cfg.workers));
        out.push_back(pbc::combined_sum_audit(24, 23, {1500, 10000}, prec));
        out.push_back(pbc::combined_sum_audit(12, 11, {1500, 10000}, prec));
    } else if (lemma == "mnbd") {
        for (unsigned long n0 : {5ul, 7ul, 9ul, 11ul, 13ul, 16ul, 17ul, 19ul, 23ul, 24ul})
            out.push_back(pbc::delta0_audit(n0, cfg.j_max, prec, cfg.workers));
        out.push_back(pbc::delta1_audit(prec));
    } else if (lemma == "lemma1-grid") {
        out.push_back(pbc::telescoping_audit(200, 210));
        out.push_back(pbc::lemma_bound_soundness_audit(120, prec));
    } else if (lemma == "case24") {
        out.push_back(pbc::case24_audit(prec, cfg.workers));
        out.push_back(pbc::inequality_audit(pbc::IneqCase::case24_main, prec));
    } else if (lemma == "v23-tables") {
        out.push_back(pbc::v23_tables_audit(prec, cfg.workers));
    } else {
        throw CLI::ValidationError("unknown lemma: " + lemma);
    }
    return out;
}

std::vector<pbc::AuditReport> run_search(const std::string& which, const RunConfig& cfg) {
    std::vector<pbc::AuditReport> out;
    mpfr_prec_t prec = cfg.precision_bits;
    pbc::SearchPlan plan = load_plan(cfg);
    if (which == "even-720") {
        out.push_back(pbc::inequality_audit(pbc::IneqCase::even_720, prec));
    } else if (which == "real-57") {
        out.push_back(pbc::inequality_audit(pbc::IneqCase::real_general, prec));
        for (const auto& w : plan.real_57) out.push_back(pbc::run_window_search(w, prec));
    } else if (which == "n24") {
        out.push_back(pbc::inequality_audit(pbc::IneqCase::case24_main, prec));
        for (const auto& w : plan.n24) out.push_back(pbc::run_window_search(w, prec));
    } else if (which == "v-cases") {
        out.push_back(pbc::inequality_audit(pbc::IneqCase::v_even, prec));
        out.push_back(pbc::inequality_audit(pbc::IneqCase::v_complex_small, prec));
        out.push_back(pbc::inequality_audit(pbc::IneqCase::v_complex_large, prec));
        out.push_back(pbc::inequality_audit(pbc::IneqCase::v_real, prec));
        out.push_back(pbc::mod8_obstruction_check());
        for (const auto& w : plan.v_cases) out.push_back(pbc::run_window_search(w, prec));
        out.push_back(pbc::v_exceptional_audit(plan.v_exceptional));
    } else if (which == "v23") {
        out.push_back(pbc::v23_audit(plan.v23_r_max, plan.v23_m_max));
    } else {
        throw CLI::ValidationError("unknown case: " + which);
    }
    return out;
}

pbc::AuditReport run_tables(const RunConfig& cfg) {
    mpfr_prec_t prec = cfg.precision_bits;
    pbc::AuditReport rep;
    rep.name = "tables";
    for (unsigned long q : {5ul, 7ul, 8ul, 9ul, 11ul, 12ul, 13ul, 16ul, 17ul, 19ul, 23ul, 24ul}) {
        pbc::EpsEntry e = pbc::eps_table(q);
        rep.note("eps", "q=" + std::to_string(q),
                 "psi " + e.eps_psi.get_str() + ", theta " + e.eps_theta.get_str());
    }
    for (unsigned long n0 : {5ul, 7ul, 9ul, 11ul, 13ul, 16ul, 17ul, 19ul, 23ul, 24ul})
        rep.note("delta0", "n0=" + std::to_string(n0), pbc::delta0(n0).get_str());
    for (unsigned long n0 : {9ul, 16ul, 24ul, 29ul, 31ul})
        rep.note("g-weight", "n0=" + std::to_string(n0), pbc::g_weight(n0, prec).str(12));
    pbc::Case24Context ctx{mpq_class(3433, 10000), mpq_class(3433, 10000), 0, mpq_class(298, 1000)};
    pbc::Case24Tables t = pbc::case24_tables(ctx, prec, cfg.workers);
    for (unsigned j = 1; j < 420; ++j) {
        rep.note("case24-row", "j=" + std::to_string(j),
                 "eps1 " + t.eps1[j].str(10) + ", eps2 " + t.eps2[j].str(10) + ", lam1 " +
                     t.lam1[j].str(10) + ", lam2 " + t.lam2[j].str(10));
    }
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for Lucas-sequence terms that are products of Catalan "
                 "numbers and central binomial coefficients"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--precision-bits", cfg.precision_bits, "interval precision (64..1024)")
        ->envname("PBC_PRECISION_BITS")
        ->check(CLI::Range(64l, 1024l));
    app.add_option("--j-max", cfg.j_max, "index cap for the valuation-sum audits")->envname("PBC_J_MAX");
    app.add_option("--y-max", cfg.y_max, "range cap for prime-gap audits")->envname("PBC_Y_MAX");
    app.add_option("--d-max", cfg.d_max, "Pell discriminant cap")->envname("PBC_D_MAX");
    app.add_option("--n-max", cfg.n_max, "Pell power cap")->envname("PBC_N_MAX");
    app.add_option("--m-max", cfg.m_max, "family index cap")->envname("PBC_M_MAX");
    app.add_option("--m-min", cfg.m_min, "least part index in representations")->envname("PBC_M_MIN");
    app.add_option("--workers", cfg.workers, "worker threads")->envname("PBC_WORKERS");
    app.add_option("--format", cfg.format, "output format: text, json or csv")
        ->envname("PBC_FORMAT")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--no-meta", cfg.no_meta, "omit runtime metadata for byte-stable output");
    app.add_option("--plan", cfg.plan_path, "search-plan file overriding the built-in plan")
        ->envname("PBC_PLAN");

    std::string lemma, which, pbc_n;
    CLI::App* verify = app.add_subcommand("verify", "run a named numeric audit");
    verify->add_option("lemma", lemma,
                       "one of: m14, pix, rr, gaps, mnbd, lemma1-grid, case24, v23-tables")
        ->required();
    CLI::App* search = app.add_subcommand("search", "run a named case search");
    search->add_option("case", which, "one of: even-720, real-57, n24, v-cases, v23")->required();
    CLI::App* pell = app.add_subcommand("pell", "scan Pell coordinates for family members");
    CLI::App* pbc_cmd = app.add_subcommand("pbc", "factor an integer over the family values");
    pbc_cmd->add_option("N", pbc_n, "target integer")->required();
    CLI::App* tables = app.add_subcommand("tables", "emit the constant tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    auto start = std::chrono::steady_clock::now();
    std::vector<pbc::AuditReport> reports;
    try {
        if (verify->parsed()) {
            reports = run_verify(lemma, cfg);
        } else if (search->parsed()) {
            reports = run_search(which, cfg);
        } else if (pell->parsed()) {
            reports.push_back(pbc::pell_audit(cfg.d_max, cfg.n_max, cfg.m_max));
        } else if (pbc_cmd->parsed()) {
            pbc::AuditReport rep;
            rep.name = "pbc-decompose";
            mpz_class n(pbc_n);
            auto reps = pbc::pbc_decompose(n, cfg.m_min, 64, cfg.m_max);
            for (const auto& r : reps) rep.note("representation", "N=" + n.get_str(), r.str());
            if (reps.empty()) rep.note("representation", "N=" + n.get_str(), "none");
            reports.push_back(rep);
        } else if (tables->parsed()) {
            reports.push_back(run_tables(cfg));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(reports, cfg, seconds);
    return exit_code(reports);
}
