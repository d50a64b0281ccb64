#include "pbc/plan.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pbc {

// The static, versioned description of every parameter-window search run by
// the case audits.  Rational bounds are given as "num/den" strings; alpha
// windows use exact rational endpoints, log-alpha windows rational caps.
const char* SearchPlan::builtin_json() {
    return R"JSON({
  "version": 1,
  "real-57": [
    {"name": "u-p5-l1", "kind": "U", "n": 5,  "log_alpha_max": "1562/500",  "p_max": 29, "m_cap": 15, "require_primitive": true},
    {"name": "u-p5-l2", "kind": "U", "n": 10, "log_alpha_max": "1562/1000", "p_max": 29, "m_cap": 15, "require_primitive": true},
    {"name": "u-p5-l3", "kind": "U", "n": 15, "log_alpha_max": "1562/1500", "p_max": 29, "m_cap": 15, "require_primitive": true},
    {"name": "u-p5-l4", "kind": "U", "n": 20, "log_alpha_max": "1562/2000", "p_max": 29, "m_cap": 15, "require_primitive": true},
    {"name": "u-p5-l5", "kind": "U", "n": 25, "log_alpha_max": "1562/2500", "p_max": 29, "m_cap": 15, "require_primitive": true},
    {"name": "u-p5-l6", "kind": "U", "n": 30, "log_alpha_max": "1562/3000", "p_max": 29, "m_cap": 15, "require_primitive": true},
    {"name": "u-p7-l1", "kind": "U", "n": 7,  "log_alpha_max": "811/700",   "p_max": 19, "m_cap": 9,  "require_primitive": true},
    {"name": "u-p7-l2", "kind": "U", "n": 14, "log_alpha_max": "811/1400",  "p_max": 19, "m_cap": 9,  "require_primitive": true}
  ],
  "n24": [
    {"name": "small-alpha", "kind": "U", "n": 24, "alpha_max": "588/100", "p_max": 67, "m_cap": 35, "require_primitive": true},
    {"name": "mid-alpha",   "kind": "U", "n": 24, "alpha_max": "100",     "p_max": 103, "m_cap": 52, "require_primitive": true,
     "required_divisor": "3113232716449"}
  ],
  "v-cases": [
    {"name": "v-p5-l1", "kind": "V", "n": 5,  "log_alpha_max": "1562/500",  "p_max": 29, "m_cap": 15, "require_primitive": true},
    {"name": "v-p5-l2", "kind": "V", "n": 10, "log_alpha_max": "1562/1000", "p_max": 29, "m_cap": 15, "require_primitive": true},
    {"name": "v-p5-l3", "kind": "V", "n": 15, "log_alpha_max": "1562/1500", "p_max": 29, "m_cap": 15, "require_primitive": true},
    {"name": "v-p5-l4", "kind": "V", "n": 20, "log_alpha_max": "1562/2000", "p_max": 29, "m_cap": 15, "require_primitive": true},
    {"name": "v-p5-l5", "kind": "V", "n": 25, "log_alpha_max": "1562/2500", "p_max": 29, "m_cap": 15, "require_primitive": true},
    {"name": "v-p5-l6", "kind": "V", "n": 30, "log_alpha_max": "1562/3000", "p_max": 29, "m_cap": 15, "require_primitive": true},
    {"name": "v-p7-l1", "kind": "V", "n": 7,  "log_alpha_max": "811/700",   "p_max": 19, "m_cap": 9,  "require_primitive": true},
    {"name": "v-p7-l2", "kind": "V", "n": 14, "log_alpha_max": "811/1400",  "p_max": 19, "m_cap": 9,  "require_primitive": true}
  ],
  "v-exceptional": [
    {"n": 4, "r": 1, "s": -2}, {"n": 4, "r": 2, "s": -7},
    {"n": 5, "r": 2, "s": -3}, {"n": 5, "r": 5, "s": -7}, {"n": 5, "r": 5, "s": -18},
    {"n": 6, "r": 1, "s": 1},  {"n": 6, "r": 1, "s": -2}, {"n": 6, "r": 1, "s": -3},
    {"n": 6, "r": 1, "s": -4}, {"n": 6, "r": 1, "s": -5}, {"n": 6, "r": 2, "s": -15},
    {"n": 9, "r": 1, "s": -2}
  ],
  "v23": {"r_max": 100, "m_max": 15}
})JSON";
}

namespace {

mpq_class parse_q(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

SearchPlan parse_plan(const nlohmann::json& doc) {
    SearchPlan plan;
    plan.version = doc.at("version").get<int>();
    auto parse_windows = [](const nlohmann::json& arr) {
        std::vector<SearchWindow> out;
        for (const auto& w : arr) {
            SearchWindow sw;
            sw.name = w.at("name").get<std::string>();
            sw.kind = w.at("kind").get<std::string>().at(0);
            sw.n = w.at("n").get<unsigned>();
            if (w.contains("log_alpha_max")) sw.log_alpha_max = parse_q(w["log_alpha_max"].get<std::string>());
            if (w.contains("alpha_max")) {
                sw.alpha_max = parse_q(w["alpha_max"].get<std::string>());
            }
            if (w.contains("log_alpha_min")) sw.log_alpha_min = parse_q(w["log_alpha_min"].get<std::string>());
            if (w.contains("p_max")) sw.p_max = w["p_max"].get<unsigned long>();
            if (w.contains("required_divisor")) sw.required_divisor = mpz_class(w["required_divisor"].get<std::string>());
            if (w.contains("m_cap")) sw.m_cap = w["m_cap"].get<unsigned>();
            if (w.contains("require_primitive")) sw.require_primitive = w["require_primitive"].get<bool>();
            if (w.contains("expect_empty")) sw.expect_empty = w["expect_empty"].get<bool>();
            out.push_back(std::move(sw));
        }
        return out;
    };
    plan.real_57 = parse_windows(doc.at("real-57"));
    plan.n24 = parse_windows(doc.at("n24"));
    plan.v_cases = parse_windows(doc.at("v-cases"));
    for (const auto& e : doc.at("v-exceptional"))
        plan.v_exceptional.push_back(
            ExceptionalProbe{e.at("n").get<unsigned>(), e.at("r").get<long>(), e.at("s").get<long>()});
    plan.v23_r_max = doc.at("v23").at("r_max").get<unsigned>();
    plan.v23_m_max = doc.at("v23").at("m_max").get<unsigned>();
    return plan;
}

}  // namespace

SearchPlan SearchPlan::builtin() { return parse_plan(nlohmann::json::parse(builtin_json())); }

SearchPlan SearchPlan::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open search plan: " + path);
    nlohmann::json doc;
    in >> doc;
    return parse_plan(doc);
}

}  // namespace pbc
