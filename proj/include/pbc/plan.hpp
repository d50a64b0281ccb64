#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace pbc {

// One named parameter window of a case analysis: bounds on log alpha, the
// sequence index, and the screens applied to candidate terms.
struct SearchWindow {
    std::string name;
    char kind = 'U';  // U or V
    unsigned n = 0;
    std::optional<mpq_class> alpha_max;      // exact rational alpha window
    std::optional<mpq_class> log_alpha_max;  // rational cap on log alpha
    std::optional<mpq_class> log_alpha_min;
    std::optional<unsigned long> p_max;
    std::optional<mpz_class> required_divisor;
    unsigned m_cap = 0;
    bool require_primitive = false;
    bool expect_empty = true;
};

struct ExceptionalProbe {
    unsigned n = 0;
    long r = 0;
    long s = 0;
};

struct SearchPlan {
    int version = 0;
    std::vector<SearchWindow> real_57;   // p in {5, 7} windows for U terms
    std::vector<SearchWindow> n24;       // the two index-24 windows
    std::vector<SearchWindow> v_cases;   // p in {5, 7} windows for V terms
    std::vector<ExceptionalProbe> v_exceptional;  // V-index probes from the exception table
    unsigned v23_r_max = 100;
    unsigned v23_m_max = 15;

    static SearchPlan builtin();
    static SearchPlan from_file(const std::string& path);
    static const char* builtin_json();
};

}  // namespace pbc
