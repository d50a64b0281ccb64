#pragma once

#include <string>
#include <vector>

#include "pbc/interval.hpp"

namespace pbc {

enum class AuditStatus { pass, fail, undecided };

const char* status_name(AuditStatus s);
AuditStatus worse(AuditStatus a, AuditStatus b);

struct AuditRow {
    std::string claim;    // stable claim identifier
    std::string inputs;   // rendered inputs
    std::string margin_lo;
    std::string margin_hi;
    std::string witness;  // offending value or extra detail
    AuditStatus status = AuditStatus::pass;
};

// Named audit outcome: pass/fail/undecided with one row per checked claim.
// Failures and undecided rows always carry a witness.
struct AuditReport {
    std::string name;
    AuditStatus status = AuditStatus::pass;
    std::vector<AuditRow> rows;
    std::string config;
    double runtime_seconds = 0.0;

    void add(AuditRow row);
    void note(const std::string& claim, const std::string& inputs, const std::string& witness = "");
    void check(bool ok, const std::string& claim, const std::string& inputs,
               const std::string& witness = "");
    // Pass iff the margin interval is certainly positive; fail iff certainly
    // negative; undecided otherwise.
    void check_margin(const Interval& margin, const std::string& claim, const std::string& inputs,
                      const std::string& witness = "");
    void absorb(const AuditReport& sub);
    size_t failures() const;
};

}  // namespace pbc
