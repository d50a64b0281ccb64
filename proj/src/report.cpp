#include "pbc/report.hpp"

namespace pbc {

const char* status_name(AuditStatus s) {
    switch (s) {
        case AuditStatus::pass: return "pass";
        case AuditStatus::fail: return "fail";
        default: return "undecided";
    }
}

AuditStatus worse(AuditStatus a, AuditStatus b) {
    if (a == AuditStatus::fail || b == AuditStatus::fail) return AuditStatus::fail;
    if (a == AuditStatus::undecided || b == AuditStatus::undecided) return AuditStatus::undecided;
    return AuditStatus::pass;
}

void AuditReport::add(AuditRow row) {
    status = worse(status, row.status);
    rows.push_back(std::move(row));
}

void AuditReport::note(const std::string& claim, const std::string& inputs, const std::string& witness) {
    add(AuditRow{claim, inputs, "", "", witness, AuditStatus::pass});
}

void AuditReport::check(bool ok, const std::string& claim, const std::string& inputs,
                        const std::string& witness) {
    add(AuditRow{claim, inputs, "", "", ok ? witness : (witness.empty() ? "violated" : witness),
                 ok ? AuditStatus::pass : AuditStatus::fail});
}

void AuditReport::check_margin(const Interval& margin, const std::string& claim,
                               const std::string& inputs, const std::string& witness) {
    AuditStatus st = AuditStatus::undecided;
    if (margin.certainly_positive())
        st = AuditStatus::pass;
    else if (margin.certainly_negative())
        st = AuditStatus::fail;
    AuditRow row{claim, inputs, margin.lo_str(), margin.hi_str(), witness, st};
    if (st != AuditStatus::pass && row.witness.empty()) row.witness = "margin " + margin.str(8);
    add(std::move(row));
}

void AuditReport::absorb(const AuditReport& sub) {
    for (const auto& row : sub.rows) {
        AuditRow r = row;
        r.claim = sub.name + "/" + r.claim;
        add(std::move(r));
    }
    runtime_seconds += sub.runtime_seconds;
}

size_t AuditReport::failures() const {
    size_t k = 0;
    for (const auto& r : rows)
        if (r.status == AuditStatus::fail) ++k;
    return k;
}

}  // namespace pbc
