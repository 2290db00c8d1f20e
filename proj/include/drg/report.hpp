#pragma once

// Verification report: one entry per executed check, stable field order so
// reports diff cleanly between runs.

#include <string>
#include <utility>
#include <vector>

namespace drg {

struct CheckEntry {
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped"
    std::vector<std::pair<std::string, std::string>> counts;
    std::string witness;  // empty when absent
};

struct VerificationReport {
    std::vector<CheckEntry> entries;

    void add(CheckEntry e) { entries.push_back(std::move(e)); }
    bool all_pass() const {
        for (const auto& e : entries)
            if (e.status == "fail") return false;
        return true;
    }
    /// Canonical JSON text ({"checks": [...]}), fields in fixed order.
    std::string to_text() const;
};

}  // namespace drg
