#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kdiv {

struct ReportEntry {
    std::string claim_id;
    std::string paper_anchor; // verbatim source quote for the claim
    std::string computed;
    std::string expected;
    bool pass = false;
};

// Outcome of re-computing every built-in reference claim. Entries are
// ordered by claim_id.
struct Report {
    std::vector<ReportEntry> entries;

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_pass() const { return failed() == 0; }
};

Report verify_paper();

} // namespace kdiv
