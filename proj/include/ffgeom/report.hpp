#pragma once

// Run reports: typed rows, per-theorem summaries, JSON/CSV serialization.
// A rerun with the same seed must serialize byte-identically, so rows are
// canonically sorted and doubles get a fixed textual form.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ffgeom {

struct ReportRow {
    std::string theorem_id;
    int p = 0;
    int ell = 1;
    int d = 0;
    int64_t instance = 0;  // trial/row index, unique within (theorem_id, p, ell, d)
    std::string family;    // how the input sets were generated
    // Cardinalities (-1 = not applicable to this row).
    int64_t card_a = -1, card_b = -1, card_p = -1, card_r = -1;
    double observed = 0.0;  // measured quantity: |E|, |I - main|, a spectral sum, ...
    double bound = 0.0;     // value of the bound expression
    double constant = 0.0;  // observed / bound (0 when bound == 0)
    bool exact_pass = true; // false only when a hard assertion failed
    // "" or ';'-joined markers: "VALIDITY_RANGE: ...", "EXPLORATORY", ...
    std::string flags;

    int64_t q() const;  // p^ell
};

struct ReportSummary {
    std::string theorem_id;
    int64_t rows = 0;
    int64_t flagged = 0;  // VALIDITY_RANGE rows, excluded from the constant stats
    double max_constant = 0.0;
    double min_constant = 0.0;
    double median_constant = 0.0;
    bool all_exact_pass = true;
};

struct Report {
    std::string command;  // "verify" | "sweep"
    uint64_t seed = 0;
    int64_t trials = 0;
    std::vector<ReportRow> rows;
    std::vector<ReportSummary> summaries;
    bool passed = true;

    // Sorts rows by (theorem_id, q, d, instance) and rebuilds summaries and
    // the overall pass flag.
    void finalize();
};

void write_report_json(std::ostream& out, const Report& r);
void write_report_csv(std::ostream& out, const Report& r);
std::string report_json_string(const Report& r);

}  // namespace ffgeom
