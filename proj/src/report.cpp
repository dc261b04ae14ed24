#include "ffgeom/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace ffgeom {

int64_t ReportRow::q() const {
    int64_t v = 1;
    for (int i = 0; i < ell; ++i) v *= p;
    return v;
}

namespace {

bool in_stats(const ReportRow& r) {
    return r.flags.find("VALIDITY_RANGE") == std::string::npos;
}

// Collapse -0.0 and non-finite values so the serialized text is stable.
double clean(double v) {
    if (!std::isfinite(v) || v == 0.0) return 0.0;
    return v;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", clean(v));
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void Report::finalize() {
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        auto ka = std::make_tuple(a.theorem_id, a.q(), a.d, a.instance);
        auto kb = std::make_tuple(b.theorem_id, b.q(), b.d, b.instance);
        return ka < kb;
    });

    summaries.clear();
    passed = true;
    size_t i = 0;
    while (i < rows.size()) {
        size_t j = i;
        ReportSummary s;
        s.theorem_id = rows[i].theorem_id;
        std::vector<double> constants;
        while (j < rows.size() && rows[j].theorem_id == s.theorem_id) {
            const ReportRow& r = rows[j];
            ++s.rows;
            if (!r.exact_pass) {
                s.all_exact_pass = false;
                passed = false;
            }
            if (in_stats(r))
                constants.push_back(r.constant);
            else
                ++s.flagged;
            ++j;
        }
        if (!constants.empty()) {
            std::sort(constants.begin(), constants.end());
            s.min_constant = constants.front();
            s.max_constant = constants.back();
            size_t n = constants.size();
            s.median_constant = n % 2 ? constants[n / 2]
                                      : 0.5 * (constants[n / 2 - 1] + constants[n / 2]);
        }
        summaries.push_back(std::move(s));
        i = j;
    }
}

void write_report_json(std::ostream& out, const Report& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = r.command;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["passed"] = r.passed;
    auto rows = nlohmann::ordered_json::array();
    for (const ReportRow& row : r.rows) {
        nlohmann::ordered_json o;
        o["theorem"] = row.theorem_id;
        o["p"] = row.p;
        o["ell"] = row.ell;
        o["d"] = row.d;
        o["q"] = row.q();
        o["instance"] = row.instance;
        o["family"] = row.family;
        o["card_a"] = row.card_a;
        o["card_b"] = row.card_b;
        o["card_p"] = row.card_p;
        o["card_r"] = row.card_r;
        o["observed"] = clean(row.observed);
        o["bound"] = clean(row.bound);
        o["constant"] = clean(row.constant);
        o["exact_pass"] = row.exact_pass;
        o["flags"] = row.flags;
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    auto sums = nlohmann::ordered_json::array();
    for (const ReportSummary& s : r.summaries) {
        nlohmann::ordered_json o;
        o["theorem"] = s.theorem_id;
        o["rows"] = s.rows;
        o["flagged"] = s.flagged;
        o["max_constant"] = clean(s.max_constant);
        o["min_constant"] = clean(s.min_constant);
        o["median_constant"] = clean(s.median_constant);
        o["all_exact_pass"] = s.all_exact_pass;
        sums.push_back(std::move(o));
    }
    j["summaries"] = std::move(sums);
    out << j.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, const Report& r) {
    out << "theorem,p,ell,d,q,instance,family,card_a,card_b,card_p,card_r,"
           "observed,bound,constant,exact_pass,flags\n";
    for (const ReportRow& row : r.rows) {
        out << csv_escape(row.theorem_id) << ',' << row.p << ',' << row.ell << ',' << row.d << ','
            << row.q() << ',' << row.instance << ',' << csv_escape(row.family) << ','
            << row.card_a << ',' << row.card_b << ',' << row.card_p << ',' << row.card_r << ','
            << fmt_double(row.observed) << ',' << fmt_double(row.bound) << ','
            << fmt_double(row.constant) << ',' << (row.exact_pass ? 1 : 0) << ','
            << csv_escape(row.flags) << '\n';
    }
}

std::string report_json_string(const Report& r) {
    std::ostringstream ss;
    write_report_json(ss, r);
    return ss.str();
}

}  // namespace ffgeom
