#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "ffgeom/errors.hpp"
#include "ffgeom/field.hpp"
#include "ffgeom/harness.hpp"
#include "ffgeom/report.hpp"
#include "ffgeom/vectors.hpp"

using namespace ffgeom;

TEST_CASE("splitmix64 matches its published reference stream") {
    uint64_t s = 0;
    CHECK(splitmix64(s) == 0xE220A8397B1DCDAFull);
    uint64_t t = 0;
    splitmix64(t);
    CHECK(splitmix64(t) != 0xE220A8397B1DCDAFull);  // stream advances
}

TEST_CASE("sub_seed is deterministic and separates its arguments") {
    CHECK(sub_seed(1, 2, 3, 4) == sub_seed(1, 2, 3, 4));
    std::set<uint64_t> seen;
    for (uint64_t a = 0; a < 4; ++a)
        for (uint64_t b = 0; b < 4; ++b)
            for (uint64_t c = 0; c < 4; ++c) seen.insert(sub_seed(99, a, b, c));
    CHECK(seen.size() == 64);  // no collisions on a small cube
}

TEST_CASE("seeded set generators are reproducible and honor their contracts") {
    Field F(5, 1);
    VecSpace S(F, 2);
    PointSet a = random_set_exact(S, 7, 42);
    CHECK(a.card() == 7);
    CHECK(a == random_set_exact(S, 7, 42));
    CHECK(!(a == random_set_exact(S, 7, 43)));
    CHECK(random_set_exact(S, 0, 1).card() == 0);
    CHECK(random_set_exact(S, 25, 1).card() == 25);
    CHECK_THROWS_AS(random_set_exact(S, -1, 1), DomainError);
    CHECK_THROWS_AS(random_set_exact(S, 26, 1), DomainError);
    PointSet d1 = random_set_density(S, 0.4, 7);
    CHECK(d1 == random_set_density(S, 0.4, 7));
    CHECK(d1.card() >= 0);
    CHECK(d1.card() <= 25);
}

TEST_CASE("the catalog lists thirty distinct experiments with statements") {
    const auto& cat = theorem_catalog();
    CHECK(cat.size() == 30);
    std::set<std::string> ids;
    for (const auto& e : cat) {
        ids.insert(e.id);
        CHECK(std::string(e.statement).size() > 0);
        CHECK(e.applicability != nullptr);
    }
    CHECK(ids.size() == 30);
    const TheoremEntry* og = find_theorem("og");
    REQUIRE(og != nullptr);
    CHECK(og->tier == Tier::Estimated);
    const TheoremEntry* pg = find_theorem("plan-ge");
    REQUIRE(pg != nullptr);
    CHECK(pg->tier == Tier::Exact);
    CHECK(find_theorem("nope") == nullptr);
}

TEST_CASE("the identity suite passes on the default grid") {
    Report r = run_identity_suite(default_identity_config());
    CHECK(r.passed);
    CHECK(!r.rows.empty());
    for (const auto& row : r.rows) CHECK(row.exact_pass);
    CHECK(r.command == "verify");
    // Summaries exist for each distinct theorem id.
    CHECK(!r.summaries.empty());
    for (const auto& s : r.summaries) CHECK(s.all_exact_pass);
}

TEST_CASE("the negative control actually fails the suite") {
    IdentityConfig cfg = default_identity_config();
    cfg.fault.sphere_closed_form_sign_flip = true;
    Report r = run_identity_suite(cfg);
    CHECK(!r.passed);
    bool found = false;
    for (const auto& row : r.rows)
        if (!row.exact_pass && row.theorem_id == "large-fourier") found = true;
    CHECK(found);
}

TEST_CASE("every catalog id sweeps without throwing on a small grid") {
    for (const auto& e : theorem_catalog()) {
        SweepConfig cfg;
        cfg.theorem_id = e.id;
        cfg.instances = {{3, 1, 2}, {3, 1, 3}};
        cfg.trials = 2;
        cfg.seed = 7;
        Report r = run_theorem_sweep(cfg);
        CHECK(r.command == "sweep");
        CHECK(!r.rows.empty());
        for (const auto& row : r.rows) CHECK(row.theorem_id == e.id);
        if (e.tier == Tier::Exact) CHECK(r.passed);
    }
}

TEST_CASE("identical sweeps serialize byte-identically") {
    SweepConfig cfg;
    cfg.theorem_id = "quadruple";
    cfg.instances = {{3, 1, 2}, {5, 1, 2}};
    cfg.trials = 3;
    cfg.seed = 2024;
    Report r1 = run_theorem_sweep(cfg);
    Report r2 = run_theorem_sweep(cfg);
    CHECK(report_json_string(r1) == report_json_string(r2));
    SweepConfig other = cfg;
    other.seed = 2025;
    Report r3 = run_theorem_sweep(other);
    CHECK(report_json_string(r1) != report_json_string(r3));
    // The schema marker leads the document.
    CHECK(report_json_string(r1).find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("constant estimation works on estimated ids and refuses exact ones") {
    ConstantEstimate proj = estimate_constant("proj", {{3, 1, 2}}, 2, 1);
    CHECK(!proj.applicable);
    CHECK(proj.reason.find("explicit constant") != std::string::npos);

    ConstantEstimate quad = estimate_constant("quadruple", {{3, 1, 2}, {5, 1, 2}}, 4, 1);
    CHECK(quad.applicable);
    CHECK(std::isfinite(quad.max_constant));
    CHECK(quad.max_constant > 0.0);
    CHECK(quad.per_q.size() == 2);
    CHECK(quad.per_q[0].first == 3);
    CHECK(quad.per_q[1].first == 5);

    ConstantEstimate empty = estimate_constant("quadruple", {}, 4, 1);
    CHECK(!empty.applicable);
    CHECK(empty.reason.find("empty grid") != std::string::npos);

    CHECK_THROWS_AS(estimate_constant("nope", {{3, 1, 2}}, 2, 1), ParseError);
    SweepConfig bad;
    bad.theorem_id = "nope";
    bad.instances = {{3, 1, 2}};
    CHECK_THROWS_AS(run_theorem_sweep(bad), ParseError);
}

TEST_CASE("report rows sort canonically and summaries aggregate flags") {
    SweepConfig cfg;
    cfg.theorem_id = "og";
    cfg.instances = {{5, 1, 2}, {3, 1, 2}};  // deliberately unsorted
    cfg.trials = 4;
    cfg.seed = 11;
    Report r = run_theorem_sweep(cfg);
    CHECK(std::is_sorted(r.rows.begin(), r.rows.end(), [](const ReportRow& a, const ReportRow& b) {
        if (a.theorem_id != b.theorem_id) return a.theorem_id < b.theorem_id;
        if (a.q() != b.q()) return a.q() < b.q();
        if (a.d != b.d) return a.d < b.d;
        return a.instance < b.instance;
    }));
    REQUIRE(r.summaries.size() == 1);
    const ReportSummary& s = r.summaries[0];
    CHECK(s.theorem_id == "og");
    CHECK(s.rows == (int64_t)r.rows.size());
    CHECK(s.max_constant >= s.median_constant);
    CHECK(s.median_constant >= s.min_constant);
}
