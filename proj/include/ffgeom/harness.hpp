#pragma once

// Verification driver: the exact-identity suite (hard pass/fail), the catalog
// of inequality experiments with their validity ranges and bound expressions,
// deterministic seeded set generation, and implied-constant estimation over a
// (p, ell, d) grid.

#include <cstdint>
#include <string>
#include <vector>

#include "ffgeom/report.hpp"
#include "ffgeom/vectors.hpp"

namespace ffgeom {

struct Instance {
    int p = 3, ell = 1, d = 2;
    int64_t q() const;
};

// Deliberate-corruption hooks for negative-control runs: prove the suite can
// actually fail.
struct FaultInjection {
    bool sphere_closed_form_sign_flip = false;
};

struct IdentityConfig {
    std::vector<Instance> instances;  // empty -> empty passing report
    uint64_t seed = 1;
    int sets_per_instance = 4;
    FaultInjection fault;
};

// q in {3,5,7} at d=2 plus q=3 at d=3.
IdentityConfig default_identity_config();

// Runs every exact check (character orthogonality, Gauss branch values,
// Plancherel/inversion, sphere and equal-norm-variety spectra, the two
// quadruple-count identities, the incidence expansion, histogram sums,
// complement dimensions). A failing check makes its row exact_pass = false,
// with the offending parameters in `flags`, and fails the report.
Report run_identity_suite(const IdentityConfig& config);

// Exact: the constant is explicit and asserted (cross-multiplied integers).
// Estimated: the constant is unknown; the sweep reports observed/bound.
enum class Tier { Exact, Estimated };

struct TheoremEntry {
    const char* id;
    Tier tier;
    const char* statement;  // one-line description of the checked bound
    // "" = hypotheses hold; "EXPLORATORY" = open case, run but flag rows;
    // anything else = reason the instance is skipped (VALIDITY_RANGE).
    std::string (*applicability)(const Instance&);
};

const std::vector<TheoremEntry>& theorem_catalog();
// nullptr when unknown.
const TheoremEntry* find_theorem(const std::string& id);

struct SweepConfig {
    std::string theorem_id;
    std::vector<Instance> instances;
    int64_t trials = 20;
    uint64_t seed = 1;
    int m = 1;         // projection dimension for the projection family
    double eps = 0.1;  // growth exponent for the growth family
};

// ParseError on an unknown theorem id.
Report run_theorem_sweep(const SweepConfig& config);

struct ConstantEstimate {
    bool applicable = false;
    std::string reason;  // set when not applicable
    double max_constant = 0.0;
    // Max constant at the largest q exceeds 2x the max at the smallest q:
    // a likely misreading of the bound rather than a constant.
    bool growth_flag = false;
    std::vector<std::pair<int64_t, double>> per_q;  // (q, max constant)
};

// Estimated-tier theorems only; Exact-tier ids report not-applicable.
ConstantEstimate estimate_constant(const std::string& theorem_id,
                                   const std::vector<Instance>& grid, int64_t trials,
                                   uint64_t seed);

// Deterministic seeded generation, shared with the tests.
uint64_t splitmix64(uint64_t& state);
uint64_t sub_seed(uint64_t base, uint64_t a, uint64_t b, uint64_t c);
PointSet random_set_density(const VecSpace& S, double delta, uint64_t seed);
PointSet random_set_exact(const VecSpace& S, int64_t n, uint64_t seed);

}  // namespace ffgeom
