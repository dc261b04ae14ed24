#pragma once

// Builders for the explicit extremal families: subspaces, isotropic lattices,
// progression-thickened slabs, and the plane construction over q = p^2 whose
// projections avoid each other on most lines. Every builder re-checks its own
// cardinality closed form and every sharpness claim is verified by the
// counting engines, never assumed.

#include <cstdint>
#include <string>
#include <vector>

#include "ffgeom/motions.hpp"
#include "ffgeom/projections.hpp"
#include "ffgeom/vectors.hpp"

namespace ffgeom {

// {0, 1, ..., len-1} as field elements. Step-1 progressions live in the
// prime subfield, so len <= p.
std::vector<int> ap_step1(const Field& F, int len);

// Outcome of the exhaustive search below. When no frame exists the whole
// tree has been visited, which is the infeasibility certificate.
struct IsotropicResult {
    bool feasible = false;
    std::vector<int64_t> vectors;   // lex-least frame, empty when infeasible
    int64_t nodes_visited = 0;
};

// Backtracking search for `count` linearly independent vectors of S with all
// pairwise and self dot products zero. Candidates are scanned in lex order
// on coordinates (first coordinate most significant) and frames are kept
// lex-increasing, so the result is canonical. count must be <= dim/2 (no
// larger totally isotropic frame can exist).
IsotropicResult mutually_isotropic_vectors(const VecSpace& S, int count);

// span(e_1..e_k) as a point set.
PointSet subspace_example(const VecSpace& S, int k);

struct SetPair {
    PointSet a, b;
};

// A = B = F_q v_1 + ... + F_q v_k + X e_d. Requires the v_i mutually
// isotropic, independent, orthogonal to e_d, and the sum direct
// (|A| = q^k |X|, checked by enumeration); ConstructionError otherwise.
SetPair isotropic_span_lattice(const VecSpace& S, const std::vector<int64_t>& vectors,
                               const std::vector<int>& x_prog);

// A = X v_1 + ... + X v_k, B = A + X e_d with k = (d-1)/2 and the frame
// found by the isotropic search in the hyperplane x_d = 0 (d odd). Then
// |A| = |X|^k and |B| = |X|^{k+1}; the point is that |A - gB| <= |X|^d for
// every g, which the incidence engine re-verifies in tests.
SetPair isotropic_box_pair(const VecSpace& S, const std::vector<int>& x_prog);

// A = F_q^k x {0}^k x X (so d = 2k+1 must be odd), B = g0^{-1} A. Since g0
// is orthogonal, A - g0 B = A - A, whose size is q^k |X - X|.
SetPair slab_progression_pair(const VecSpace& S, const Mat& g0, const std::vector<int>& x_prog);

// Plane construction over q = p^2. With t the quadratic generator,
//   A1 = the first num_cosets nonzero cosets of F_p  (a1 t + F_p, a1 >= 1),
//   A  = {(s y, y) : s in A1, y in F_p^*},   B = (-B') x {0},  B' inside F_p.
// Differences a - b with a in A, b in B all have slope in C = A1 + B' A2
// (A2 = F_p^*), so every line whose perp direction falls outside C separates
// the projections. good_lines holds those lines; the builder re-verifies
// emptiness on each by direct projection and throws ConstructionError if any
// check fails. |A| = num_cosets p (p-1) and |B| = |B'| exactly.
struct ProjectionSharpness {
    PointSet a, b;
    std::vector<Subspace> good_lines;  // canonical order
    std::vector<int> slopes;           // C, ascending field indices
    std::vector<int> a1;               // A1, ascending field indices
};

ProjectionSharpness projection_sharpness(const VecSpace& S, int num_cosets,
                                         const std::vector<int>& bprime);
// Default B' = F_p.
ProjectionSharpness projection_sharpness(const VecSpace& S, int num_cosets);

// ---- CLI-facing dispatch ----------------------------------------------------

enum class ConstructionKind {
    SubspaceExample,
    ApLattice,
    IsotropicLattice,
    SmallALargeB,
    ProjectionSharpness,
};

// Maps the CLI names {subspace_example, ap_lattice, isotropic_lattice,
// small_A_large_B, projection_sharpness}; ParseError on anything else.
ConstructionKind construction_kind_from_name(const std::string& name);
std::string construction_kind_name(ConstructionKind kind);

struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::SubspaceExample;
    int k = 1;           // SubspaceExample: span dimension
    int x_len = 2;       // progression length for the lattice kinds
    int num_cosets = 1;  // ProjectionSharpness
};

struct ConstructionResult {
    PointSet a, b;
    // ProjectionSharpness only:
    std::vector<Subspace> good_lines;
    std::vector<int> slopes;
};

// Validates the spec against the construction's hypotheses and dispatches.
// ApLattice rotates by the lex-least non-identity element of O(d,q).
ConstructionResult run_construction(const VecSpace& S, const ConstructionSpec& spec);

}  // namespace ffgeom
