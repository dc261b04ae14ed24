#pragma once

// Subspaces of F_q^d in canonical RREF form, the Grassmannian G(d,m), dot-
// product orthogonal complements, and projections pi_W(E): the map sending x
// to its coset x + W^perp, with cosets keyed by their canonical (pivot-zeroed)
// representative. Affine flats and their containment incidences live here too.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ffgeom/vectors.hpp"

namespace ffgeom {

struct Subspace {
    int d = 0, m = 0;
    std::vector<uint8_t> rows;  // m x d, RREF, pivots strictly increasing

    int at(int i, int j) const { return rows[i * d + j]; }
    bool operator==(const Subspace& o) const { return d == o.d && m == o.m && rows == o.rows; }
    bool operator<(const Subspace& o) const { return rows < o.rows; }
};

// Canonical RREF of arbitrary spanning rows (zero rows dropped).
Subspace rref_span(const Field& F, int d, const std::vector<std::vector<int>>& spanning);

// Number of m-dim subspaces of F_q^d (Gaussian binomial), exact.
long long gaussian_binomial(int q, int d, int m);

// All m-dim subspaces, canonically ordered. Budgeted by gaussian_binomial.
std::vector<Subspace> enumerate_grassmannian(const Field& F, int d, int m);

namespace ref {
// Spans of all m-tuples of vectors, deduplicated; the oracle for small cases.
std::vector<Subspace> grassmannian_bruteforce(const Field& F, int d, int m);
}  // namespace ref

// Membership of a vector (by index) in the row space.
bool subspace_contains(const VecSpace& S, const Subspace& W, int64_t x);
// Row space of A inside row space of B.
bool subspace_within(const VecSpace& S, const Subspace& A, const Subspace& B);
// All q^m members of the row space, as indices.
PointSet span_set(const VecSpace& S, const Subspace& W);

// { x : x.w = 0 for all w in W }, canonical RREF; dim = d - m always
// (the dot form is nondegenerate), even when W meets its own complement.
Subspace orthogonal_complement(const Field& F, const Subspace& W);

// Canonical representative of x + rowspace(U): zero out U's pivot coordinates.
int64_t coset_reduce(const VecSpace& S, const Subspace& U, int64_t x);

// pi_W(E): the cosets of W^perp meeting E, as a set of canonical keys.
PointSet project(const PointSet& E, const Subspace& W);

struct ProjectionRow {
    int32_t w_index;
    int64_t proj_a, proj_b, inter;
};

// One row per W in G(d,m), in canonical order.
std::vector<ProjectionRow> projection_intersection_sweep(const PointSet& A, const PointSet& B, int m);

// CSV: w_index, basis (rows joined by '|', entries by ' '), |pi_W(A)|, |pi_W(B)|, intersection.
void save_projection_csv(std::ostream& out, const Field& F, int d, int m,
                         const std::vector<ProjectionRow>& rows);

// #{W in G(d,m) : |pi_W(E)| <= threshold} for each threshold, one sweep.
std::vector<int64_t> projection_count_below(const PointSet& E, int m,
                                            const std::vector<int64_t>& thresholds);

// ---- affine flats ----------------------------------------------------------

struct Flat {
    int32_t dir;    // index into the direction Grassmannian
    int64_t base;   // canonical representative (zero at the direction's pivots)
};

struct FlatFamily {
    int k = 0;
    std::vector<Subspace> directions;  // G(d,k), canonical order
    std::vector<Flat> flats;           // ordered by (dir, base)
};

FlatFamily all_flats(const VecSpace& S, int k);

// #{(K_i, H_j) : K_i is contained in H_j}.
int64_t flats_incidences(const VecSpace& S, const FlatFamily& K, const FlatFamily& H);

}  // namespace ffgeom
