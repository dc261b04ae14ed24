#pragma once

// Counting engine for rigid-motion incidences I(P,R) = #{(x,y,g,z) : x = gy+z},
// per-translate intersection histograms |A n (gB + z)|, and the distance
// quadruple count N(P) = #{(x,y),(u,v) in P^2 : |x-u| = |y-v|}, together with
// their spectral identities and the exceptional-set experiments built on them.

#include <cstdint>
#include <string>
#include <vector>

#include "ffgeom/motions.hpp"
#include "ffgeom/spectrum.hpp"
#include "ffgeom/vectors.hpp"

namespace ffgeom {

// Exact rationals with power-of-q denominators (main terms and windows).
struct Rational {
    long long num = 0, den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    static Rational integer(long long n) { return Rational(n, 1); }
    double value() const { return (double)num / (double)den; }
    Rational operator-(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// ---- incidences -----------------------------------------------------------

// P lives in the pair space F_q^{2d}; cost O(|R_g| + q^d) per distinct matrix.
int64_t count_incidences(const PointSet& P, const MotionSet& R);

struct IncidenceExpansion {
    Rational main;       // |P||R| / q^d, exact
    double error;        // q^d sum_{m!=0} sum_{(g,z)} Phat(-m, g^T m) chi(-m.z), real part
    double error_imag;   // imaginary part (should vanish)
    double total() const { return main.value() + error; }
};

// Spectral expansion of I(P,R); `half` is the d-dimensional space.
IncidenceExpansion incidence_fourier_expansion(const PointSet& P, const VecSpace& half,
                                               const MotionSet& R);

// hist[z] = |A n (gB + z)| for every translation z.
std::vector<int64_t> intersection_histogram(const PointSet& A, const PointSet& B, const Mat& g);

// S_g(P) = { x - g y : (x,y) in P }, a subset of F_q^d.
PointSet sg_image(const PointSet& P, const VecSpace& half, const Mat& g);

// A - gB for product-structured input.
PointSet difference_image(const PointSet& A, const PointSet& B, const Mat& g);

// ---- distance quadruples ---------------------------------------------------

// nu_A(j) = #{(x,y) in A^2 : |x-y| = j}.
std::vector<int64_t> distance_counts(const PointSet& A);

// N(P) over an arbitrary P in the pair space; O(|P|^2), budgeted.
int64_t count_quadruples(const PointSet& P, const VecSpace& half);
// N(A x B) = sum_j nu_A(j) nu_B(j).
int64_t count_quadruples_product(const PointSet& A, const PointSet& B);

struct QuadrupleIdentityReport {
    long long n_exact;          // counted
    double product_identity;    // |P|^2/q + q^{3d} S_eq - q^{d-1}|A||B|   (product inputs)
    double general_identity;    // (1/q + (q-1)/q^{d+1})|P|^2 + q^{3d-1}((q-1) S_eq' - S_neq)
    double product_rel_err;
    double general_rel_err;
    double deviation_ratio;     // |N - |P|^2/q| / (q^d |P|)
};

QuadrupleIdentityReport verify_quadruple_identities(const PointSet& A, const PointSet& B,
                                                    const VecSpace& pair_space);

// ---- exceptional sets ------------------------------------------------------

struct ExceptionalSet {
    std::vector<int32_t> members;       // indices into the canonical group order
    int64_t group_order;
    std::vector<std::string> flags;     // e.g. hypothesis violations
    int64_t size() const { return (int64_t)members.size(); }
};

// g is exceptional when fewer than q^d/2 translates z satisfy
// |A n (gB+z)| in [|A||B|/(2 q^d), 3|A||B|/(2 q^d)]  (exact rational window).
ExceptionalSet exceptional_intersection(const PointSet& A, const PointSet& B,
                                        const std::vector<Mat>& group);

// g is exceptional when |S_g(P)| < q^d / 2.
ExceptionalSet exceptional_image(const PointSet& P, const VecSpace& half,
                                 const std::vector<Mat>& group);

// g is exceptional when |A - gB| <= |B|^{1+eps}; flags when |B|^{1+eps} >= q^d/2.
ExceptionalSet exceptional_growth(const PointSet& A, const PointSet& B, double eps,
                                  const std::vector<Mat>& group);

namespace ref {
// Quadruple loop over P x R; the oracle for count_incidences.
int64_t count_incidences(const PointSet& P, const MotionSet& R);
// Dense double loop over (z, x); the oracle for intersection_histogram.
std::vector<int64_t> intersection_histogram(const PointSet& A, const PointSet& B, const Mat& g);
// Pair loop; the oracle for the product-set quadruple count.
int64_t count_quadruples_product(const PointSet& A, const PointSet& B);
}  // namespace ref

}  // namespace ffgeom
