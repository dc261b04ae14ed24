#pragma once

// Fourier analysis on F_q^n with the normalization
//   fhat(m) = q^{-n} sum_x chi(-m.x) f(x),
// its inverse f(x) = sum_m chi(m.x) fhat(m), and the closed forms for the
// sphere and the equal-norm variety spectra. Per-radius aggregates of |fhat|^2
// are the workhorse for the distance/incidence identities.

#include <complex>
#include <vector>

#include "ffgeom/vectors.hpp"

namespace ffgeom {

struct Spectrum {
    const VecSpace* S = nullptr;
    std::vector<cplx> c;  // q^n coefficients, indexed like the space

    const VecSpace& space() const { return *S; }
    cplx at(int64_t m) const { return c[m]; }
};

// Dimension-factorized transform, O(n q^{n+1}) scalar kernel applications.
Spectrum dft(const VecSpace& S, const std::vector<double>& f);
Spectrum dft(const PointSet& A);
// Full inverse (no normalization beyond the definition above).
std::vector<cplx> inverse_dft(const Spectrum& sp);

namespace ref {
// Naive O(q^n) single-coefficient sum; the oracle the fast path is tested against.
cplx dft_at(const PointSet& A, int64_t m);
cplx dft_at(const VecSpace& S, const std::vector<double>& f, int64_t m);
}  // namespace ref

// Plancherel: sum_m |fhat(m)|^2 (= q^{-n} sum_x |f(x)|^2 when exact).
double spectrum_energy(const Spectrum& sp);

// Closed form for the sphere spectrum on F_q^d:
//   Shat_j(m) = q^{-1} delta_0(m)
//             + q^{-d-1} eta^d(-1) G^d sum_{r != 0} eta^d(r) chi(j r + |m|/(4r)).
cplx sphere_fourier_closed(const VecSpace& S, int j, int64_t m);

// sum_j Shat_j(m) conj(Shat_j(m')) in closed form:
//   delta_0(m) delta_0(m')/q + q^{-d-1} (q - 1 if |m| = |m'|, else -1).
cplx sphere_pair_sum_closed(const VecSpace& S, int64_t m, int64_t m2);
// Same quantity summed from explicit sphere spectra.
cplx sphere_pair_sum_direct(const std::vector<Spectrum>& sphere_spectra, int64_t m, int64_t m2);
std::vector<Spectrum> all_sphere_spectra(const VecSpace& S);

// Indicator of {(x,y) : |x| = |y|} inside the pair space.
PointSet variety_set(const VecSpace& pair_space, const VecSpace& half_space);

// Closed form for its spectrum at (m, m'), three cases by (m,m') and norms.
double variety_fourier_closed(const VecSpace& half_space, int64_t m, int64_t m2);

// T(j) = sum_{|m| = j} |fhat(m)|^2 for a spectrum over F_q^d.
struct NormClassSums {
    std::vector<double> t;   // indexed by the radius j in [0,q)
    double origin;           // |fhat(0)|^2 (part of t[0])
};
NormClassSums norm_class_sums(const Spectrum& sp);

enum class EqualNormVariant { All, ExcludeZeroPair, ExcludeZeroEach };

// sum_{|m| = |m'|} |Ahat(m)|^2 |Bhat(m')|^2 via per-radius aggregates.
double equal_norm_product_sum(const Spectrum& A, const Spectrum& B, EqualNormVariant v);

// For a spectrum over a pair space F_q^{2d}: sums of |Phat(m,m')|^2 split by
// whether |m| = |m'|, with the (0,0) coefficient reported separately.
struct PairNormSums {
    double equal_all;           // |m| = |m'| including (0,0)
    double equal_excl_origin;   // |m| = |m'|, (m,m') != (0,0)
    double unequal;             // |m| != |m'|
    double origin;              // |Phat(0,0)|^2
};
PairNormSums pair_norm_sums(const Spectrum& P, const VecSpace& half_space);

// (max_{j != 0} T(j), max_j T(j)).
std::pair<double, double> restriction_maxima(const Spectrum& sp);

}  // namespace ffgeom
