#include "ffgeom/spectrum.hpp"

#include "ffgeom/errors.hpp"

namespace ffgeom {

namespace {

// One axis pass of the factorized transform with kernel K[m][x].
void axis_pass(std::vector<cplx>& buf, int q, int64_t stride, const std::vector<cplx>& kernel) {
    const int64_t size = (int64_t)buf.size();
    const int64_t lines = size / q;
#pragma omp parallel
    {
        std::vector<cplx> in(q), out(q);
#pragma omp for
        for (int64_t l = 0; l < lines; ++l) {
            const int64_t inner = l % stride, outer = l / stride;
            const int64_t base = outer * stride * q + inner;
            for (int x = 0; x < q; ++x) in[x] = buf[base + x * stride];
            for (int m = 0; m < q; ++m) {
                cplx acc = 0.0;
                const cplx* krow = kernel.data() + (size_t)m * q;
                for (int x = 0; x < q; ++x) acc += krow[x] * in[x];
                out[m] = acc;
            }
            for (int m = 0; m < q; ++m) buf[base + m * stride] = out[m];
        }
    }
}

std::vector<cplx> forward_kernel(const Field& F) {
    int q = F.q();
    std::vector<cplx> k((size_t)q * q);
    for (int m = 0; m < q; ++m)
        for (int x = 0; x < q; ++x) k[(size_t)m * q + x] = F.chi(F.neg(F.mul(m, x)));
    return k;
}

std::vector<cplx> inverse_kernel(const Field& F) {
    int q = F.q();
    std::vector<cplx> k((size_t)q * q);
    for (int m = 0; m < q; ++m)
        for (int x = 0; x < q; ++x) k[(size_t)m * q + x] = F.chi(F.mul(m, x));
    return k;
}

}  // namespace

Spectrum dft(const VecSpace& S, const std::vector<double>& f) {
    if ((int64_t)f.size() != S.size()) throw ShapeError("input length does not match the space");
    const Field& F = S.field();
    std::vector<cplx> buf(f.begin(), f.end());
    auto kernel = forward_kernel(F);
    int64_t stride = 1;
    for (int axis = 0; axis < S.dim(); ++axis) {
        axis_pass(buf, F.q(), stride, kernel);
        stride *= F.q();
    }
    const double scale = 1.0 / (double)S.size();
    for (auto& v : buf) v *= scale;
    return Spectrum{&S, std::move(buf)};
}

Spectrum dft(const PointSet& A) {
    const VecSpace& S = A.space();
    std::vector<double> f(S.size(), 0.0);
    A.for_each([&](int64_t x) { f[x] = 1.0; });
    return dft(S, f);
}

std::vector<cplx> inverse_dft(const Spectrum& sp) {
    const VecSpace& S = sp.space();
    const Field& F = S.field();
    std::vector<cplx> buf = sp.c;
    auto kernel = inverse_kernel(F);
    int64_t stride = 1;
    for (int axis = 0; axis < S.dim(); ++axis) {
        axis_pass(buf, F.q(), stride, kernel);
        stride *= F.q();
    }
    return buf;
}

namespace ref {

cplx dft_at(const VecSpace& S, const std::vector<double>& f, int64_t m) {
    const Field& F = S.field();
    cplx s = 0.0;
    for (int64_t x = 0; x < S.size(); ++x)
        if (f[x] != 0.0) s += f[x] * F.chi(F.neg(S.dot(m, x)));
    return s / (double)S.size();
}

cplx dft_at(const PointSet& A, int64_t m) {
    const VecSpace& S = A.space();
    const Field& F = S.field();
    cplx s = 0.0;
    A.for_each([&](int64_t x) { s += F.chi(F.neg(S.dot(m, x))); });
    return s / (double)S.size();
}

}  // namespace ref

double spectrum_energy(const Spectrum& sp) {
    double s = 0.0;
    for (const cplx& v : sp.c) s += std::norm(v);
    return s;
}

cplx sphere_fourier_closed(const VecSpace& S, int j, int64_t m) {
    const Field& F = S.field();
    const int q = F.q();
    if (j < 0 || j >= q) throw DomainError("radius must be a field element");
    const int d = S.dim();
    const int nm = S.norm(m);
    const int four = F.from_int(4);
    cplx g = F.gauss_sum(1);
    cplx gd = 1.0;
    for (int i = 0; i < d; ++i) gd *= g;
    const int eta_m1_d = (d % 2 == 0) ? 1 : F.eta(F.neg(1));
    cplx s = 0.0;
    for (int r = 1; r < q; ++r) {
        int arg = F.add(F.mul(j, r), F.mul(nm, F.inv(F.mul(four, r))));
        double e = (d % 2 == 0) ? 1.0 : (double)F.eta(r);
        s += e * F.chi(arg);
    }
    double qd1 = std::pow((double)q, -(double)(d + 1));
    cplx out = (double)eta_m1_d * gd * s * qd1;
    if (m == 0) out += 1.0 / q;
    return out;
}

cplx sphere_pair_sum_closed(const VecSpace& S, int64_t m, int64_t m2) {
    const int q = S.field().q();
    const int d = S.dim();
    double main = (m == 0 && m2 == 0) ? 1.0 / q : 0.0;
    double tail = (S.norm(m) == S.norm(m2)) ? (double)(q - 1) : -1.0;
    return main + tail * std::pow((double)q, -(double)(d + 1));
}

cplx sphere_pair_sum_direct(const std::vector<Spectrum>& sphere_spectra, int64_t m, int64_t m2) {
    cplx s = 0.0;
    for (const Spectrum& sp : sphere_spectra) s += sp.at(m) * std::conj(sp.at(m2));
    return s;
}

std::vector<Spectrum> all_sphere_spectra(const VecSpace& S) {
    std::vector<Spectrum> out;
    out.reserve(S.field().q());
    for (int j = 0; j < S.field().q(); ++j) out.push_back(dft(sphere(S, j)));
    return out;
}

PointSet variety_set(const VecSpace& pair_space, const VecSpace& half_space) {
    if (pair_space.dim() != 2 * half_space.dim() || !(pair_space.field() == half_space.field()))
        throw ShapeError("pair space must double the half space");
    const int64_t half = half_space.size();
    PointSet V(pair_space);
    for (int64_t y = 0; y < half; ++y) {
        int ny = half_space.norm(y);
        for (int64_t x = 0; x < half; ++x)
            if (half_space.norm(x) == ny) V.set(x + half * y);
    }
    return V;
}

double variety_fourier_closed(const VecSpace& half_space, int64_t m, int64_t m2) {
    const int q = half_space.field().q();
    const int d = half_space.dim();
    if (m == 0 && m2 == 0) return 1.0 / q + (q - 1.0) * std::pow((double)q, -(double)(d + 1));
    if (half_space.norm(m) == half_space.norm(m2)) return (q - 1.0) * std::pow((double)q, -(double)(d + 1));
    return -std::pow((double)q, -(double)(d + 1));
}

NormClassSums norm_class_sums(const Spectrum& sp) {
    const VecSpace& S = sp.space();
    const int q = S.field().q();
    NormClassSums out;
    out.t.assign(q, 0.0);
    out.origin = std::norm(sp.c[0]);
    // Per-radius scans: deterministic for any thread count.
#pragma omp parallel for
    for (int j = 0; j < q; ++j) {
        double acc = 0.0;
        for (int64_t mm = 0; mm < S.size(); ++mm)
            if (S.norm(mm) == j) acc += std::norm(sp.c[mm]);
        out.t[j] = acc;
    }
    return out;
}

double equal_norm_product_sum(const Spectrum& A, const Spectrum& B, EqualNormVariant v) {
    if (!(A.space() == B.space())) throw ShapeError("spectra live in different spaces");
    NormClassSums a = norm_class_sums(A), b = norm_class_sums(B);
    const int q = A.space().field().q();
    double s = 0.0;
    switch (v) {
        case EqualNormVariant::All:
            for (int j = 0; j < q; ++j) s += a.t[j] * b.t[j];
            break;
        case EqualNormVariant::ExcludeZeroPair:
            for (int j = 0; j < q; ++j) s += a.t[j] * b.t[j];
            s -= a.origin * b.origin;
            break;
        case EqualNormVariant::ExcludeZeroEach:
            for (int j = 0; j < q; ++j) {
                double ta = (j == 0) ? a.t[j] - a.origin : a.t[j];
                double tb = (j == 0) ? b.t[j] - b.origin : b.t[j];
                s += ta * tb;
            }
            break;
    }
    return s;
}

PairNormSums pair_norm_sums(const Spectrum& P, const VecSpace& half_space) {
    const VecSpace& S = P.space();
    if (S.dim() != 2 * half_space.dim() || !(S.field() == half_space.field()))
        throw ShapeError("spectrum is not over the matching pair space");
    const int64_t half = half_space.size();
    const int q = S.field().q();
    // Accumulate per (|m|,|m'|) class in parallel over the first radius.
    std::vector<double> cls((size_t)q * q, 0.0);
#pragma omp parallel for
    for (int j = 0; j < q; ++j) {
        std::vector<double> row(q, 0.0);
        for (int64_t m2 = 0; m2 < half; ++m2) {
            if (half_space.norm(m2) != j) continue;
            for (int64_t m = 0; m < half; ++m)
                row[half_space.norm(m)] += std::norm(P.c[m + half * m2]);
        }
        for (int i = 0; i < q; ++i) cls[(size_t)j * q + i] = row[i];
    }
    PairNormSums out{0.0, 0.0, 0.0, std::norm(P.c[0])};
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < q; ++i) {
            if (i == j)
                out.equal_all += cls[(size_t)j * q + i];
            else
                out.unequal += cls[(size_t)j * q + i];
        }
    out.equal_excl_origin = out.equal_all - out.origin;
    return out;
}

std::pair<double, double> restriction_maxima(const Spectrum& sp) {
    NormClassSums s = norm_class_sums(sp);
    double m_star = 0.0, m_all = 0.0;
    for (int j = 0; j < (int)s.t.size(); ++j) {
        m_all = std::max(m_all, s.t[j]);
        if (j != 0) m_star = std::max(m_star, s.t[j]);
    }
    return {m_star, m_all};
}

}  // namespace ffgeom
