#include "ffgeom/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ffgeom/errors.hpp"

namespace ffgeom {

namespace {
constexpr double kPairLoopBudget = 4e9;

void check_pair_space(const PointSet& P, const VecSpace& half) {
    if (P.space().dim() != 2 * half.dim() || !(P.space().field() == half.field()))
        throw ShapeError("pair set does not match the half space");
}
}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

int64_t count_incidences(const PointSet& P, const MotionSet& R) {
    const VecSpace& S = R.space();
    check_pair_space(P, S);
    const int64_t half = S.size();
    auto members = P.members();

    // Motions are (g,z)-sorted: walk them in runs of equal g.
    std::vector<std::pair<size_t, size_t>> runs;
    for (size_t i = 0; i < R.items.size();) {
        size_t j = i;
        while (j < R.items.size() && R.items[j].g == R.items[i].g) ++j;
        runs.push_back({i, j});
        i = j;
    }

    std::vector<int64_t> per_run(runs.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (int64_t r = 0; r < (int64_t)runs.size(); ++r) {
        auto [lo, hi] = runs[r];
        const Mat& g = R.mat_of(R.items[lo]);
        // zhist[z] = #{(x,y) in P : x - g y = z}
        std::vector<int32_t> zhist(half, 0);
        for (int64_t xy : members) {
            int64_t x = xy % half, y = xy / half;
            zhist[S.sub(x, apply_mat(S, g, y))]++;
        }
        int64_t acc = 0;
        for (size_t i = lo; i < hi; ++i) acc += zhist[R.items[i].z];
        per_run[r] = acc;
    }
    int64_t total = 0;
    for (int64_t v : per_run) total += v;
    return total;
}

IncidenceExpansion incidence_fourier_expansion(const PointSet& P, const VecSpace& half,
                                               const MotionSet& R) {
    check_pair_space(P, half);
    const Field& F = half.field();
    const int64_t hs = half.size();
    Spectrum ph = dft(P);

    std::vector<std::pair<size_t, size_t>> runs;
    for (size_t i = 0; i < R.items.size();) {
        size_t j = i;
        while (j < R.items.size() && R.items[j].g == R.items[i].g) ++j;
        runs.push_back({i, j});
        i = j;
    }

    std::vector<cplx> per_run(runs.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
    for (int64_t r = 0; r < (int64_t)runs.size(); ++r) {
        auto [lo, hi] = runs[r];
        Mat gt = mat_transpose(R.mat_of(R.items[lo]));
        cplx acc = 0.0;
        for (int64_t m = 1; m < hs; ++m) {
            cplx zsum = 0.0;
            for (size_t i = lo; i < hi; ++i) zsum += F.chi(F.neg(half.dot(m, R.items[i].z)));
            int64_t gtm = apply_mat(half, gt, m);
            acc += ph.c[half.negate(m) + hs * gtm] * zsum;
        }
        per_run[r] = acc;
    }
    cplx err = 0.0;
    for (const cplx& v : per_run) err += v;
    err *= (double)hs;

    Rational main(P.card() * (long long)R.size(), hs);
    return IncidenceExpansion{main, err.real(), err.imag()};
}

std::vector<int64_t> intersection_histogram(const PointSet& A, const PointSet& B, const Mat& g) {
    const VecSpace& S = A.space();
    if (!(S == B.space())) throw ShapeError("sets live in different spaces");
    PointSet gB = apply_mat_set(g, B);
    auto gb = gB.members();
    std::vector<int64_t> hist(S.size(), 0);
#pragma omp parallel for
    for (int64_t z = 0; z < S.size(); ++z) {
        int64_t acc = 0;
        for (int64_t y : gb) acc += A.test(S.add(y, z));
        hist[z] = acc;
    }
    return hist;
}

PointSet sg_image(const PointSet& P, const VecSpace& half, const Mat& g) {
    check_pair_space(P, half);
    const int64_t hs = half.size();
    PointSet out(half);
    P.for_each([&](int64_t xy) {
        int64_t x = xy % hs, y = xy / hs;
        out.set(half.sub(x, apply_mat(half, g, y)));
    });
    return out;
}

PointSet difference_image(const PointSet& A, const PointSet& B, const Mat& g) {
    const VecSpace& S = A.space();
    if (!(S == B.space())) throw ShapeError("sets live in different spaces");
    PointSet gB = apply_mat_set(g, B);
    PointSet out(S);
    A.for_each([&](int64_t a) { gB.for_each([&](int64_t b) { out.set(S.sub(a, b)); }); });
    return out;
}

std::vector<int64_t> distance_counts(const PointSet& A) {
    const VecSpace& S = A.space();
    auto mem = A.members();
    const int q = S.field().q();
    std::vector<int64_t> nu(q, 0);
#pragma omp parallel
    {
        std::vector<int64_t> local(q, 0);
#pragma omp for nowait
        for (int64_t i = 0; i < (int64_t)mem.size(); ++i)
            for (int64_t y : mem) local[S.norm(S.sub(mem[i], y))]++;
#pragma omp critical
        for (int j = 0; j < q; ++j) nu[j] += local[j];
    }
    return nu;
}

int64_t count_quadruples(const PointSet& P, const VecSpace& half) {
    check_pair_space(P, half);
    auto mem = P.members();
    if ((double)mem.size() * (double)mem.size() > kPairLoopBudget)
        throw ResourceError("quadruple count exceeds pair-loop budget");
    const int64_t hs = half.size();
    int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (int64_t i = 0; i < (int64_t)mem.size(); ++i) {
        int64_t x = mem[i] % hs, y = mem[i] / hs;
        int64_t acc = 0;
        for (int64_t uv : mem) {
            int64_t u = uv % hs, v = uv / hs;
            acc += half.norm(half.sub(x, u)) == half.norm(half.sub(y, v));
        }
        total += acc;
    }
    return total;
}

int64_t count_quadruples_product(const PointSet& A, const PointSet& B) {
    auto na = distance_counts(A), nb = distance_counts(B);
    int64_t s = 0;
    for (size_t j = 0; j < na.size(); ++j) s += na[j] * nb[j];
    return s;
}

QuadrupleIdentityReport verify_quadruple_identities(const PointSet& A, const PointSet& B,
                                                    const VecSpace& pair_space) {
    const VecSpace& S = A.space();
    const int q = S.field().q();
    const int d = S.dim();
    PointSet P = product_set(pair_space, A, B);

    QuadrupleIdentityReport rep{};
    rep.n_exact = count_quadruples_product(A, B);

    const double cardP = (double)P.card();
    const double cardA = (double)A.card(), cardB = (double)B.card();

    double s_eq = equal_norm_product_sum(dft(A), dft(B), EqualNormVariant::All);
    rep.product_identity = cardP * cardP / q + std::pow((double)q, 3.0 * d) * s_eq -
                           std::pow((double)q, (double)d - 1) * cardA * cardB;

    PairNormSums ps = pair_norm_sums(dft(P), S);
    rep.general_identity = (1.0 / q + (q - 1.0) * std::pow((double)q, -(double)d - 1)) * cardP * cardP +
                           std::pow((double)q, 3.0 * d - 1) *
                               ((q - 1.0) * ps.equal_excl_origin - ps.unequal);

    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    rep.product_rel_err = rel(rep.product_identity, (double)rep.n_exact);
    rep.general_rel_err = rel(rep.general_identity, (double)rep.n_exact);
    rep.deviation_ratio =
        std::abs((double)rep.n_exact - cardP * cardP / q) / (std::pow((double)q, (double)d) * cardP);
    return rep;
}

ExceptionalSet exceptional_intersection(const PointSet& A, const PointSet& B,
                                        const std::vector<Mat>& group) {
    const VecSpace& S = A.space();
    const int64_t qd = S.size();
    const long long ab = A.card() * B.card();
    ExceptionalSet out;
    out.group_order = (int64_t)group.size();
    if ((double)ab < std::pow((double)S.field().q(), (double)S.dim() + 1))
        out.flags.push_back("hypothesis:|A||B|<q^{d+1}");
    std::vector<char> bad(group.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (int64_t gi = 0; gi < (int64_t)group.size(); ++gi) {
        auto hist = intersection_histogram(A, B, group[gi]);
        int64_t good = 0;
        for (int64_t z = 0; z < qd; ++z) {
            long long v = 2 * qd * hist[z];
            good += (v >= ab) && (v <= 3 * ab);
        }
        bad[gi] = (2 * good < qd);
    }
    for (size_t gi = 0; gi < group.size(); ++gi)
        if (bad[gi]) out.members.push_back((int32_t)gi);
    return out;
}

ExceptionalSet exceptional_image(const PointSet& P, const VecSpace& half,
                                 const std::vector<Mat>& group) {
    ExceptionalSet out;
    out.group_order = (int64_t)group.size();
    std::vector<char> bad(group.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (int64_t gi = 0; gi < (int64_t)group.size(); ++gi)
        bad[gi] = (2 * sg_image(P, half, group[gi]).card() < half.size());
    for (size_t gi = 0; gi < group.size(); ++gi)
        if (bad[gi]) out.members.push_back((int32_t)gi);
    return out;
}

ExceptionalSet exceptional_growth(const PointSet& A, const PointSet& B, double eps,
                                  const std::vector<Mat>& group) {
    const VecSpace& S = A.space();
    ExceptionalSet out;
    out.group_order = (int64_t)group.size();
    const double lambda = std::pow((double)B.card(), 1.0 + eps);
    if (!(lambda < (double)S.size() / 2)) out.flags.push_back("hypothesis:|B|^{1+eps}>=q^d/2");
    std::vector<char> bad(group.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (int64_t gi = 0; gi < (int64_t)group.size(); ++gi)
        bad[gi] = ((double)difference_image(A, B, group[gi]).card() <= lambda);
    for (size_t gi = 0; gi < group.size(); ++gi)
        if (bad[gi]) out.members.push_back((int32_t)gi);
    return out;
}

namespace ref {

int64_t count_incidences(const PointSet& P, const MotionSet& R) {
    const VecSpace& S = R.space();
    const int64_t half = S.size();
    auto members = P.members();
    int64_t total = 0;
    for (const Motion& mo : R.items) {
        const Mat& g = R.mat_of(mo);
        for (int64_t xy : members) {
            int64_t x = xy % half, y = xy / half;
            total += motion_apply(S, g, mo.z, y) == x;
        }
    }
    return total;
}

std::vector<int64_t> intersection_histogram(const PointSet& A, const PointSet& B, const Mat& g) {
    const VecSpace& S = A.space();
    PointSet gB = apply_mat_set(g, B);
    std::vector<int64_t> hist(S.size(), 0);
    for (int64_t z = 0; z < S.size(); ++z) {
        int64_t acc = 0;
        for (int64_t x = 0; x < S.size(); ++x) acc += A.test(x) && gB.test(S.sub(x, z));
        hist[z] = acc;
    }
    return hist;
}

int64_t count_quadruples_product(const PointSet& A, const PointSet& B) {
    const VecSpace& S = A.space();
    auto ma = A.members(), mb = B.members();
    double cost = (double)ma.size() * ma.size() * mb.size() * mb.size();
    if (cost > 2e8) throw ResourceError("oracle quadruple loop budget exceeded");
    int64_t total = 0;
    for (int64_t x : ma)
        for (int64_t u : ma)
            for (int64_t y : mb)
                for (int64_t v : mb)
                    total += S.norm(S.sub(x, u)) == S.norm(S.sub(y, v));
    return total;
}

}  // namespace ref

}  // namespace ffgeom
