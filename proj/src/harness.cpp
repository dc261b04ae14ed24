#include "ffgeom/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "ffgeom/constructions.hpp"
#include "ffgeom/errors.hpp"
#include "ffgeom/field.hpp"
#include "ffgeom/incidence.hpp"
#include "ffgeom/motions.hpp"
#include "ffgeom/projections.hpp"
#include "ffgeom/spectrum.hpp"

namespace ffgeom {

int64_t Instance::q() const {
    int64_t v = 1;
    for (int i = 0; i < ell; ++i) v *= p;
    return v;
}

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t sub_seed(uint64_t base, uint64_t a, uint64_t b, uint64_t c) {
    uint64_t s = base;
    s ^= (a + 1) * 0x9E3779B97F4A7C15ULL;
    s ^= (b + 1) * 0xC2B2AE3D27D4EB4FULL;
    s ^= (c + 1) * 0x165667B19E3779F9ULL;
    return splitmix64(s);
}

PointSet random_set_density(const VecSpace& S, double delta, uint64_t seed) {
    PointSet A(S);
    uint64_t st = seed;
    for (int64_t i = 0; i < S.size(); ++i)
        if ((double)(splitmix64(st) >> 11) * 0x1.0p-53 < delta) A.set(i);
    return A;
}

PointSet random_set_exact(const VecSpace& S, int64_t n, uint64_t seed) {
    if (n < 0 || n > S.size()) throw DomainError("random_set_exact: size out of range");
    PointSet A(S);
    uint64_t st = seed;
    int64_t got = 0;
    while (got < n) {
        int64_t idx = (int64_t)(splitmix64(st) % (uint64_t)S.size());
        if (!A.test(idx)) {
            A.set(idx);
            ++got;
        }
    }
    return A;
}

namespace {

long long ipow(long long b, int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) v *= b;
    return v;
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// ---- seeded set generation --------------------------------------------------

struct Window {
    int64_t lo = 1, hi = 0;
    bool empty() const { return lo > hi || hi < 1; }
};

Window clampw(int64_t lo, int64_t hi, int64_t universe) {
    Window w;
    w.lo = std::max<int64_t>(1, lo);
    w.hi = std::min(hi, universe);
    return w;
}

int64_t fpow_floor(double base, double e) {
    return (int64_t)std::floor(std::pow(base, e) + 1e-9);
}
int64_t fpow_ceil(double base, double e) {
    return (int64_t)std::ceil(std::pow(base, e) - 1e-9);
}

PointSet adjust_to_size(const VecSpace& S, PointSet core, int64_t n, uint64_t seed) {
    int64_t have = core.card();
    if (have > n) {
        std::vector<int64_t> mem = core.members();  // ascending
        PointSet out(S);
        for (int64_t i = 0; i < n; ++i) out.set(mem[i]);
        return out;
    }
    uint64_t st = seed;
    while (have < n) {
        int64_t idx = (int64_t)(splitmix64(st) % (uint64_t)S.size());
        if (!core.test(idx)) {
            core.set(idx);
            ++have;
        }
    }
    return core;
}

PointSet box_core(const VecSpace& S, int64_t n) {
    int d = S.dim(), q = S.field().q();
    int c = 1;
    while (ipow(c, d) < n && c < q) ++c;
    PointSet out(S);
    std::vector<int> coords(d, 0);
    for (;;) {
        out.set(S.encode(coords.data()));
        int i = 0;
        while (i < d && ++coords[i] == c) coords[i++] = 0;
        if (i == d) break;
    }
    return out;
}

PointSet sphere_core(const VecSpace& S, int64_t n) {
    int q = S.field().q();
    PointSet out(S);
    for (int j = 1; j < q && out.card() < n; ++j) out = out | sphere(S, j);
    if (out.card() < n) out = out | sphere(S, 0);
    return out;
}

PointSet subspace_core(const VecSpace& S, int64_t n) {
    int q = S.field().q(), d = S.dim();
    int k = 0;
    while (k < d && ipow(q, k + 1) <= std::max<int64_t>(n, 1)) ++k;
    return subspace_example(S, k);
}

// A set of exactly n points drawn from [w.lo, w.hi]: mostly uniform random,
// sometimes a trimmed/padded structured family (subspace, sphere shell, box).
PointSet gen_in_window(const VecSpace& S, Window w, uint64_t seed, std::string* family) {
    uint64_t st = seed;
    int64_t n = w.lo + (int64_t)(splitmix64(st) % (uint64_t)(w.hi - w.lo + 1));
    uint64_t mode = splitmix64(st) % 8;
    uint64_t pad_seed = splitmix64(st);
    switch (mode) {
        case 4:
            *family = "subspace";
            return adjust_to_size(S, subspace_core(S, n), n, pad_seed);
        case 5:
            *family = "sphere";
            return adjust_to_size(S, sphere_core(S, n), n, pad_seed);
        case 6:
            *family = "box";
            return adjust_to_size(S, box_core(S, n), n, pad_seed);
        default:
            *family = "random";
            return random_set_exact(S, n, pad_seed);
    }
}

// ---- identity suite ---------------------------------------------------------

struct SuiteCtx {
    Instance inst;
    const IdentityConfig* cfg;
    Report* rep;
    Field F;
    VecSpace S;
    int64_t index = 0;
    std::shared_ptr<const std::vector<Mat>> group;
    std::unique_ptr<VecSpace> pair;
    std::unique_ptr<MotionSet> motions;

    SuiteCtx(const Instance& i, const IdentityConfig* c, Report* r)
        : inst(i), cfg(c), rep(r), F(i.p, i.ell), S(F, i.d) {}
    SuiteCtx(const SuiteCtx&) = delete;

    const VecSpace& pair_space() {
        if (!pair) pair = std::make_unique<VecSpace>(F, 2 * inst.d);
        return *pair;
    }
    const MotionSet& all_motions() {
        if (!motions) motions = std::make_unique<MotionSet>(all_rigid_motions(S));
        return *motions;
    }
    uint64_t seed(int t, int slot) const {
        uint64_t ikey = ((uint64_t)inst.p << 16) ^ ((uint64_t)inst.ell << 8) ^ (uint64_t)inst.d;
        return sub_seed(cfg->seed, ikey, (uint64_t)t, (uint64_t)slot);
    }
    void add(const char* id, bool pass, double observed, double bound, const char* family,
             const std::string& fail_note) {
        ReportRow row;
        row.theorem_id = id;
        row.p = inst.p;
        row.ell = inst.ell;
        row.d = inst.d;
        row.instance = index++;
        row.family = family;
        row.observed = observed;
        row.bound = bound;
        row.constant = bound != 0.0 ? observed / bound : 0.0;
        row.exact_pass = pass;
        if (!pass) row.flags = fail_note;
        rep->rows.push_back(std::move(row));
    }
};

void check_gauss(SuiteCtx& c) {
    const Field& F = c.F;
    cplx closed = F.gauss_sum_closed_form();
    double worst = std::abs(F.gauss_sum(1) - closed);
    int worst_a = 1;
    for (int a = 2; a < F.q(); ++a) {
        double e = std::abs(F.gauss_sum(a) - (double)F.eta(a) * closed);
        if (e > worst) {
            worst = e;
            worst_a = a;
        }
    }
    c.add("explicit-gauss", worst <= 1e-9, worst, 1e-9, "exhaustive",
          fmt("p=%d ell=%d a=%d err=%.3g", c.inst.p, c.inst.ell, worst_a, worst));
}

void check_orthogonality(SuiteCtx& c) {
    const Field& F = c.F;
    const VecSpace& S = c.S;
    int64_t stride = std::max<int64_t>(1, S.size() / 4096);
    double worst = 0;
    int64_t worst_b = 0;
    for (int64_t b = 0; b < S.size(); b += stride) {
        cplx prod = 1.0;
        for (int i = 0; i < S.dim(); ++i) {
            int bi = S.coord(b, i);
            cplx s = 0.0;
            for (int a = 0; a < F.q(); ++a) s += F.chi(F.mul(bi, a));
            prod *= s;
        }
        double expect = b == 0 ? (double)S.size() : 0.0;
        double e = std::abs(prod - expect);
        if (e > worst) {
            worst = e;
            worst_b = b;
        }
    }
    double tol = 1e-7 * (double)S.size();
    c.add("complete", worst <= tol, worst, tol, "strided",
          fmt("p=%d ell=%d d=%d beta=%lld err=%.3g", c.inst.p, c.inst.ell, c.inst.d,
              (long long)worst_b, worst));
}

void check_plancherel(SuiteCtx& c) {
    static const double kDensities[] = {0.12, 0.35, 0.6, 0.85};
    for (int t = 0; t < c.cfg->sets_per_instance; ++t) {
        PointSet A = random_set_density(c.S, kDensities[t % 4], c.seed(t, 0));
        Spectrum sp = dft(A);
        double lhs = spectrum_energy(sp);
        double rhs = (double)A.card() / (double)c.S.size();
        double err = std::fabs(lhs - rhs);
        c.add("plancherel", err <= 1e-9, err, 1e-9, "density",
              fmt("p=%d ell=%d d=%d trial=%d err=%.3g", c.inst.p, c.inst.ell, c.inst.d, t, err));

        std::vector<cplx> back = inverse_dft(sp);
        double worst = 0;
        for (int64_t x = 0; x < c.S.size(); ++x)
            worst = std::max(worst, std::abs(back[x] - cplx(A.test(x) ? 1.0 : 0.0)));
        c.add("dft-inversion", worst <= 1e-9, worst, 1e-9, "density",
              fmt("p=%d ell=%d d=%d trial=%d err=%.3g", c.inst.p, c.inst.ell, c.inst.d, t, worst));
    }
}

void check_sphere_spectrum(SuiteCtx& c) {
    const VecSpace& S = c.S;
    int q = c.F.q();
    double worst = 0;
    int worst_j = 0;
    int64_t worst_m = 0;
    double sign = c.cfg->fault.sphere_closed_form_sign_flip ? -1.0 : 1.0;
    for (int j = 0; j < q; ++j) {
        Spectrum direct = dft(sphere(S, j));
        for (int64_t m = 0; m < S.size(); ++m) {
            double e = std::abs(sign * sphere_fourier_closed(S, j, m) - direct.at(m));
            if (e > worst) {
                worst = e;
                worst_j = j;
                worst_m = m;
            }
        }
    }
    c.add("large-fourier", worst <= 1e-8, worst, 1e-8, "exhaustive",
          fmt("p=%d ell=%d d=%d j=%d m=%lld err=%.3g", c.inst.p, c.inst.ell, c.inst.d, worst_j,
              (long long)worst_m, worst));

    std::vector<Spectrum> spectra = all_sphere_spectra(S);
    int64_t stride = std::max<int64_t>(1, S.size() / 2048);
    double worst2 = 0;
    for (int64_t m = 0; m < S.size(); m += stride)
        for (int64_t m2 = 0; m2 < S.size(); m2 += stride) {
            double e =
                std::abs(sphere_pair_sum_closed(S, m, m2) - sphere_pair_sum_direct(spectra, m, m2));
            worst2 = std::max(worst2, e);
        }
    c.add("large-fourier-sum", worst2 <= 1e-9, worst2, 1e-9, "strided",
          fmt("p=%d ell=%d d=%d err=%.3g", c.inst.p, c.inst.ell, c.inst.d, worst2));
}

void check_variety_spectrum(SuiteCtx& c) {
    if (c.inst.d > 2) return;  // pair-space exhaustiveness is kept to d <= 2
    const VecSpace& S = c.S;
    PointSet V = variety_set(c.pair_space(), S);
    Spectrum sp = dft(V);
    int64_t stride = std::max<int64_t>(1, S.size() / 2048);
    double worst = 0;
    int64_t wm = 0, wm2 = 0;
    for (int64_t m = 0; m < S.size(); m += stride)
        for (int64_t m2 = 0; m2 < S.size(); m2 += stride) {
            double e = std::abs(variety_fourier_closed(S, m, m2) - sp.at(m + S.size() * m2));
            if (e > worst) {
                worst = e;
                wm = m;
                wm2 = m2;
            }
        }
    c.add("fourier-v", worst <= 1e-9, worst, 1e-9, "strided",
          fmt("p=%d ell=%d d=%d m=%lld m'=%lld err=%.3g", c.inst.p, c.inst.ell, c.inst.d,
              (long long)wm, (long long)wm2, worst));
}

void check_quadruple_identities(SuiteCtx& c) {
    static const double kDensities[] = {0.1, 0.25, 0.5, 0.75};
    const VecSpace& S = c.S;
    int q = c.F.q(), d = c.inst.d;
    for (int t = 0; t < c.cfg->sets_per_instance; ++t) {
        PointSet A = random_set_density(S, kDensities[t % 4], c.seed(t, 1));
        PointSet B = random_set_density(S, kDensities[(t + 1) % 4], c.seed(t, 2));
        QuadrupleIdentityReport r = verify_quadruple_identities(A, B, c.pair_space());
        c.add("framework", r.product_rel_err <= 1e-6, r.product_rel_err, 1e-6, "product",
              fmt("p=%d ell=%d d=%d trial=%d rel=%.3g", c.inst.p, c.inst.ell, d, t,
                  r.product_rel_err));
        c.add("p-main", r.general_rel_err <= 1e-6, r.general_rel_err, 1e-6, "product",
              fmt("p=%d ell=%d d=%d trial=%d rel=%.3g", c.inst.p, c.inst.ell, d, t,
                  r.general_rel_err));

        // The same identity on a non-product set.
        PointSet P = random_set_density(c.pair_space(), 0.05, c.seed(t, 3));
        int64_t n = count_quadruples(P, S);
        PairNormSums ps = pair_norm_sums(dft(P), S);
        double cp = (double)P.card();
        double general = (1.0 / q + (double)(q - 1) / (double)ipow(q, d + 1)) * cp * cp +
                         (double)ipow(q, 3 * d - 1) * ((q - 1.0) * ps.equal_excl_origin - ps.unequal);
        double rel = std::fabs((double)n - general) / std::max(1.0, (double)n);
        c.add("p-main", rel <= 1e-6, rel, 1e-6, "general",
              fmt("p=%d ell=%d d=%d trial=%d |P|=%lld rel=%.3g", c.inst.p, c.inst.ell, d, t,
                  (long long)P.card(), rel));
    }
}

void check_incidence_expansion(SuiteCtx& c) {
    const MotionSet& all = c.all_motions();
    for (int t = 0; t < c.cfg->sets_per_instance; ++t) {
        PointSet P = random_set_density(c.pair_space(), 0.08, c.seed(t, 4));
        MotionSet R = all;
        if (t % 2 == 1) {
            std::vector<Motion> items;
            uint64_t st = c.seed(t, 5);
            for (const Motion& mo : all.items)
                if (splitmix64(st) & 1) items.push_back(mo);
            if (items.empty()) items.push_back(all.items.front());
            R = make_motion_set(c.S, all.group, std::move(items));
        }
        int64_t exact = count_incidences(P, R);
        IncidenceExpansion ex = incidence_fourier_expansion(P, c.S, R);
        double rel = std::fabs((double)exact - ex.total()) / std::max(1.0, (double)exact);
        bool pass = rel <= 1e-6 && std::fabs(ex.error_imag) <= 1e-6 * std::max(1.0, (double)exact);
        c.add("incidence-expansion", pass, rel, 1e-6, t % 2 ? "half-motions" : "all-motions",
              fmt("p=%d ell=%d d=%d trial=%d rel=%.3g imag=%.3g", c.inst.p, c.inst.ell, c.inst.d,
                  t, rel, ex.error_imag));
    }
}

void check_histogram(SuiteCtx& c) {
    const std::vector<Mat>& G = *c.all_motions().group;
    static const double kDensities[] = {0.15, 0.4, 0.7, 0.95};
    for (int t = 0; t < c.cfg->sets_per_instance; ++t) {
        PointSet A = random_set_density(c.S, kDensities[t % 4], c.seed(t, 6));
        PointSet B = random_set_density(c.S, kDensities[(t + 2) % 4], c.seed(t, 7));
        uint64_t st = c.seed(t, 8);
        const Mat& g = G[splitmix64(st) % G.size()];
        std::vector<int64_t> hist = intersection_histogram(A, B, g);
        int64_t sum = 0;
        for (int64_t v : hist) sum += v;
        int64_t expect = A.card() * B.card();
        c.add("histogram-sum", sum == expect, (double)sum, (double)expect, "density",
              fmt("p=%d ell=%d d=%d trial=%d sum=%lld expect=%lld", c.inst.p, c.inst.ell,
                  c.inst.d, t, (long long)sum, (long long)expect));
    }
}

void check_complement(SuiteCtx& c) {
    const Field& F = c.F;
    int d = c.inst.d;
    bool ok = true;
    std::string note;
    int64_t checked = 0;
    for (int m = 0; m <= d && ok; ++m) {
        for (const Subspace& W : enumerate_grassmannian(F, d, m)) {
            Subspace U = orthogonal_complement(F, W);
            ++checked;
            if (U.m != d - m || !(orthogonal_complement(F, U) == W)) {
                ok = false;
                note = fmt("p=%d ell=%d d=%d m=%d: dim or involution failed", c.inst.p,
                           c.inst.ell, d, m);
                break;
            }
        }
    }
    c.add("complement-dim", ok, (double)checked, (double)checked, "exhaustive", note);
}

}  // namespace

IdentityConfig default_identity_config() {
    IdentityConfig cfg;
    cfg.instances = {{3, 1, 2}, {5, 1, 2}, {7, 1, 2}, {3, 1, 3}};
    cfg.seed = 1729;
    cfg.sets_per_instance = 4;
    return cfg;
}

Report run_identity_suite(const IdentityConfig& config) {
    Report rep;
    rep.command = "verify";
    rep.seed = config.seed;
    rep.trials = config.sets_per_instance;
    for (const Instance& inst : config.instances) {
        SuiteCtx ctx(inst, &config, &rep);
        check_gauss(ctx);
        check_orthogonality(ctx);
        check_plancherel(ctx);
        check_sphere_spectrum(ctx);
        check_variety_spectrum(ctx);
        check_quadruple_identities(ctx);
        check_incidence_expansion(ctx);
        check_histogram(ctx);
        check_complement(ctx);
    }
    rep.finalize();
    return rep;
}

// ---- theorem catalog ----------------------------------------------------------

namespace {

std::string apl_any(const Instance& i) { return i.d >= 2 ? "" : "d must be >= 2"; }

// d odd >= 3, or d = 2 mod 4 with q = 3 mod 4; the q = 1 mod 4 companion case
// is open and runs flagged.
std::string apl_parity(const Instance& i) {
    if (i.d < 2) return "d must be >= 2";
    if (i.d % 2 == 1) return "";
    if (i.d % 4 == 2) return i.q() % 4 == 3 ? "" : "EXPLORATORY";
    return "needs d odd or d = 2 mod 4";
}

std::string apl_plane3(const Instance& i) {
    if (i.d != 2) return "d must be 2";
    return i.q() % 4 == 3 ? "" : "needs q = 3 mod 4";
}

std::string apl_prime_plane(const Instance& i) {
    if (i.d != 2) return "d must be 2";
    if (i.ell != 1) return "prime fields only";
    return i.p % 4 == 3 ? "" : "needs p = 3 mod 4";
}

std::string apl_zero_sphere(const Instance& i) {
    if (i.d % 4 != 2) return "needs d = 2 mod 4";
    return i.q() % 4 == 3 ? "" : "needs q = 3 mod 4";
}

}  // namespace

const std::vector<TheoremEntry>& theorem_catalog() {
    static const std::vector<TheoremEntry> table = {
        {"plan-ge", Tier::Exact,
         "sum_{|m|=|m'|} |Ahat|^2|Bhat|^2 <= |A||B|/q^{2d}, constant exactly 1", apl_any},
        {"plan-ge-1", Tier::Estimated,
         "equal-norm spectral sum <= |A||B|/q^{2d+1} (small A) or |A|^2|B|/q^{(5d+1)/2}",
         apl_parity},
        {"key-2-d", Tier::Estimated,
         "equal-norm spectral sum << |A||B| min(|A|,|B|)^{1/2} / q^5", apl_plane3},
        {"m-a", Tier::Estimated,
         "restricted sphere energy << branch of min(|A|/q^d, |A|/q^{d+1} + |A|^2/q^{(3d+1)/2})",
         apl_any},
        {"zero-sphere", Tier::Estimated,
         "sum_{m in S_0} |Ahat|^2 << |A|/q^{d+1} + |A|^2/q^{(3d+2)/2}", apl_zero_sphere},
        {"main-this-section", Tier::Estimated,
         "q^{3d-1}(q-1) sum_{(m,m') != 0, |m|=|m'|} |Phat|^2 << q^d |P|", apl_any},
        {"small-sets", Tier::Estimated,
         "N(AxA) - |A|^4/p << min(p^{2/3}|A|^{8/3} + p^{1/4}|A|^3, |A|^{10/3})", apl_prime_plane},
        {"quadruple", Tier::Estimated, "|N(P) - |P|^2/q| << q^d |P|", apl_any},
        {"incidence-inequality", Tier::Estimated,
         "|I(P,R) - |P||R|/q^d| << q^{(d^2-d+2)/4} sqrt(|P||R|)", apl_any},
        {"incidence1", Tier::Estimated,
         "product-set incidence error << q^{(d^2-d)/4} sqrt(|P||R|) or "
         "q^{(d^2-2d+1)/4} sqrt(|P||R||A|)",
         apl_parity},
        {"incidences2", Tier::Estimated,
         "plane incidence error << q^{1/2} sqrt(|P||R|) min(|A|,|B|)^{1/4}", apl_plane3},
        {"incidences31", Tier::Estimated,
         "prime-plane incidence error, |A| <= p and |B| <= p^{4/3} branch table",
         apl_prime_plane},
        {"incidences3", Tier::Estimated,
         "prime-plane incidence error, |A| >= p and |B| <= p^{4/3} branch table",
         apl_prime_plane},
        {"incidences32", Tier::Estimated,
         "prime-plane incidence error, |B| > p^{4/3} branch table", apl_prime_plane},
        {"og", Tier::Estimated,
         "exceptional |E| << |O(d-1)| q^{2d} / (|A||B|) for the translate-count window",
         apl_any},
        {"int2", Tier::Estimated,
         "exceptional |E| << q^{(d^2+d)/2}/(|A||B|) (small A) or q^{(d^2+1)/2}/|B|",
         apl_parity},
        {"int-for-d2", Tier::Estimated, "exceptional |E| << q^3 / (|A|^{1/2}|B|)", apl_plane3},
        {"int-for-d2-p", Tier::Estimated,
         "exceptional |E| << p^{59/24}/(|A|^{2/3}|B|^{1/2}) or p^{9/4}/(|A||B|)^{1/2}",
         apl_prime_plane},
        {"int-for-d2-p11", Tier::Estimated,
         "exceptional |E| << p^{17/6}/(|A|^{2/3}|B|^{3/4}) or p^{21/8}/(|A|^{1/2}|B|^{3/4})",
         apl_prime_plane},
        {"od", Tier::Estimated, "exceptional |E| << q^{2d} |O(d-1)| / |P| for |S_g(P)| >= q^d/2",
         apl_any},
        {"growth-q", Tier::Estimated, "#{g : |A-gB| <= |B|^{1+eps}} << |O(d-1)| q^d |B|^eps / |A|",
         apl_any},
        {"growth-dq", Tier::Estimated,
         "growth exceptional set << q^{(d^2-d)/2}|B|^eps/|A| or q^{(d^2-2d+1)/2}|B|^eps",
         apl_parity},
        {"growth-d2q", Tier::Estimated, "growth exceptional set << q |B|^eps / |A|^{1/2}",
         apl_plane3},
        {"growth-d2p1", Tier::Estimated, "prime-plane growth bounds, small-A branch table",
         apl_prime_plane},
        {"growth-d2p2", Tier::Estimated, "prime-plane growth bounds, medium-A branch table",
         apl_prime_plane},
        {"growth-d2p3", Tier::Estimated, "prime-plane growth bounds, large-B branch table",
         apl_prime_plane},
        {"proj", Tier::Exact,
         "projection-intersection counts via the explicit 6- and 4-constant direction counts",
         apl_any},
        {"thm1-chen", Tier::Exact,
         "#{W : |pi_W(E)| <= N} <= 4 q^{(d-m)m-m} N and, at threshold delta q^m, "
         "<= 2 (delta/(1-delta)) q^{m(d-m)+m} / |E|",
         apl_any},
        {"cor-size-of-w", Tier::Exact,
         "small-image direction counts <= q^{m(d-m-1)}|E|/2, <= q^{m(d-m+1)}/(2|E|), "
         "and #{|pi_W(E)| != q^m} <= 4 q^{(d-m)(m+1)}/|E|",
         apl_any},
        {"ppv-flats", Tier::Estimated,
         "|I(K,H) - |K||H|/q^{(d-h)(k+1)}| <= sqrt(c_k(1+o(1))) "
         "q^{((d-h)h+k(2h-d-k+1))/2} sqrt(|K||H|)",
         apl_any},
    };
    return table;
}

const TheoremEntry* find_theorem(const std::string& id) {
    for (const TheoremEntry& t : theorem_catalog())
        if (id == t.id) return &t;
    return nullptr;
}

// ---- sweep drivers ------------------------------------------------------------

namespace {

struct SweepCtx {
    const TheoremEntry& th;
    const SweepConfig& cfg;
    Instance inst;
    Report& rep;
    std::string inst_flag;  // "" or "EXPLORATORY"
    Field F;
    VecSpace S;
    int64_t index = 0;
    std::shared_ptr<const std::vector<Mat>> group_;
    std::unique_ptr<VecSpace> pair_;
    std::unique_ptr<MotionSet> motions_;

    SweepCtx(const TheoremEntry& t, const SweepConfig& c, const Instance& i, Report& r)
        : th(t), cfg(c), inst(i), rep(r), F(i.p, i.ell), S(F, i.d) {}
    SweepCtx(const SweepCtx&) = delete;

    int q() const { return F.q(); }
    int d() const { return inst.d; }
    int64_t size() const { return S.size(); }
    double dq(double e) const { return std::pow((double)F.q(), e); }

    const std::vector<Mat>& group() {
        if (!group_) group_ = std::make_shared<const std::vector<Mat>>(orthogonal_group(F, d()));
        return *group_;
    }
    const VecSpace& pair() {
        if (!pair_) pair_ = std::make_unique<VecSpace>(F, 2 * d());
        return *pair_;
    }
    const MotionSet& motions() {
        if (!motions_) motions_ = std::make_unique<MotionSet>(all_rigid_motions(S));
        return *motions_;
    }
    uint64_t seed(int64_t t, int slot) const {
        uint64_t ikey = ((uint64_t)inst.p << 16) ^ ((uint64_t)inst.ell << 8) ^ (uint64_t)inst.d;
        return sub_seed(cfg.seed, ikey, (uint64_t)t, (uint64_t)slot);
    }

    ReportRow base(const std::string& family) {
        ReportRow r;
        r.theorem_id = th.id;
        r.p = inst.p;
        r.ell = inst.ell;
        r.d = inst.d;
        r.instance = index++;
        r.family = family;
        if (!inst_flag.empty()) r.flags = inst_flag;
        return r;
    }
    void push(ReportRow r) {
        if (r.bound > 0.0) r.constant = r.observed / r.bound;
        rep.rows.push_back(std::move(r));
    }
    void push_skip(const std::string& family, const std::string& why) {
        ReportRow r = base(family);
        if (!r.flags.empty()) r.flags += ";";
        r.flags += "VALIDITY_RANGE: " + why;
        rep.rows.push_back(std::move(r));
    }
};

// Largest |B| compatible with |B|^{1+eps} < q^d / 2.
int64_t growth_cap(const SweepCtx& c, double eps) {
    int64_t cap = (int64_t)std::floor(std::pow((double)c.size() / 2.0, 1.0 / (1.0 + eps)));
    while (cap >= 1 && !(std::pow((double)cap, 1.0 + eps) < (double)c.size() / 2.0)) --cap;
    return cap;
}

MotionSet random_motion_subset(SweepCtx& c, double rho, uint64_t seed) {
    const MotionSet& all = c.motions();
    if (rho >= 1.0) return all;
    std::vector<Motion> items;
    uint64_t st = seed;
    for (const Motion& mo : all.items)
        if ((double)(splitmix64(st) >> 11) * 0x1.0p-53 < rho) items.push_back(mo);
    if (items.empty()) items.push_back(all.items.front());
    return make_motion_set(c.S, all.group, std::move(items));
}

// ---- spectral-sum family ----

void drive_plan_ge(SweepCtx& c) {
    Window w = clampw(1, c.size(), c.size());
    for (int64_t t = 0; t < c.cfg.trials; ++t) {
        std::string fa, fb;
        PointSet A = gen_in_window(c.S, w, c.seed(t, 0), &fa);
        PointSet B = gen_in_window(c.S, w, c.seed(t, 1), &fb);
        double s = equal_norm_product_sum(dft(A), dft(B), EqualNormVariant::All);
        double bound = (double)A.card() * (double)B.card() / c.dq(2 * c.d());
        ReportRow r = c.base(fa + "x" + fb);
        r.card_a = A.card();
        r.card_b = B.card();
        r.observed = s;
        r.bound = bound;
        r.exact_pass = s <= bound * (1.0 + 1e-9);
        if (!r.exact_pass) r.flags = fmt("sum exceeds |A||B|/q^{2d}: %.17g > %.17g", s, bound);
        c.push(std::move(r));
    }
}

void drive_plan_ge_1(SweepCtx& c) {
    struct Part {
        const char* name;
        Window wa;
        int which;  // 1 or 2
    };
    Window small = clampw(1, fpow_floor(c.q(), (c.d() - 1) / 2.0), c.size());
    Window mid =
        clampw(fpow_ceil(c.q(), (c.d() - 1) / 2.0), fpow_floor(c.q(), (c.d() + 1) / 2.0), c.size());
    const Part parts[] = {{"part1", small, 1}, {"part2", mid, 2}};
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 2);
    for (const Part& part : parts) {
        if (part.wa.empty()) {
            c.push_skip(part.name, fmt("empty |A| window [%lld,%lld]", (long long)part.wa.lo,
                                       (long long)part.wa.hi));
            continue;
        }
        for (int64_t t = 0; t < per; ++t) {
            std::string fa, fb;
            PointSet A = gen_in_window(c.S, part.wa, c.seed(t, 10 + part.which), &fa);
            PointSet B = gen_in_window(c.S, clampw(1, c.size(), c.size()),
                                       c.seed(t, 20 + part.which), &fb);
            double s = equal_norm_product_sum(dft(A), dft(B), EqualNormVariant::All);
            double ca = (double)A.card(), cb = (double)B.card();
            double bound = part.which == 1 ? ca * cb / c.dq(2 * c.d() + 1)
                                           : ca * ca * cb / c.dq((5.0 * c.d() + 1) / 2.0);
            ReportRow r = c.base(std::string(part.name) + ":" + fa + "x" + fb);
            r.card_a = A.card();
            r.card_b = B.card();
            r.observed = s;
            r.bound = bound;
            c.push(std::move(r));
        }
    }
}

void drive_key_2_d(SweepCtx& c) {
    Window w = clampw(1, c.size(), c.size());
    for (int64_t t = 0; t < c.cfg.trials; ++t) {
        std::string fa, fb;
        PointSet A = gen_in_window(c.S, w, c.seed(t, 0), &fa);
        PointSet B = gen_in_window(c.S, w, c.seed(t, 1), &fb);
        double s = equal_norm_product_sum(dft(A), dft(B), EqualNormVariant::All);
        double ca = (double)A.card(), cb = (double)B.card();
        ReportRow r = c.base(fa + "x" + fb);
        r.card_a = A.card();
        r.card_b = B.card();
        r.observed = s;
        r.bound = ca * cb * std::sqrt(std::min(ca, cb)) / c.dq(5);
        c.push(std::move(r));
    }
}

void drive_m_a(SweepCtx& c) {
    Window w = clampw(1, c.size(), c.size());
    for (int64_t t = 0; t < c.cfg.trials; ++t) {
        std::string fa;
        PointSet A = gen_in_window(c.S, w, c.seed(t, 0), &fa);
        auto [mstar, mfull] = restriction_maxima(dft(A));
        double ca = (double)A.card();
        int d = c.d();
        ReportRow r = c.base(fa);
        r.card_a = A.card();
        if (d == 2) {
            r.observed = mstar;
            r.bound = std::pow(ca, 1.5) / c.dq(3);
            r.family += ":d2-star";
        } else {
            double branch = std::min(ca / c.dq(d), ca / c.dq(d + 1) + ca * ca / c.dq((3.0 * d + 1) / 2.0));
            r.observed = d % 2 == 1 ? mfull : mstar;
            r.bound = branch;
            r.family += d % 2 == 1 ? ":odd-full" : ":even-star";
        }
        c.push(std::move(r));
    }
}

void drive_zero_sphere(SweepCtx& c) {
    Window w = clampw(1, c.size(), c.size());
    for (int64_t t = 0; t < c.cfg.trials; ++t) {
        std::string fa;
        PointSet A = gen_in_window(c.S, w, c.seed(t, 0), &fa);
        NormClassSums s = norm_class_sums(dft(A));
        double ca = (double)A.card();
        ReportRow r = c.base(fa);
        r.card_a = A.card();
        r.observed = s.t[0];
        r.bound = ca / c.dq(c.d() + 1) + ca * ca / c.dq((3.0 * c.d() + 2) / 2.0);
        c.push(std::move(r));
    }
}

void drive_main_this_section(SweepCtx& c) {
    const VecSpace& pair = c.pair();
    for (int64_t t = 0; t < c.cfg.trials; ++t) {
        std::string fp = "general";
        PointSet P(pair);
        if (t % 3 == 2) {
            std::string fa, fb;
            Window w = clampw(1, c.size(), c.size());
            PointSet A = gen_in_window(c.S, w, c.seed(t, 0), &fa);
            PointSet B = gen_in_window(c.S, w, c.seed(t, 1), &fb);
            P = product_set(pair, A, B);
            fp = "product:" + fa + "x" + fb;
        } else {
            P = gen_in_window(pair, clampw(1, pair.size(), pair.size()), c.seed(t, 2), &fp);
        }
        PairNormSums ps = pair_norm_sums(dft(P), c.S);
        double lhs = (double)ipow(c.q(), 3 * c.d() - 1) * (c.q() - 1) * ps.equal_excl_origin;
        ReportRow r = c.base(fp);
        r.card_p = P.card();
        r.observed = lhs;
        r.bound = c.dq(c.d()) * (double)P.card();
        c.push(std::move(r));
    }
}

void drive_small_sets(SweepCtx& c) {
    int p = c.inst.p;
    Window w = clampw(2, fpow_floor(p, 4.0 / 3.0), c.size());
    if (w.empty()) {
        c.push_skip("window", "needs |A| <= p^{4/3}");
        return;
    }
    for (int64_t t = 0; t < c.cfg.trials; ++t) {
        std::string fa;
        PointSet A = gen_in_window(c.S, w, c.seed(t, 0), &fa);
        int64_t n = count_quadruples_product(A, A);
        int64_t ca = A.card();
        // N - |A|^4/p, exactly, clipped at zero.
        long long num = n * (long long)p - ca * ca * ca * ca;
        double obs = num > 0 ? (double)num / p : 0.0;
        double dca = (double)ca;
        double bound = std::min(std::pow((double)p, 2.0 / 3.0) * std::pow(dca, 8.0 / 3.0) +
                                    std::pow((double)p, 0.25) * dca * dca * dca,
                                std::pow(dca, 10.0 / 3.0));
        ReportRow r = c.base(fa);
        r.card_a = ca;
        r.card_p = ca * ca;
        r.observed = obs;
        r.bound = bound;
        c.push(std::move(r));
    }
}

// ---- distance / incidence family ----

void drive_quadruple(SweepCtx& c) {
    const VecSpace& pair = c.pair();
    int64_t cap = std::min<int64_t>(pair.size(), 20000);
    for (int64_t t = 0; t < c.cfg.trials; ++t) {
        PointSet P(pair);
        std::string fp;
        int64_t n;
        if (t % 2 == 0) {
            P = gen_in_window(pair, clampw(1, cap, pair.size()), c.seed(t, 0), &fp);
            n = count_quadruples(P, c.S);
        } else {
            std::string fa, fb;
            Window w = clampw(1, c.size(), c.size());
            PointSet A = gen_in_window(c.S, w, c.seed(t, 1), &fa);
            PointSet B = gen_in_window(c.S, w, c.seed(t, 2), &fb);
            P = product_set(pair, A, B);
            fp = "product:" + fa + "x" + fb;
            n = count_quadruples_product(A, B);
        }
        double cp = (double)P.card();
        ReportRow r = c.base(fp);
        r.card_p = P.card();
        r.observed = std::fabs((double)n - cp * cp / c.q());
        r.bound = c.dq(c.d()) * cp;
        c.push(std::move(r));
    }
}

// Exact |I - |P||R|/q^d| via integers.
double incidence_error(int64_t I, int64_t cp, int64_t cr, int64_t qd) {
    long long num = I * qd - cp * cr;
    return std::fabs((double)num) / (double)qd;
}

void drive_incidence_universal(SweepCtx& c) {
    const VecSpace& pair = c.pair();
    static const double kRho[] = {0.3, 0.6, 1.0};
    for (int64_t t = 0; t < c.cfg.trials; ++t) {
        std::string fp;
        PointSet P(pair);
        if (t % 3 == 2) {
            std::string fa, fb;
            Window w = clampw(1, c.size(), c.size());
            PointSet A = gen_in_window(c.S, w, c.seed(t, 0), &fa);
            PointSet B = gen_in_window(c.S, w, c.seed(t, 1), &fb);
            P = product_set(pair, A, B);
            fp = "product:" + fa + "x" + fb;
        } else {
            P = gen_in_window(pair, clampw(1, pair.size(), pair.size()), c.seed(t, 2), &fp);
        }
        MotionSet R = random_motion_subset(c, kRho[t % 3], c.seed(t, 3));
        int64_t I = count_incidences(P, R);
        ReportRow r = c.base(fp);
        r.card_p = P.card();
        r.card_r = R.size();
        r.observed = incidence_error(I, P.card(), R.size(), c.size());
        r.bound = c.dq((c.d() * c.d() - c.d() + 2) / 4.0) *
                  std::sqrt((double)P.card() * (double)R.size());
        c.push(std::move(r));
    }
}

// Product-set incidence sweep shared by the windowed theorems. bound_fn gets
// (ca, cb, cp, cr) as doubles.
template <class BoundFn>
void run_incidence_part(SweepCtx& c, const char* part, Window wa, int64_t wb_lo_const,
                        int64_t wb_hi_const, bool b_at_least_a, BoundFn bound_fn, int64_t trials,
                        int slot) {
    Window wb0 = clampw(wb_lo_const, wb_hi_const, c.size());
    if (b_at_least_a) wa.hi = std::min(wa.hi, wb0.hi);
    if (wa.empty() || wb0.empty()) {
        c.push_skip(part, fmt("empty window: |A| in [%lld,%lld], |B| in [%lld,%lld]",
                              (long long)wa.lo, (long long)wa.hi, (long long)wb0.lo,
                              (long long)wb0.hi));
        return;
    }
    const VecSpace& pair = c.pair();
    static const double kRho[] = {0.35, 0.7, 1.0};
    for (int64_t t = 0; t < trials; ++t) {
        std::string fa, fb;
        PointSet A = gen_in_window(c.S, wa, c.seed(t, slot), &fa);
        Window wb = wb0;
        if (b_at_least_a) wb.lo = std::max(wb.lo, A.card());
        PointSet B = gen_in_window(c.S, wb, c.seed(t, slot + 1), &fb);
        PointSet P = product_set(pair, A, B);
        MotionSet R = random_motion_subset(c, kRho[t % 3], c.seed(t, slot + 2));
        int64_t I = count_incidences(P, R);
        ReportRow r = c.base(std::string(part) + ":" + fa + "x" + fb);
        r.card_a = A.card();
        r.card_b = B.card();
        r.card_p = P.card();
        r.card_r = R.size();
        r.observed = incidence_error(I, P.card(), R.size(), c.size());
        r.bound = bound_fn((double)A.card(), (double)B.card(), (double)P.card(),
                           (double)R.size());
        c.push(std::move(r));
    }
}

void drive_incidence1(SweepCtx& c) {
    int d = c.d();
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 2);
    double e1 = (d * d - d) / 4.0, e2 = (d * d - 2.0 * d + 1) / 4.0;
    run_incidence_part(
        c, "part1", clampw(1, fpow_ceil(c.q(), (d - 1) / 2.0) - 1, c.size()), 1, c.size(), false,
        [&](double, double, double cp, double cr) { return c.dq(e1) * std::sqrt(cp * cr); }, per,
        30);
    run_incidence_part(
        c, "part2",
        clampw(fpow_ceil(c.q(), (d - 1) / 2.0), fpow_floor(c.q(), (d + 1) / 2.0), c.size()), 1,
        c.size(), false,
        [&](double ca, double, double cp, double cr) { return c.dq(e2) * std::sqrt(cp * cr * ca); },
        per, 40);
}

void drive_incidences2(SweepCtx& c) {
    run_incidence_part(
        c, "full", clampw(1, c.size(), c.size()), 1, c.size(), false,
        [&](double ca, double cb, double cp, double cr) {
            return std::sqrt((double)c.q()) * std::sqrt(cp * cr) * std::pow(std::min(ca, cb), 0.25);
        },
        c.cfg.trials, 30);
}

void drive_incidences31(SweepCtx& c) {
    double p = c.inst.p;
    int64_t p34 = fpow_ceil(p, 0.75), p54f = fpow_floor(p, 1.25), p54c = fpow_ceil(p, 1.25),
            p43f = fpow_floor(p, 4.0 / 3.0);
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 3);
    run_incidence_part(
        c, "part1", clampw(p34, c.inst.p, c.size()), p54c, p43f, false,
        [&](double ca, double, double cp, double cr) {
            return std::pow(p, 1.0 / 16) * std::pow(cp, 0.75) * std::sqrt(cr) *
                   std::pow(ca, 1.0 / 12);
        },
        per, 30);
    run_incidence_part(
        c, "part2", clampw(1, c.inst.p, c.size()), c.inst.p, p54f, false,
        [&](double ca, double, double cp, double cr) {
            return p * p * p * std::sqrt(cp * cr) *
                   std::sqrt(1.0 / std::pow(p, 5) +
                             std::pow(cp, 1.0 / 3) * std::pow(ca, 1.0 / 3) / std::pow(p, 17.0 / 3));
        },
        per, 40);
    run_incidence_part(
        c, "part3", clampw(1, c.inst.p, c.size()), 1, c.inst.p, true,
        [&](double, double, double cp, double cr) {
            return p * p * p * std::sqrt(cp * cr) *
                   std::sqrt(1.0 / std::pow(p, 5) + std::pow(cp, 2.0 / 3) / std::pow(p, 6));
        },
        per, 50);
}

void drive_incidences3(SweepCtx& c) {
    double p = c.inst.p;
    int64_t p54f = fpow_floor(p, 1.25), p54c = fpow_ceil(p, 1.25), p43f = fpow_floor(p, 4.0 / 3.0);
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 3);
    run_incidence_part(
        c, "part1", clampw(c.inst.p, p54f, c.size()), c.inst.p, p54f, true,
        [&](double, double, double cp, double cr) {
            return std::pow(p, 1.0 / 3) * std::pow(cp, 2.0 / 3) * std::sqrt(cr);
        },
        per, 30);
    run_incidence_part(
        c, "part2", clampw(c.inst.p, p54f, c.size()), p54c, p43f, false,
        [&](double, double cb, double cp, double cr) {
            return std::pow(p, 11.0 / 48) * std::pow(cp, 2.0 / 3) * std::sqrt(cr) *
                   std::pow(cb, 1.0 / 12);
        },
        per, 40);
    run_incidence_part(
        c, "part3", clampw(p54c, p43f, c.size()), p54c, p43f, true,
        [&](double, double, double cp, double cr) {
            return std::pow(p, 1.0 / 8) * std::pow(cp, 0.75) * std::sqrt(cr);
        },
        per, 50);
}

void drive_incidences32(SweepCtx& c) {
    double p = c.inst.p;
    int64_t p54f = fpow_floor(p, 1.25), p54c = fpow_ceil(p, 1.25), p43f = fpow_floor(p, 4.0 / 3.0);
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 2);
    run_incidence_part(
        c, "part1", clampw(c.inst.p, p54f, c.size()), p43f + 1, c.size(), false,
        [&](double ca, double, double cp, double cr) {
            return std::pow(p, 5.0 / 12) * std::pow(cp, 5.0 / 8) * std::sqrt(cr) *
                   std::pow(ca, 1.0 / 24);
        },
        per, 30);
    run_incidence_part(
        c, "part2", clampw(p54c, p43f, c.size()), p43f + 1, c.size(), false,
        [&](double ca, double, double cp, double cr) {
            return std::pow(p, 5.0 / 16) * std::pow(cp, 5.0 / 8) * std::sqrt(cr) *
                   std::pow(ca, 1.0 / 8);
        },
        per, 40);
}

// ---- exceptional-set family ----

template <class BoundFn>
void run_exceptional_part(SweepCtx& c, const char* part, Window wa, int64_t wb_lo, int64_t wb_hi,
                          bool b_at_least_a, BoundFn bound_fn, int64_t trials, int slot,
                          const char* extra_flag_when = nullptr, double flag_threshold = 0.0) {
    Window wb0 = clampw(wb_lo, wb_hi, c.size());
    if (b_at_least_a) wa.hi = std::min(wa.hi, wb0.hi);
    if (wa.empty() || wb0.empty()) {
        c.push_skip(part, fmt("empty window: |A| in [%lld,%lld], |B| in [%lld,%lld]",
                              (long long)wa.lo, (long long)wa.hi, (long long)wb0.lo,
                              (long long)wb0.hi));
        return;
    }
    const std::vector<Mat>& G = c.group();
    for (int64_t t = 0; t < trials; ++t) {
        std::string fa, fb;
        PointSet A = gen_in_window(c.S, wa, c.seed(t, slot), &fa);
        Window wb = wb0;
        if (b_at_least_a) wb.lo = std::max(wb.lo, A.card());
        PointSet B = gen_in_window(c.S, wb, c.seed(t, slot + 1), &fb);
        ExceptionalSet E = exceptional_intersection(A, B, G);
        ReportRow r = c.base(std::string(part) + ":" + fa + "x" + fb);
        r.card_a = A.card();
        r.card_b = B.card();
        r.card_r = (int64_t)G.size();
        r.observed = (double)E.size();
        r.bound = bound_fn((double)A.card(), (double)B.card());
        if (extra_flag_when && (double)A.card() * (double)B.card() < flag_threshold) {
            if (!r.flags.empty()) r.flags += ";";
            r.flags += std::string("VALIDITY_RANGE: ") + extra_flag_when;
        }
        c.push(std::move(r));
    }
}

void drive_og(SweepCtx& c) {
    double od1 = orthogonal_group_order_formula(c.d() - 1, c.q());
    int64_t big_lo = fpow_ceil(c.q(), (c.d() + 1) / 2.0);
    // Mostly |A||B| >= q^{d+1}; every fifth trial probes below the validity
    // range and is flagged.
    int64_t nsmall = c.cfg.trials / 5;
    run_exceptional_part(
        c, "main", clampw(big_lo, c.size(), c.size()), big_lo, c.size(), false,
        [&](double ca, double cb) { return od1 * c.dq(2 * c.d()) / (ca * cb); },
        c.cfg.trials - nsmall, 30, "|A||B| < q^{d+1}", c.dq(c.d() + 1));
    if (nsmall > 0 && big_lo > 2)
        run_exceptional_part(
            c, "below-range", clampw(1, big_lo - 1, c.size()), 1, big_lo - 1, false,
            [&](double ca, double cb) { return od1 * c.dq(2 * c.d()) / (ca * cb); }, nsmall, 40,
            "|A||B| < q^{d+1}", c.dq(c.d() + 1));
}

void drive_int2(SweepCtx& c) {
    int d = c.d();
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 2);
    run_exceptional_part(
        c, "part1", clampw(1, fpow_ceil(c.q(), (d - 1) / 2.0) - 1, c.size()), 1, c.size(), false,
        [&](double ca, double cb) { return c.dq((d * d + d) / 2.0) / (ca * cb); }, per, 30);
    run_exceptional_part(
        c, "part2",
        clampw(fpow_ceil(c.q(), (d - 1) / 2.0), fpow_floor(c.q(), (d + 1) / 2.0), c.size()), 1,
        c.size(), false, [&](double, double cb) { return c.dq((d * d + 1) / 2.0) / cb; }, per, 40);
}

void drive_int_for_d2(SweepCtx& c) {
    run_exceptional_part(
        c, "full", clampw(1, c.size(), c.size()), 1, c.size(), true,
        [&](double ca, double cb) { return c.dq(3) / (std::sqrt(ca) * cb); }, c.cfg.trials, 30);
}

void drive_int_for_d2_p(SweepCtx& c) {
    double p = c.inst.p;
    int64_t p54f = fpow_floor(p, 1.25), p54c = fpow_ceil(p, 1.25), p43f = fpow_floor(p, 4.0 / 3.0);
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 2);
    run_exceptional_part(
        c, "part1", clampw(c.inst.p, p54f, c.size()), p54c, p43f, false,
        [&](double ca, double cb) {
            return std::pow(p, 59.0 / 24) / (std::pow(ca, 2.0 / 3) * std::sqrt(cb));
        },
        per, 30);
    run_exceptional_part(
        c, "part2", clampw(p54c, p43f, c.size()), p54c, p43f, true,
        [&](double ca, double cb) { return std::pow(p, 2.25) / std::sqrt(ca * cb); }, per, 40);
}

void drive_int_for_d2_p11(SweepCtx& c) {
    double p = c.inst.p;
    int64_t p54f = fpow_floor(p, 1.25), p54c = fpow_ceil(p, 1.25), p43f = fpow_floor(p, 4.0 / 3.0);
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 2);
    run_exceptional_part(
        c, "part1", clampw(c.inst.p, p54f, c.size()), p43f + 1, c.size(), false,
        [&](double ca, double cb) {
            return std::pow(p, 17.0 / 6) / (std::pow(ca, 2.0 / 3) * std::pow(cb, 0.75));
        },
        per, 30);
    run_exceptional_part(
        c, "part2", clampw(p54c, p43f, c.size()), p43f + 1, c.size(), false,
        [&](double ca, double cb) {
            return std::pow(p, 21.0 / 8) / (std::sqrt(ca) * std::pow(cb, 0.75));
        },
        per, 40);
}

void drive_od(SweepCtx& c) {
    const VecSpace& pair = c.pair();
    double od1 = orthogonal_group_order_formula(c.d() - 1, c.q());
    const std::vector<Mat>& G = c.group();
    for (int64_t t = 0; t < c.cfg.trials; ++t) {
        std::string fp;
        PointSet P(pair);
        if (t % 3 == 2) {
            std::string fa, fb;
            Window w = clampw(1, c.size(), c.size());
            PointSet A = gen_in_window(c.S, w, c.seed(t, 0), &fa);
            PointSet B = gen_in_window(c.S, w, c.seed(t, 1), &fb);
            P = product_set(pair, A, B);
            fp = "product:" + fa + "x" + fb;
        } else {
            P = gen_in_window(pair, clampw(1, pair.size(), pair.size()), c.seed(t, 2), &fp);
        }
        ExceptionalSet E = exceptional_image(P, c.S, G);
        ReportRow r = c.base(fp);
        r.card_p = P.card();
        r.card_r = (int64_t)G.size();
        r.observed = (double)E.size();
        r.bound = c.dq(2 * c.d()) * od1 / (double)P.card();
        c.push(std::move(r));
    }
}

// ---- growth family ----

template <class BoundFn>
void run_growth_part(SweepCtx& c, const char* part, Window wa, int64_t wb_lo, int64_t wb_hi,
                     BoundFn bound_fn, int64_t trials, int slot) {
    double eps = c.cfg.eps;
    int64_t cap = growth_cap(c, eps);
    Window wb0 = clampw(wb_lo, std::min(wb_hi, cap), c.size());
    wa.hi = std::min(wa.hi, wb0.hi);  // |A| <= |B| throughout the growth family
    if (wa.empty() || wb0.empty()) {
        c.push_skip(part, fmt("empty window with |B|^{1+eps} < q^d/2 cap %lld: |A| in "
                              "[%lld,%lld], |B| in [%lld,%lld]",
                              (long long)cap, (long long)wa.lo, (long long)wa.hi,
                              (long long)wb0.lo, (long long)wb0.hi));
        return;
    }
    const std::vector<Mat>& G = c.group();
    for (int64_t t = 0; t < trials; ++t) {
        std::string fa, fb;
        PointSet A = gen_in_window(c.S, wa, c.seed(t, slot), &fa);
        Window wb = wb0;
        wb.lo = std::max(wb.lo, A.card());
        PointSet B = gen_in_window(c.S, wb, c.seed(t, slot + 1), &fb);
        ExceptionalSet E = exceptional_growth(A, B, eps, G);
        ReportRow r = c.base(std::string(part) + ":" + fa + "x" + fb);
        r.card_a = A.card();
        r.card_b = B.card();
        r.card_r = (int64_t)G.size();
        r.observed = (double)E.size();
        r.bound = bound_fn((double)A.card(), (double)B.card());
        for (const std::string& f : E.flags) {
            if (!r.flags.empty()) r.flags += ";";
            r.flags += "VALIDITY_RANGE: " + f;
        }
        c.push(std::move(r));
    }
}

void drive_growth_q(SweepCtx& c) {
    double od1 = orthogonal_group_order_formula(c.d() - 1, c.q());
    double eps = c.cfg.eps;
    run_growth_part(
        c, "full", clampw(1, c.size(), c.size()), 1, c.size(),
        [&](double ca, double cb) { return od1 * c.dq(c.d()) * std::pow(cb, eps) / ca; },
        c.cfg.trials, 30);
}

void drive_growth_dq(SweepCtx& c) {
    int d = c.d();
    double eps = c.cfg.eps;
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 2);
    run_growth_part(
        c, "part1", clampw(1, fpow_ceil(c.q(), (d - 1) / 2.0) - 1, c.size()), 1, c.size(),
        [&](double ca, double cb) { return c.dq((d * d - d) / 2.0) * std::pow(cb, eps) / ca; },
        per, 30);
    run_growth_part(
        c, "part2",
        clampw(fpow_ceil(c.q(), (d - 1) / 2.0), fpow_floor(c.q(), (d + 1) / 2.0), c.size()), 1,
        c.size(),
        [&](double, double cb) { return c.dq((d * d - 2.0 * d + 1) / 2.0) * std::pow(cb, eps); },
        per, 40);
}

void drive_growth_d2q(SweepCtx& c) {
    double eps = c.cfg.eps;
    run_growth_part(
        c, "full", clampw(1, c.size(), c.size()), 1, c.size(),
        [&](double ca, double cb) { return c.q() * std::pow(cb, eps) / std::sqrt(ca); },
        c.cfg.trials, 30);
}

void drive_growth_d2p1(SweepCtx& c) {
    double p = c.inst.p, eps = c.cfg.eps;
    int64_t p34 = fpow_ceil(p, 0.75), p54f = fpow_floor(p, 1.25), p54c = fpow_ceil(p, 1.25),
            p43f = fpow_floor(p, 4.0 / 3.0);
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 3);
    run_growth_part(
        c, "part1", clampw(p34, c.inst.p, c.size()), p54c, p43f,
        [&](double ca, double cb) {
            return std::pow(p, 0.125) * std::pow(cb, 0.5 + eps) / std::pow(ca, 1.0 / 3);
        },
        per, 30);
    run_growth_part(
        c, "part2", clampw(1, c.inst.p, c.size()), c.inst.p, p54f,
        [&](double ca, double cb) {
            double cp = ca * cb;
            return (p * std::pow(cb, eps) +
                    std::pow(p, 1.0 / 3) * std::pow(cb, eps) * std::pow(cp, 1.0 / 3) *
                        std::pow(ca, 1.0 / 3)) /
                   ca;
        },
        per, 40);
    run_growth_part(
        c, "part3", clampw(1, c.inst.p, c.size()), 1, c.inst.p,
        [&](double ca, double cb) {
            return std::pow(cb, eps) * std::pow(ca * cb, 2.0 / 3) / ca;
        },
        per, 50);
}

void drive_growth_d2p2(SweepCtx& c) {
    double p = c.inst.p, eps = c.cfg.eps;
    int64_t p54f = fpow_floor(p, 1.25), p54c = fpow_ceil(p, 1.25), p43f = fpow_floor(p, 4.0 / 3.0);
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 3);
    run_growth_part(
        c, "part1", clampw(c.inst.p, p54f, c.size()), c.inst.p, p54f,
        [&](double ca, double cb) {
            return std::pow(p, 2.0 / 3) * std::pow(cb, 1.0 / 3 + eps) / std::pow(ca, 2.0 / 3);
        },
        per, 30);
    run_growth_part(
        c, "part2", clampw(c.inst.p, p54f, c.size()), p54c, p43f,
        [&](double ca, double cb) {
            return std::pow(p, 11.0 / 24) * std::pow(cb, 0.5 + eps) / std::pow(ca, 2.0 / 3);
        },
        per, 40);
    run_growth_part(
        c, "part3", clampw(p54c, p43f, c.size()), p54c, p43f,
        [&](double ca, double cb) {
            return std::pow(p, 0.25) * std::pow(cb, 0.5 + eps) / std::sqrt(ca);
        },
        per, 50);
}

void drive_growth_d2p3(SweepCtx& c) {
    double p = c.inst.p, eps = c.cfg.eps;
    int64_t p54f = fpow_floor(p, 1.25), p54c = fpow_ceil(p, 1.25), p43f = fpow_floor(p, 4.0 / 3.0);
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 2);
    run_growth_part(
        c, "part1", clampw(c.inst.p, p54f, c.size()), p43f + 1, c.size(),
        [&](double ca, double cb) {
            return std::pow(p, 5.0 / 6) * std::pow(cb, 0.25 + eps) / std::pow(ca, 2.0 / 3);
        },
        per, 30);
    run_growth_part(
        c, "part2", clampw(p54c, p43f, c.size()), p43f + 1, c.size(),
        [&](double ca, double cb) {
            return std::pow(p, 5.0 / 8) * std::pow(cb, 0.25 + eps) / std::sqrt(ca);
        },
        per, 40);
}

// ---- projection family ----

void drive_proj(SweepCtx& c) {
    int m = c.cfg.m, d = c.d();
    if (m < 1 || m >= d) {
        c.push_skip("all", fmt("m=%d must satisfy 1 <= m < d=%d", m, d));
        return;
    }
    int64_t qm = ipow(c.q(), m);
    int64_t gdm = gaussian_binomial(c.q(), d, m);
    int64_t per = std::max<int64_t>(1, c.cfg.trials / 2);

    Window w1 = clampw(qm + 1, c.size(), c.size());
    if (w1.empty()) {
        c.push_skip("part1", "needs |A|, |B| > q^m");
    } else {
        long long cap6 = 6 * ipow(c.q(), m * (d - m + 1));
        for (int64_t t = 0; t < per; ++t) {
            std::string fa, fb;
            PointSet A = gen_in_window(c.S, w1, c.seed(t, 30), &fa);
            PointSet B = gen_in_window(c.S, w1, c.seed(t, 31), &fb);
            std::vector<ProjectionRow> rows = projection_intersection_sweep(A, B, m);
            int64_t nbad_a = 0, nbad_b = 0, good = 0;
            for (const ProjectionRow& pr : rows) {
                if (4 * pr.proj_a <= 3 * qm) ++nbad_a;
                if (4 * pr.proj_b <= 3 * qm) ++nbad_b;
                if (2 * pr.inter >= qm) ++good;
            }
            bool pass = nbad_a * A.card() <= cap6 && nbad_b * B.card() <= cap6 &&
                        good >= gdm - nbad_a - nbad_b;
            ReportRow r = c.base("part1:" + fa + "x" + fb);
            r.card_a = A.card();
            r.card_b = B.card();
            r.observed = (double)good;
            r.bound = (double)ipow(c.q(), m * (d - m));
            r.exact_pass = pass;
            if (!pass)
                r.flags = fmt("direction counts: badA=%lld badB=%lld good=%lld G=%lld",
                              (long long)nbad_a, (long long)nbad_b, (long long)good,
                              (long long)gdm);
            c.push(std::move(r));
        }
    }

    Window w2 = clampw(ipow(c.q(), 2 * m) + 1, c.size(), c.size());
    if (w2.empty()) {
        c.push_skip("part2", "needs |A|, |B| > q^{2m}");
    } else {
        long long cap4 = 4 * ipow(c.q(), (d - m) * (m + 1));
        for (int64_t t = 0; t < per; ++t) {
            std::string fa, fb;
            PointSet A = gen_in_window(c.S, w2, c.seed(t, 40), &fa);
            PointSet B = gen_in_window(c.S, w2, c.seed(t, 41), &fb);
            std::vector<ProjectionRow> rows = projection_intersection_sweep(A, B, m);
            int64_t ne_a = 0, ne_b = 0, full = 0;
            for (const ProjectionRow& pr : rows) {
                if (pr.proj_a != qm) ++ne_a;
                if (pr.proj_b != qm) ++ne_b;
                if (pr.inter == qm) ++full;
            }
            bool pass = ne_a * A.card() <= cap4 && ne_b * B.card() <= cap4 &&
                        full >= gdm - ne_a - ne_b;
            ReportRow r = c.base("part2:" + fa + "x" + fb);
            r.card_a = A.card();
            r.card_b = B.card();
            r.observed = (double)full;
            r.bound = (double)ipow(c.q(), m * (d - m));
            r.exact_pass = pass;
            if (!pass)
                r.flags = fmt("full-projection counts: neA=%lld neB=%lld full=%lld G=%lld",
                              (long long)ne_a, (long long)ne_b, (long long)full, (long long)gdm);
            c.push(std::move(r));
        }
    }

    // Third statement: m >= d/2, |A| > 100 q^m, |B| < q^m/2, |A||B| > 160 q^{2m}.
    if (2 * m < d) {
        c.push_skip("part3", "needs m >= d/2");
    } else {
        int64_t hi_b = (qm - 1) / 2;
        int64_t lo_a = 100 * qm + 1;
        int64_t q2m160 = 160 * ipow(c.q(), 2 * m);
        if (lo_a > c.size() || hi_b < 1 || (double)c.size() * hi_b <= (double)q2m160) {
            c.push_skip("part3", "needs |A| > 100 q^m and |A||B| > 160 q^{2m}; exceeds q^d here");
        } else {
            for (int64_t t = 0; t < per; ++t) {
                std::string fa, fb;
                Window wb = clampw(q2m160 / c.size() + 1, hi_b, c.size());
                PointSet B = gen_in_window(c.S, wb, c.seed(t, 50), &fb);
                Window wa = clampw(std::max(lo_a, q2m160 / B.card() + 1), c.size(), c.size());
                if (wa.empty()) {
                    c.push_skip("part3", "no |A| window for the sampled |B|");
                    continue;
                }
                PointSet A = gen_in_window(c.S, wa, c.seed(t, 51), &fa);
                std::vector<ProjectionRow> rows = projection_intersection_sweep(A, B, m);
                int64_t good = 0;
                for (const ProjectionRow& pr : rows)
                    if (100 * pr.inter >= B.card()) ++good;
                ReportRow r = c.base("part3:" + fa + "x" + fb);
                r.card_a = A.card();
                r.card_b = B.card();
                r.observed = (double)good;
                r.bound = (double)ipow(c.q(), m * (d - m));
                r.flags = r.flags.empty() ? "reported-only" : r.flags + ";reported-only";
                c.push(std::move(r));
            }
        }
    }
}

void drive_chen(SweepCtx& c) {
    int m = c.cfg.m, d = c.d();
    if (m < 1 || m >= d) {
        c.push_skip("all", fmt("m=%d must satisfy 1 <= m < d=%d", m, d));
        return;
    }
    int64_t qm = ipow(c.q(), m);
    long long scale1 = 4 * ipow(c.q(), (d - m) * m);       // count * q^m <= scale1 * N
    long long scale2 = 2 * ipow(c.q(), m * (d - m) + m);   // count * (4-k) * |E| <= scale2 * k
    for (int64_t t = 0; t < c.cfg.trials; ++t) {
        std::string fe;
        PointSet E = gen_in_window(c.S, clampw(1, c.size(), c.size()), c.seed(t, 30), &fe);
        int64_t ce = E.card();

        std::vector<int64_t> ns;
        for (int64_t cand : {(int64_t)1, ce / 8, ce / 4, (ce - 1) / 2})
            if (cand >= 1 && 2 * cand < ce) ns.push_back(cand);
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        if (ns.empty()) {
            c.push_skip("part1:" + fe, fmt("|E|=%lld admits no N < |E|/2", (long long)ce));
        } else {
            std::vector<int64_t> counts = projection_count_below(E, m, ns);
            for (size_t i = 0; i < ns.size(); ++i) {
                bool pass = counts[i] * qm <= scale1 * ns[i];
                ReportRow r = c.base(fmt("part1:%s:N=%lld", fe.c_str(), (long long)ns[i]));
                r.card_a = ce;
                r.observed = (double)counts[i];
                r.bound = (double)scale1 * (double)ns[i] / (double)qm;
                r.exact_pass = pass;
                if (!pass)
                    r.flags = fmt("count %lld exceeds 4 q^{(d-m)m-m} N", (long long)counts[i]);
                c.push(std::move(r));
            }
        }

        std::vector<int64_t> thr = {qm / 4, qm / 2, 3 * qm / 4};
        std::vector<int64_t> cnt2 = projection_count_below(E, m, thr);
        for (int k = 1; k <= 3; ++k) {
            bool pass = cnt2[k - 1] * (4 - k) * ce <= scale2 * k;
            ReportRow r = c.base(fmt("part2:%s:delta=%d/4", fe.c_str(), k));
            r.card_a = ce;
            r.observed = (double)cnt2[k - 1];
            r.bound = (double)scale2 * k / ((4.0 - k) * (double)ce);
            r.exact_pass = pass;
            if (!pass)
                r.flags = fmt("count %lld exceeds 2(delta/(1-delta)) q^{m(d-m)+m}/|E|",
                              (long long)cnt2[k - 1]);
            c.push(std::move(r));
        }
    }
}

void drive_cor_size_of_w(SweepCtx& c) {
    int m = c.cfg.m, d = c.d();
    if (m < 1 || m >= d) {
        c.push_skip("all", fmt("m=%d must satisfy 1 <= m < d=%d", m, d));
        return;
    }
    int64_t qm = ipow(c.q(), m);
    int64_t q2m = ipow(c.q(), 2 * m);
    int64_t gdm = gaussian_binomial(c.q(), d, m);
    for (int64_t t = 0; t < c.cfg.trials; ++t) {
        std::string fe;
        PointSet E = gen_in_window(c.S, clampw(2, c.size(), c.size()), c.seed(t, 30), &fe);
        int64_t ce = E.card();
        if (ce <= qm) {
            // t = s: threshold |E|/10; and t = s/2: threshold with 100 pi^2 <= |E|.
            int64_t t_half = 0;
            while (100 * (t_half + 1) * (t_half + 1) <= ce) ++t_half;
            std::vector<int64_t> cnt = projection_count_below(E, m, {ce / 10, t_half});
            long long s1 = ipow(c.q(), m * (d - m - 1));
            {
                bool pass = 2 * cnt[0] <= s1 * ce;
                ReportRow r = c.base("part1:" + fe + ":t=s");
                r.card_a = ce;
                r.observed = (double)cnt[0];
                r.bound = 0.5 * (double)s1 * (double)ce;
                r.exact_pass = pass;
                if (!pass) r.flags = "count exceeds q^{m(d-m-1)} |E| / 2";
                c.push(std::move(r));
            }
            {
                // Squared comparison: (2 count)^2 <= q^{2m(d-m-1)} |E|.
                long long s1sq = ipow(c.q(), 2 * m * (d - m - 1));
                bool pass = 4 * cnt[1] * cnt[1] <= s1sq * ce;
                ReportRow r = c.base("part1:" + fe + ":t=s/2");
                r.card_a = ce;
                r.observed = (double)cnt[1];
                r.bound = 0.5 * (double)s1 * std::sqrt((double)ce);
                r.exact_pass = pass;
                if (!pass) r.flags = "count exceeds q^{m(d-m-1)+t} / 2 at t = s/2";
                c.push(std::move(r));
            }
        } else {
            std::vector<int64_t> thr = {qm / 10, qm - 1, qm};
            std::vector<int64_t> cnt = projection_count_below(E, m, thr);
            {
                long long s2 = ipow(c.q(), m * (d - m + 1));
                bool pass = 2 * cnt[0] * ce <= s2;
                ReportRow r = c.base("part2:" + fe);
                r.card_a = ce;
                r.observed = (double)cnt[0];
                r.bound = (double)s2 / (2.0 * (double)ce);
                r.exact_pass = pass;
                if (!pass) r.flags = "count exceeds q^{m(d-m+1)} / (2|E|)";
                c.push(std::move(r));
            }
            if (ce > q2m) {
                int64_t not_full = gdm - (cnt[2] - cnt[1]);
                long long s3 = 4 * ipow(c.q(), (d - m) * (m + 1));
                bool pass = not_full * ce <= s3;
                ReportRow r = c.base("part3:" + fe);
                r.card_a = ce;
                r.observed = (double)not_full;
                r.bound = (double)s3 / (double)ce;
                r.exact_pass = pass;
                if (!pass) r.flags = "count exceeds 4 q^{(d-m)(m+1)} / |E|";
                c.push(std::move(r));
            }
        }
    }
}

FlatFamily flat_subfamily(const FlatFamily& all, double delta, uint64_t seed) {
    FlatFamily out;
    out.k = all.k;
    out.directions = all.directions;
    uint64_t st = seed;
    for (const Flat& f : all.flats)
        if ((double)(splitmix64(st) >> 11) * 0x1.0p-53 < delta) out.flats.push_back(f);
    if (out.flats.empty()) out.flats.push_back(all.flats.front());
    return out;
}

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

void drive_ppv_flats(SweepCtx& c) {
    struct Combo {
        int k, h;
    };
    std::vector<Combo> combos = {{0, c.d() - 1}};
    if (c.d() >= 4) combos.push_back({1, 3});
    static const double kDeltas[] = {0.2, 0.45, 0.75, 1.0};
    int64_t per = std::max<int64_t>(1, c.cfg.trials / (int64_t)combos.size());
    for (const Combo& kh : combos) {
        if (kh.h < 2 * kh.k + 1 || kh.h >= c.d()) continue;
        FlatFamily all_k = all_flats(c.S, kh.k);
        FlatFamily all_h = all_flats(c.S, kh.h);
        double ck = (double)((2 * kh.k + 1) * binom_ll(kh.k, kh.k / 2));
        double expo = ((c.d() - kh.h) * kh.h + kh.k * (2 * kh.h - c.d() - kh.k + 1)) / 2.0;
        for (int64_t t = 0; t < per; ++t) {
            uint64_t st = c.seed(t, 30 + kh.k);
            FlatFamily K = flat_subfamily(all_k, kDeltas[splitmix64(st) % 4], splitmix64(st));
            FlatFamily H = flat_subfamily(all_h, kDeltas[splitmix64(st) % 4], splitmix64(st));
            int64_t I = flats_incidences(c.S, K, H);
            double nk = (double)K.flats.size(), nh = (double)H.flats.size();
            double main = nk * nh / c.dq((c.d() - kh.h) * (kh.k + 1));
            ReportRow r = c.base(fmt("k=%d,h=%d", kh.k, kh.h));
            r.card_a = (int64_t)K.flats.size();
            r.card_b = (int64_t)H.flats.size();
            r.observed = std::fabs((double)I - main);
            r.bound = std::sqrt(ck) * c.dq(expo) * std::sqrt(nk * nh);
            c.push(std::move(r));
        }
    }
}

void run_theorem_instance(SweepCtx& c) {
    const std::string id = c.th.id;
    if (id == "plan-ge") return drive_plan_ge(c);
    if (id == "plan-ge-1") return drive_plan_ge_1(c);
    if (id == "key-2-d") return drive_key_2_d(c);
    if (id == "m-a") return drive_m_a(c);
    if (id == "zero-sphere") return drive_zero_sphere(c);
    if (id == "main-this-section") return drive_main_this_section(c);
    if (id == "small-sets") return drive_small_sets(c);
    if (id == "quadruple") return drive_quadruple(c);
    if (id == "incidence-inequality") return drive_incidence_universal(c);
    if (id == "incidence1") return drive_incidence1(c);
    if (id == "incidences2") return drive_incidences2(c);
    if (id == "incidences31") return drive_incidences31(c);
    if (id == "incidences3") return drive_incidences3(c);
    if (id == "incidences32") return drive_incidences32(c);
    if (id == "og") return drive_og(c);
    if (id == "int2") return drive_int2(c);
    if (id == "int-for-d2") return drive_int_for_d2(c);
    if (id == "int-for-d2-p") return drive_int_for_d2_p(c);
    if (id == "int-for-d2-p11") return drive_int_for_d2_p11(c);
    if (id == "od") return drive_od(c);
    if (id == "growth-q") return drive_growth_q(c);
    if (id == "growth-dq") return drive_growth_dq(c);
    if (id == "growth-d2q") return drive_growth_d2q(c);
    if (id == "growth-d2p1") return drive_growth_d2p1(c);
    if (id == "growth-d2p2") return drive_growth_d2p2(c);
    if (id == "growth-d2p3") return drive_growth_d2p3(c);
    if (id == "proj") return drive_proj(c);
    if (id == "thm1-chen") return drive_chen(c);
    if (id == "cor-size-of-w") return drive_cor_size_of_w(c);
    if (id == "ppv-flats") return drive_ppv_flats(c);
    throw ParseError("no driver for theorem id: " + id);
}

}  // namespace

Report run_theorem_sweep(const SweepConfig& config) {
    const TheoremEntry* th = find_theorem(config.theorem_id);
    if (!th) throw ParseError("unknown theorem id: " + config.theorem_id);
    Report rep;
    rep.command = "sweep";
    rep.seed = config.seed;
    rep.trials = config.trials;
    for (const Instance& inst : config.instances) {
        std::string flag = th->applicability(inst);
        if (!flag.empty() && flag != "EXPLORATORY") {
            ReportRow r;
            r.theorem_id = th->id;
            r.p = inst.p;
            r.ell = inst.ell;
            r.d = inst.d;
            r.family = "skipped";
            r.flags = "VALIDITY_RANGE: " + flag;
            rep.rows.push_back(std::move(r));
            continue;
        }
        SweepCtx ctx(*th, config, inst, rep);
        ctx.inst_flag = flag;
        run_theorem_instance(ctx);
    }
    rep.finalize();
    return rep;
}

ConstantEstimate estimate_constant(const std::string& theorem_id,
                                   const std::vector<Instance>& grid, int64_t trials,
                                   uint64_t seed) {
    const TheoremEntry* th = find_theorem(theorem_id);
    if (!th) throw ParseError("unknown theorem id: " + theorem_id);
    ConstantEstimate est;
    if (th->tier == Tier::Exact) {
        est.reason = "explicit constant: asserted, not estimated";
        return est;
    }
    if (grid.empty()) {
        est.reason = "empty grid";
        return est;
    }
    SweepConfig cfg;
    cfg.theorem_id = theorem_id;
    cfg.instances = grid;
    cfg.trials = trials;
    cfg.seed = seed;
    Report rep = run_theorem_sweep(cfg);
    std::vector<std::pair<int64_t, double>> per_q;
    for (const ReportRow& r : rep.rows) {
        if (r.flags.find("VALIDITY_RANGE") != std::string::npos) continue;
        if (r.bound <= 0.0) continue;
        int64_t q = r.q();
        auto it = std::find_if(per_q.begin(), per_q.end(),
                               [&](const auto& e) { return e.first == q; });
        if (it == per_q.end())
            per_q.push_back({q, r.constant});
        else
            it->second = std::max(it->second, r.constant);
    }
    if (per_q.empty()) {
        est.reason = "no instance inside the validity range";
        return est;
    }
    std::sort(per_q.begin(), per_q.end());
    est.applicable = true;
    est.per_q = per_q;
    for (const auto& e : per_q) est.max_constant = std::max(est.max_constant, e.second);
    if (per_q.size() >= 2 && per_q.front().second > 0.0)
        est.growth_flag = per_q.back().second > 2.0 * per_q.front().second;
    return est;
}

}  // namespace ffgeom
