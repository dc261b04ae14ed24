#include "ffgeom/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ffgeom/errors.hpp"

namespace ffgeom {

namespace {

constexpr int64_t kSearchSpaceBudget = int64_t(1) << 16;
constexpr int64_t kSearchNodeBudget = 200'000'000;

// All nonzero isotropic vectors, lex order on coordinates with the first
// coordinate most significant (last coordinate moves fastest).
std::vector<int64_t> isotropic_candidates_lex(const VecSpace& S) {
    const int d = S.dim();
    const int q = S.field().q();
    std::vector<int> x(d, 0);
    std::vector<int64_t> out;
    while (true) {
        int64_t idx = S.encode(x.data());
        if (idx != 0 && S.norm(idx) == 0) out.push_back(idx);
        int i = d - 1;
        while (i >= 0 && ++x[i] == q) x[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

std::vector<int> coords_of(const VecSpace& S, int64_t idx) {
    std::vector<int> v(S.dim());
    S.decode(idx, v.data());
    return v;
}

void validate_progression(const VecSpace& S, const std::vector<int>& x_prog) {
    const int q = S.field().q();
    std::set<int> seen;
    for (int e : x_prog) {
        if (e < 0 || e >= q) throw DomainError("progression entry outside the field");
        if (!seen.insert(e).second) throw DomainError("progression entries must be distinct");
    }
}

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

std::vector<int> ap_step1(const Field& F, int len) {
    if (len < 0 || len > F.p()) throw DomainError("step-1 progression length must be in [0, p]");
    std::vector<int> out(len);
    for (int i = 0; i < len; ++i) out[i] = i;
    return out;
}

IsotropicResult mutually_isotropic_vectors(const VecSpace& S, int count) {
    if (count < 0) throw DomainError("count must be nonnegative");
    if (2 * count > S.dim()) throw DomainError("no totally isotropic frame can exceed dim/2");
    if (S.size() > kSearchSpaceBudget) throw ResourceError("isotropic search space too large");

    IsotropicResult res;
    if (count == 0) {
        res.feasible = true;
        return res;
    }

    const Field& F = S.field();
    const std::vector<int64_t> cands = isotropic_candidates_lex(S);
    std::vector<int64_t> chosen;
    std::vector<std::vector<int>> rows;

    // Frames are kept lex-increasing; the conditions are symmetric, so this
    // loses no frame up to reordering, and exhausting the tree certifies
    // infeasibility.
    std::function<bool(size_t)> grow = [&](size_t from) -> bool {
        const Subspace cur = rref_span(F, S.dim(), rows);
        for (size_t pos = from; pos < cands.size(); ++pos) {
            if (++res.nodes_visited > kSearchNodeBudget)
                throw ResourceError("isotropic search exceeded its node budget");
            const int64_t v = cands[pos];
            bool ok = true;
            for (int64_t c : chosen)
                if (S.dot(c, v) != 0) {
                    ok = false;
                    break;
                }
            if (!ok || subspace_contains(S, cur, v)) continue;
            chosen.push_back(v);
            rows.push_back(coords_of(S, v));
            if ((int)chosen.size() == count || grow(pos + 1)) return true;
            chosen.pop_back();
            rows.pop_back();
        }
        return false;
    };

    if (grow(0)) {
        res.feasible = true;
        res.vectors = chosen;
    }
    return res;
}

PointSet subspace_example(const VecSpace& S, int k) {
    if (k < 0 || k > S.dim()) throw DomainError("span dimension out of range");
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < k; ++i) {
        std::vector<int> e(S.dim(), 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return span_set(S, rref_span(S.field(), S.dim(), rows));
}

SetPair isotropic_span_lattice(const VecSpace& S, const std::vector<int64_t>& vectors,
                               const std::vector<int>& x_prog) {
    const Field& F = S.field();
    const int d = S.dim();
    validate_progression(S, x_prog);
    const int64_t ed = S.unit(d - 1);
    for (size_t i = 0; i < vectors.size(); ++i) {
        for (size_t j = i; j < vectors.size(); ++j)
            if (S.dot(vectors[i], vectors[j]) != 0)
                throw ConstructionError("vectors are not mutually isotropic");
        if (S.dot(vectors[i], ed) != 0)
            throw ConstructionError("vectors must be orthogonal to the progression direction");
    }
    std::vector<std::vector<int>> rows;
    for (int64_t v : vectors) rows.push_back(coords_of(S, v));
    const Subspace W = rref_span(F, d, rows);
    if (W.m != (int)vectors.size()) throw ConstructionError("vectors are linearly dependent");

    const PointSet span = span_set(S, W);
    PointSet a(S);
    span.for_each([&](int64_t s) {
        for (int x : x_prog) a.set(S.add(s, S.scale(x, ed)));
    });
    const int64_t expect = ipow(F.q(), W.m) * (int64_t)x_prog.size();
    if (a.card() != expect) throw ConstructionError("lattice sum is not direct");
    return {a, a};
}

SetPair isotropic_box_pair(const VecSpace& S, const std::vector<int>& x_prog) {
    const Field& F = S.field();
    const int d = S.dim();
    if (d % 2 == 0 || d < 3) throw ConstructionError("odd dimension >= 3 required");
    validate_progression(S, x_prog);
    const int k = (d - 1) / 2;

    // The frame lives in the hyperplane x_d = 0; with the first coordinate
    // least significant, indices below q^{d-1} embed unchanged.
    VecSpace H(F, d - 1);
    IsotropicResult frame = mutually_isotropic_vectors(H, k);
    if (!frame.feasible)
        throw ConstructionError("no isotropic frame exists in the hyperplane for this field");

    PointSet a(S);
    const int n = (int)x_prog.size();
    if (n > 0) {
        std::vector<int> c(k, 0);
        while (true) {
            int64_t s = 0;
            for (int i = 0; i < k; ++i) s = S.add(s, S.scale(x_prog[c[i]], frame.vectors[i]));
            a.set(s);
            int i = 0;
            while (i < k && ++c[i] == n) c[i++] = 0;
            if (i == k) break;
        }
    }
    PointSet b(S);
    const int64_t ed = S.unit(d - 1);
    a.for_each([&](int64_t s) {
        for (int x : x_prog) b.set(S.add(s, S.scale(x, ed)));
    });
    if (a.card() != ipow(n, k)) throw ConstructionError("box sum is not direct");
    if (b.card() != ipow(n, k + 1)) throw ConstructionError("progression extension is not direct");
    return {a, b};
}

SetPair slab_progression_pair(const VecSpace& S, const Mat& g0, const std::vector<int>& x_prog) {
    const Field& F = S.field();
    const int d = S.dim();
    if (d % 2 == 0) throw ConstructionError("odd dimension required");
    validate_progression(S, x_prog);
    if (g0.d != d || !is_orthogonal(F, g0)) throw ConstructionError("g0 must be orthogonal");
    const int k = (d - 1) / 2;
    const int q = F.q();

    PointSet a(S);
    std::vector<int> v(d, 0);
    std::vector<int> c(std::max(k, 1), 0);
    for (int x : x_prog) {
        std::fill(v.begin(), v.end(), 0);
        v[d - 1] = x;
        std::fill(c.begin(), c.end(), 0);
        while (true) {
            for (int i = 0; i < k; ++i) v[i] = c[i];
            a.set(S.encode(v.data()));
            if (k == 0) break;
            int i = 0;
            while (i < k && ++c[i] == q) c[i++] = 0;
            if (i == k) break;
        }
    }
    if (a.card() != ipow(q, k) * (int64_t)x_prog.size())
        throw ConstructionError("slab cardinality mismatch");
    PointSet b = apply_mat_set(mat_transpose(g0), a);  // g0^{-1} = g0^T
    if (b.card() != a.card()) throw ConstructionError("rotation is not a bijection");
    return {a, b};
}

ProjectionSharpness projection_sharpness(const VecSpace& S, int num_cosets,
                                         const std::vector<int>& bprime) {
    const Field& F = S.field();
    if (F.ell() != 2) throw ConstructionError("the plane construction needs q = p^2");
    if (S.dim() != 2) throw ConstructionError("the plane construction needs dimension 2");
    const int p = F.p();
    const int q = F.q();
    if (num_cosets < 1 || num_cosets > p - 1)
        throw ConstructionError("num_cosets must be in [1, p-1]");
    if (bprime.empty()) throw ConstructionError("B' must be nonempty");
    std::set<int> bset;
    for (int b : bprime) {
        if (b < 0 || b >= p) throw ConstructionError("B' must lie in the prime subfield");
        if (!bset.insert(b).second) throw ConstructionError("B' entries must be distinct");
    }

    ProjectionSharpness out;

    // A1: nonzero cosets a1 t + F_p; the field index of j + a1 t is j + p a1.
    for (int a1 = 1; a1 <= num_cosets; ++a1)
        for (int j = 0; j < p; ++j) out.a1.push_back(j + p * a1);

    // A2 = F_p^*: 1/y ranges over it exactly when y does.
    std::vector<int> a2;
    for (int y = 1; y < p; ++y) a2.push_back(y);

    // C = A1 + B' A2 collects every slope a difference a - b can have.
    std::set<int> cset;
    for (int s : out.a1)
        for (int b : bprime)
            for (int t : a2) cset.insert(F.add(s, F.mul(b, t)));
    out.slopes.assign(cset.begin(), cset.end());

    PointSet a(S);
    int v[2];
    for (int s : out.a1)
        for (int y : a2) {
            v[0] = F.mul(s, y);
            v[1] = y;
            a.set(S.encode(v));
        }
    PointSet b(S);
    for (int e : bprime) {
        v[0] = F.neg(e);
        v[1] = 0;
        b.set(S.encode(v));
    }
    if (a.card() != (int64_t)num_cosets * p * (p - 1))
        throw ConstructionError("A cardinality mismatch");
    if (b.card() != (int64_t)bprime.size()) throw ConstructionError("B cardinality mismatch");
    out.a = a;
    out.b = b;

    // A line is bad exactly when its perp direction (w1, w2) has w2 != 0 and
    // slope w1/w2 in C; differences a - b have nonzero second coordinate, so
    // the vertical perp direction can never capture one.
    for (const Subspace& W : enumerate_grassmannian(F, 2, 1)) {
        const Subspace perp = orthogonal_complement(F, W);
        const int w1 = perp.at(0, 0), w2 = perp.at(0, 1);
        const bool bad = w2 != 0 && cset.count(F.mul(w1, F.inv(w2))) > 0;
        if (!bad) out.good_lines.push_back(W);
    }
    if ((int64_t)out.good_lines.size() < (int64_t)q + 1 - (int64_t)out.slopes.size())
        throw ConstructionError("fewer good lines than the slope count allows");

    for (const Subspace& W : out.good_lines)
        if (PointSet::intersection_card(project(a, W), project(b, W)) != 0)
            throw ConstructionError("projection overlap on a line classified good");
    return out;
}

ProjectionSharpness projection_sharpness(const VecSpace& S, int num_cosets) {
    std::vector<int> bprime(S.field().p());
    for (int i = 0; i < (int)bprime.size(); ++i) bprime[i] = i;
    return projection_sharpness(S, num_cosets, bprime);
}

ConstructionKind construction_kind_from_name(const std::string& name) {
    if (name == "subspace_example") return ConstructionKind::SubspaceExample;
    if (name == "ap_lattice") return ConstructionKind::ApLattice;
    if (name == "isotropic_lattice") return ConstructionKind::IsotropicLattice;
    if (name == "small_A_large_B") return ConstructionKind::SmallALargeB;
    if (name == "projection_sharpness") return ConstructionKind::ProjectionSharpness;
    throw ParseError("unknown construction kind: " + name);
}

std::string construction_kind_name(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::SubspaceExample: return "subspace_example";
        case ConstructionKind::ApLattice: return "ap_lattice";
        case ConstructionKind::IsotropicLattice: return "isotropic_lattice";
        case ConstructionKind::SmallALargeB: return "small_A_large_B";
        case ConstructionKind::ProjectionSharpness: return "projection_sharpness";
    }
    throw DomainError("unhandled construction kind");
}

ConstructionResult run_construction(const VecSpace& S, const ConstructionSpec& spec) {
    const Field& F = S.field();
    ConstructionResult out;
    switch (spec.kind) {
        case ConstructionKind::SubspaceExample: {
            out.a = subspace_example(S, spec.k);
            out.b = out.a;
            break;
        }
        case ConstructionKind::ApLattice: {
            const std::vector<Mat> group = orthogonal_group(F, S.dim());
            const Mat I = mat_identity(S.dim());
            const Mat* g0 = nullptr;
            for (const Mat& g : group)
                if (!(g == I)) {
                    g0 = &g;
                    break;
                }
            if (!g0) throw ConstructionError("orthogonal group has no rotation to use");
            SetPair pr = slab_progression_pair(S, *g0, ap_step1(F, spec.x_len));
            out.a = pr.a;
            out.b = pr.b;
            break;
        }
        case ConstructionKind::IsotropicLattice: {
            if (S.dim() % 2 == 0 || S.dim() < 3)
                throw ConstructionError("odd dimension >= 3 required");
            VecSpace H(F, S.dim() - 1);
            IsotropicResult frame = mutually_isotropic_vectors(H, (S.dim() - 1) / 2);
            if (!frame.feasible)
                throw ConstructionError("no isotropic frame exists in the hyperplane for this field");
            SetPair pr = isotropic_span_lattice(S, frame.vectors, ap_step1(F, spec.x_len));
            out.a = pr.a;
            out.b = pr.b;
            break;
        }
        case ConstructionKind::SmallALargeB: {
            SetPair pr = isotropic_box_pair(S, ap_step1(F, spec.x_len));
            out.a = pr.a;
            out.b = pr.b;
            break;
        }
        case ConstructionKind::ProjectionSharpness: {
            ProjectionSharpness ps = projection_sharpness(S, spec.num_cosets);
            out.a = ps.a;
            out.b = ps.b;
            out.good_lines = std::move(ps.good_lines);
            out.slopes = std::move(ps.slopes);
            break;
        }
    }
    return out;
}

}  // namespace ffgeom
