#include "ffgeom/projections.hpp"

#include <algorithm>
#include <ostream>

#include "ffgeom/errors.hpp"

namespace ffgeom {

namespace {
constexpr long long kGrassmannBudget = 1 << 22;

std::vector<int> pivots_of(const Subspace& W) {
    std::vector<int> p(W.m);
    for (int i = 0; i < W.m; ++i) {
        int j = 0;
        while (j < W.d && W.at(i, j) == 0) ++j;
        p[i] = j;
    }
    return p;
}
}  // namespace

Subspace rref_span(const Field& F, int d, const std::vector<std::vector<int>>& spanning) {
    std::vector<std::vector<int>> rows;
    for (const auto& r : spanning) {
        if ((int)r.size() != d) throw ShapeError("row length does not match dimension");
        rows.push_back(r);
    }
    int rank = 0;
    for (int col = 0; col < d && rank < (int)rows.size(); ++col) {
        int piv = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        int inv = F.inv(rows[rank][col]);
        for (int j = 0; j < d; ++j) rows[rank][j] = F.mul(inv, rows[rank][j]);
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            int c = rows[r][col];
            for (int j = 0; j < d; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(c, rows[rank][j]));
        }
        ++rank;
    }
    Subspace out;
    out.d = d;
    out.m = rank;
    out.rows.resize((size_t)rank * d);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < d; ++j) out.rows[i * d + j] = (uint8_t)rows[i][j];
    return out;
}

long long gaussian_binomial(int q, int d, int m) {
    if (m < 0 || m > d) return 0;
    // [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q
    std::vector<std::vector<long long>> t(d + 1, std::vector<long long>(d + 1, 0));
    for (int n = 0; n <= d; ++n) t[n][0] = 1;
    for (int n = 1; n <= d; ++n) {
        long long qk = 1;
        for (int k = 1; k <= n; ++k) {
            qk *= q;
            t[n][k] = t[n - 1][k - 1] + qk * t[n - 1][k];
        }
    }
    return t[d][m];
}

std::vector<Subspace> enumerate_grassmannian(const Field& F, int d, int m) {
    if (m < 0 || m > d) throw DomainError("subspace dimension out of range");
    if (gaussian_binomial(F.q(), d, m) > kGrassmannBudget)
        throw ResourceError("Grassmannian exceeds enumeration budget");
    std::vector<Subspace> out;
    if (m == 0) {
        out.push_back(Subspace{d, 0, {}});
        return out;
    }
    const int q = F.q();
    // Pivot patterns: m-subsets of columns in lexicographic order.
    std::vector<int> piv(m);
    for (int i = 0; i < m; ++i) piv[i] = i;
    while (true) {
        // Free entries: row i, columns j > piv[i] with j not a pivot.
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < m; ++i)
            for (int j = piv[i] + 1; j < d; ++j)
                if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_pos.push_back({i, j});
        std::vector<int> vals(free_pos.size(), 0);
        while (true) {
            Subspace W;
            W.d = d;
            W.m = m;
            W.rows.assign((size_t)m * d, 0);
            for (int i = 0; i < m; ++i) W.rows[i * d + piv[i]] = 1;
            for (size_t t = 0; t < free_pos.size(); ++t)
                W.rows[free_pos[t].first * d + free_pos[t].second] = (uint8_t)vals[t];
            out.push_back(std::move(W));
            size_t t = 0;
            while (t < vals.size() && ++vals[t] == q) vals[t++] = 0;
            if (t == vals.size() && !vals.empty()) break;
            if (vals.empty()) break;
        }
        // next pivot combination
        int i = m - 1;
        while (i >= 0 && piv[i] == d - m + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < m; ++j) piv[j] = piv[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace ref {

std::vector<Subspace> grassmannian_bruteforce(const Field& F, int d, int m) {
    VecSpace S(F, d);
    double tuples = std::pow((double)S.size(), (double)m);
    if (tuples > 2e7) throw ResourceError("brute-force Grassmannian budget exceeded");
    std::vector<Subspace> out;
    std::vector<int64_t> idx(m, 0);
    std::vector<std::vector<int>> rows(m, std::vector<int>(d));
    while (true) {
        for (int i = 0; i < m; ++i) {
            int c[8];
            S.decode(idx[i], c);
            for (int j = 0; j < d; ++j) rows[i][j] = c[j];
        }
        Subspace W = rref_span(F, d, rows);
        if (W.m == m) out.push_back(std::move(W));
        int i = 0;
        while (i < m && ++idx[i] == S.size()) idx[i++] = 0;
        if (i == m) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace ref

bool subspace_contains(const VecSpace& S, const Subspace& W, int64_t x) {
    return coset_reduce(S, W, x) == 0;
}

bool subspace_within(const VecSpace& S, const Subspace& A, const Subspace& B) {
    if (A.d != B.d) throw ShapeError("subspace dimensions differ");
    std::vector<int> row(A.d);
    for (int i = 0; i < A.m; ++i) {
        for (int j = 0; j < A.d; ++j) row[j] = A.at(i, j);
        if (!subspace_contains(S, B, S.encode(row.data()))) return false;
    }
    return true;
}

PointSet span_set(const VecSpace& S, const Subspace& W) {
    PointSet out(S);
    const Field& F = S.field();
    const int q = F.q();
    std::vector<int> coeff(std::max(W.m, 1), 0);
    std::vector<int> v(W.d);
    while (true) {
        for (int j = 0; j < W.d; ++j) {
            int s = 0;
            for (int i = 0; i < W.m; ++i) s = F.add(s, F.mul(coeff[i], W.at(i, j)));
            v[j] = s;
        }
        out.set(S.encode(v.data()));
        if (W.m == 0) break;
        int i = 0;
        while (i < W.m && ++coeff[i] == q) coeff[i++] = 0;
        if (i == W.m) break;
    }
    return out;
}

Subspace orthogonal_complement(const Field& F, const Subspace& W) {
    // Null space of the m x d system W x = 0 from the RREF structure.
    std::vector<int> piv = pivots_of(W);
    std::vector<std::vector<int>> basis;
    for (int f = 0; f < W.d; ++f) {
        if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
        std::vector<int> v(W.d, 0);
        v[f] = 1;
        for (int i = 0; i < W.m; ++i) v[piv[i]] = F.neg(W.at(i, f));
        basis.push_back(std::move(v));
    }
    Subspace out = rref_span(F, W.d, basis);
    if (out.m != W.d - W.m) throw DomainError("complement dimension mismatch");
    return out;
}

int64_t coset_reduce(const VecSpace& S, const Subspace& U, int64_t x) {
    if (U.m == 0) return x;
    const Field& F = S.field();
    int v[8];
    S.decode(x, v);
    std::vector<int> piv = pivots_of(U);
    for (int i = 0; i < U.m; ++i) {
        int c = v[piv[i]];
        if (c == 0) continue;
        for (int j = piv[i]; j < U.d; ++j) v[j] = F.sub(v[j], F.mul(c, U.at(i, j)));
    }
    return S.encode(v);
}

PointSet project(const PointSet& E, const Subspace& W) {
    const VecSpace& S = E.space();
    if (W.d != S.dim()) throw ShapeError("subspace does not match the space");
    Subspace U = orthogonal_complement(S.field(), W);
    PointSet keys(S);
    E.for_each([&](int64_t x) { keys.set(coset_reduce(S, U, x)); });
    return keys;
}

std::vector<ProjectionRow> projection_intersection_sweep(const PointSet& A, const PointSet& B, int m) {
    const VecSpace& S = A.space();
    if (!(S == B.space())) throw ShapeError("sets live in different spaces");
    auto grass = enumerate_grassmannian(S.field(), S.dim(), m);
    std::vector<ProjectionRow> rows(grass.size());
#pragma omp parallel for schedule(dynamic)
    for (int64_t w = 0; w < (int64_t)grass.size(); ++w) {
        PointSet pa = project(A, grass[w]);
        PointSet pb = project(B, grass[w]);
        rows[w] = ProjectionRow{(int32_t)w, pa.card(), pb.card(), PointSet::intersection_card(pa, pb)};
    }
    return rows;
}

void save_projection_csv(std::ostream& out, const Field& F, int d, int m,
                         const std::vector<ProjectionRow>& rows) {
    auto grass = enumerate_grassmannian(F, d, m);
    out << "w_index,basis,proj_a,proj_b,intersection\n";
    for (const auto& r : rows) {
        const Subspace& W = grass[r.w_index];
        out << r.w_index << ",";
        for (int i = 0; i < W.m; ++i) {
            if (i) out << "|";
            for (int j = 0; j < W.d; ++j) out << (j ? " " : "") << W.at(i, j);
        }
        out << "," << r.proj_a << "," << r.proj_b << "," << r.inter << "\n";
    }
}

std::vector<int64_t> projection_count_below(const PointSet& E, int m,
                                            const std::vector<int64_t>& thresholds) {
    const VecSpace& S = E.space();
    auto grass = enumerate_grassmannian(S.field(), S.dim(), m);
    std::vector<int64_t> sizes(grass.size());
#pragma omp parallel for schedule(dynamic)
    for (int64_t w = 0; w < (int64_t)grass.size(); ++w) sizes[w] = project(E, grass[w]).card();
    std::vector<int64_t> out(thresholds.size(), 0);
    for (size_t t = 0; t < thresholds.size(); ++t)
        for (int64_t s : sizes) out[t] += (s <= thresholds[t]);
    return out;
}

FlatFamily all_flats(const VecSpace& S, int k) {
    FlatFamily fam;
    fam.k = k;
    fam.directions = enumerate_grassmannian(S.field(), S.dim(), k);
    double total = (double)fam.directions.size() * std::pow((double)S.field().q(), (double)(S.dim() - k));
    if (total > 4e6) throw ResourceError("flat family exceeds budget");
    for (int32_t w = 0; w < (int32_t)fam.directions.size(); ++w) {
        const Subspace& W = fam.directions[w];
        for (int64_t x = 0; x < S.size(); ++x)
            if (coset_reduce(S, W, x) == x) fam.flats.push_back(Flat{w, x});
    }
    return fam;
}

int64_t flats_incidences(const VecSpace& S, const FlatFamily& K, const FlatFamily& H) {
    // Precompute direction containment between the two Grassmannians.
    std::vector<char> dir_in((size_t)K.directions.size() * H.directions.size(), 0);
    for (size_t a = 0; a < K.directions.size(); ++a)
        for (size_t b = 0; b < H.directions.size(); ++b)
            dir_in[a * H.directions.size() + b] = subspace_within(S, K.directions[a], H.directions[b]);

    int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (int64_t i = 0; i < (int64_t)K.flats.size(); ++i) {
        const Flat& kf = K.flats[i];
        int64_t acc = 0;
        for (const Flat& hf : H.flats) {
            if (!dir_in[(size_t)kf.dir * H.directions.size() + hf.dir]) continue;
            acc += subspace_contains(S, H.directions[hf.dir], S.sub(kf.base, hf.base));
        }
        total += acc;
    }
    return total;
}

}  // namespace ffgeom
