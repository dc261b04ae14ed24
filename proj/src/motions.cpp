#include "ffgeom/motions.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "ffgeom/errors.hpp"

namespace ffgeom {

namespace {
constexpr double kGroupBudget = double(1 << 22);
constexpr int64_t kMotionBudget = int64_t(1) << 24;
}  // namespace

bool Mat::operator==(const Mat& o) const {
    if (d != o.d) return false;
    return std::equal(e.begin(), e.begin() + d * d, o.e.begin());
}

bool Mat::operator<(const Mat& o) const {
    return std::lexicographical_compare(e.begin(), e.begin() + d * d, o.e.begin(), o.e.begin() + o.d * o.d);
}

Mat mat_identity(int d) {
    Mat m;
    m.d = d;
    for (int i = 0; i < d; ++i) m.set(i, i, 1);
    return m;
}

Mat mat_mul(const Field& F, const Mat& a, const Mat& b) {
    if (a.d != b.d) throw ShapeError("matrix dimension mismatch");
    Mat c;
    c.d = a.d;
    for (int i = 0; i < a.d; ++i)
        for (int j = 0; j < a.d; ++j) {
            int s = 0;
            for (int k = 0; k < a.d; ++k) s = F.add(s, F.mul(a.at(i, k), b.at(k, j)));
            c.set(i, j, s);
        }
    return c;
}

Mat mat_transpose(const Mat& a) {
    Mat t;
    t.d = a.d;
    for (int i = 0; i < a.d; ++i)
        for (int j = 0; j < a.d; ++j) t.set(j, i, a.at(i, j));
    return t;
}

bool is_orthogonal(const Field& F, const Mat& g) {
    for (int i = 0; i < g.d; ++i)
        for (int j = i; j < g.d; ++j) {
            int s = 0;
            for (int k = 0; k < g.d; ++k) s = F.add(s, F.mul(g.at(k, i), g.at(k, j)));
            if (s != (i == j ? 1 : 0)) return false;
        }
    return true;
}

int64_t apply_mat(const VecSpace& S, const Mat& g, int64_t x) {
    if (g.d != S.dim()) throw ShapeError("matrix does not match the space");
    const Field& F = S.field();
    int xs[kMaxMatDim];
    S.decode(x, xs);
    int64_t out = 0;
    for (int i = 0; i < g.d; ++i) {
        int s = 0;
        for (int j = 0; j < g.d; ++j) s = F.add(s, F.mul(g.at(i, j), xs[j]));
        out += (int64_t)s * S.unit(i);
    }
    return out;
}

PointSet apply_mat_set(const Mat& g, const PointSet& A) {
    const VecSpace& S = A.space();
    PointSet r(S);
    A.for_each([&](int64_t x) { r.set(apply_mat(S, g, x)); });
    return r;
}

double orthogonal_group_order_formula(int d, int q) {
    if (d == 1) return 2.0;
    if (d % 2 == 1) {
        int k = d / 2;
        double ord = 2.0 * std::pow((double)q, (double)k * k);
        for (int i = 1; i <= k; ++i) ord *= std::pow((double)q, 2.0 * i) - 1.0;
        return ord;
    }
    int k = d / 2;
    // Type of x1^2+...+xd^2: plus iff (-1)^k is a square.
    int eps;
    if (k % 2 == 0)
        eps = 1;
    else
        eps = (q % 4 == 1) ? 1 : -1;
    double ord = 2.0 * std::pow((double)q, (double)k * (k - 1));
    ord *= std::pow((double)q, (double)k) - eps;
    for (int i = 1; i <= k - 1; ++i) ord *= std::pow((double)q, 2.0 * i) - 1.0;
    return ord;
}

namespace {

// Depth-first column extension: at depth k, candidates are the unit vectors
// orthogonal to all previously chosen columns.
void extend_columns(const VecSpace& S, std::vector<int64_t>& cols, const std::vector<int64_t>& cands,
                    std::vector<Mat>& out) {
    const int d = S.dim();
    if ((int)cols.size() == d) {
        Mat g;
        g.d = d;
        int c[kMaxMatDim];
        for (int j = 0; j < d; ++j) {
            S.decode(cols[j], c);
            for (int i = 0; i < d; ++i) g.set(i, j, c[i]);
        }
        out.push_back(g);
        return;
    }
    for (int64_t v : cands) {
        std::vector<int64_t> next;
        next.reserve(cands.size() / 2 + 1);
        for (int64_t w : cands)
            if (S.dot(v, w) == 0) next.push_back(w);
        cols.push_back(v);
        extend_columns(S, cols, next, out);
        cols.pop_back();
    }
}

}  // namespace

std::vector<Mat> orthogonal_group(const Field& F, int d) {
    if (d < 1 || d > kMaxMatDim) throw Unsupported("orthogonal group enumeration supports 1 <= d <= 5");
    if (orthogonal_group_order_formula(d, F.q()) > kGroupBudget)
        throw ResourceError("orthogonal group exceeds enumeration budget");
    VecSpace S(F, d);

    std::vector<int64_t> units;
    for (int64_t v = 0; v < S.size(); ++v)
        if (S.norm(v) == 1) units.push_back(v);

    std::vector<std::vector<Mat>> parts(units.size());
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < (int64_t)units.size(); ++i) {
        std::vector<int64_t> cands;
        for (int64_t w : units)
            if (S.dot(units[i], w) == 0) cands.push_back(w);
        std::vector<int64_t> cols{units[i]};
        extend_columns(S, cols, cands, parts[i]);
    }

    std::vector<Mat> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace ref {

std::vector<Mat> orthogonal_group_bruteforce(const Field& F, int d) {
    if (d < 1 || d > 3) throw ResourceError("brute-force group enumeration is for d <= 3");
    const int q = F.q();
    double total = std::pow((double)q, (double)d * d);
    if (total > 4e6) throw ResourceError("brute-force group enumeration budget exceeded");
    std::vector<Mat> out;
    int64_t n = (int64_t)total;
    for (int64_t code = 0; code < n; ++code) {
        Mat g;
        g.d = d;
        int64_t c = code;
        for (int i = 0; i < d * d; ++i) {
            g.e[i] = (uint8_t)(c % q);
            c /= q;
        }
        if (is_orthogonal(F, g)) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ref

std::vector<Mat> stabilizer(const VecSpace& S, const std::vector<Mat>& group, int64_t v) {
    std::vector<Mat> out;
    for (const Mat& g : group)
        if (apply_mat(S, g, v) == v) out.push_back(g);
    return out;
}

bool group_contains(const std::vector<Mat>& sorted_group, const Mat& g) {
    return std::binary_search(sorted_group.begin(), sorted_group.end(), g);
}

MotionSet all_rigid_motions(const VecSpace& S) {
    auto group = std::make_shared<std::vector<Mat>>(orthogonal_group(S.field(), S.dim()));
    if ((int64_t)group->size() * S.size() > kMotionBudget)
        throw ResourceError("rigid motion set exceeds budget");
    std::vector<Motion> items;
    items.reserve(group->size() * S.size());
    for (int32_t g = 0; g < (int32_t)group->size(); ++g)
        for (int64_t z = 0; z < S.size(); ++z) items.push_back({g, z});
    return MotionSet{&S, std::move(group), std::move(items)};
}

MotionSet make_motion_set(const VecSpace& S, std::shared_ptr<const std::vector<Mat>> group,
                          std::vector<Motion> items) {
    for (const Motion& m : items) {
        if (m.g < 0 || m.g >= (int32_t)group->size()) throw DomainError("motion references unknown matrix");
        if (m.z < 0 || m.z >= S.size()) throw DomainError("motion translation out of range");
    }
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return MotionSet{&S, std::move(group), std::move(items)};
}

int64_t motion_apply(const VecSpace& S, const Mat& g, int64_t z, int64_t x) {
    return S.add(apply_mat(S, g, x), z);
}

std::pair<Mat, int64_t> motion_compose(const VecSpace& S, const Mat& g2, int64_t z2, const Mat& g1,
                                       int64_t z1) {
    return {mat_mul(S.field(), g2, g1), S.add(apply_mat(S, g2, z1), z2)};
}

std::pair<Mat, int64_t> motion_inverse(const VecSpace& S, const Mat& g, int64_t z) {
    Mat gt = mat_transpose(g);
    return {gt, S.negate(apply_mat(S, gt, z))};
}

void save_group_cache(std::ostream& out, const Field& F, int d, const std::vector<Mat>& group) {
    uint32_t hdr[3] = {(uint32_t)F.p(), (uint32_t)F.ell(), (uint32_t)d};
    uint64_t count = group.size();
    out.write((const char*)hdr, sizeof hdr);
    out.write((const char*)&count, sizeof count);
    for (const Mat& g : group) out.write((const char*)g.e.data(), d * d);
}

std::vector<Mat> load_group_cache(std::istream& in, const Field& F, int d) {
    uint32_t hdr[3];
    uint64_t count;
    in.read((char*)hdr, sizeof hdr);
    in.read((char*)&count, sizeof count);
    if (!in) throw ParseError("truncated group cache header");
    if ((int)hdr[0] != F.p() || (int)hdr[1] != F.ell() || (int)hdr[2] != d)
        throw ShapeError("group cache header does not match the requested field/dimension");
    if (count > (uint64_t)kGroupBudget) throw ParseError("group cache count exceeds budget");
    std::vector<Mat> out((size_t)count);
    for (auto& g : out) {
        g.d = d;
        in.read((char*)g.e.data(), d * d);
        if (!in) throw ParseError("truncated group cache body");
        for (int i = 0; i < d * d; ++i)
            if (g.e[i] >= F.q()) throw ParseError("group cache entry out of field range");
        if (!is_orthogonal(F, g)) throw ParseError("group cache contains a non-orthogonal matrix");
    }
    for (size_t i = 1; i < out.size(); ++i)
        if (!(out[i - 1] < out[i])) throw ParseError("group cache is not in canonical order");
    return out;
}

}  // namespace ffgeom
