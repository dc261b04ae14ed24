#pragma once

// The orthogonal group O(d,q) = { g : g^T g = I } enumerated explicitly in a
// canonical (lexicographic, row-major) order, and rigid motions x -> g x + z
// built on top of it. Desk-scale only: enumeration is budgeted.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "ffgeom/vectors.hpp"

namespace ffgeom {

constexpr int kMaxMatDim = 5;

struct Mat {
    int d = 0;
    std::array<uint8_t, kMaxMatDim * kMaxMatDim> e{};  // row-major

    int at(int i, int j) const { return e[i * d + j]; }
    void set(int i, int j, int v) { e[i * d + j] = (uint8_t)v; }

    bool operator==(const Mat& o) const;
    bool operator<(const Mat& o) const;  // lexicographic on row-major entries
};

Mat mat_identity(int d);
Mat mat_mul(const Field& F, const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
bool is_orthogonal(const Field& F, const Mat& g);

int64_t apply_mat(const VecSpace& S, const Mat& g, int64_t x);
PointSet apply_mat_set(const Mat& g, const PointSet& A);

// |O(d,q)| from the classical order formulas; used only for budgeting.
double orthogonal_group_order_formula(int d, int q);

// Column-extension enumeration; sorted canonically, duplicate-free.
// Throws ResourceError when the estimated order exceeds the budget.
std::vector<Mat> orthogonal_group(const Field& F, int d);

namespace ref {
// Filters all q^{d^2} matrices; the oracle for small (d,q).
std::vector<Mat> orthogonal_group_bruteforce(const Field& F, int d);
}  // namespace ref

// Members g of `group` with g v = v.
std::vector<Mat> stabilizer(const VecSpace& S, const std::vector<Mat>& group, int64_t v);

bool group_contains(const std::vector<Mat>& sorted_group, const Mat& g);

struct Motion {
    int32_t g;   // index into the shared group list
    int64_t z;   // translation, as a vector index

    bool operator==(const Motion& o) const { return g == o.g && z == o.z; }
    bool operator<(const Motion& o) const { return g != o.g ? g < o.g : z < o.z; }
};

// A deduplicated, (g,z)-ordered list of rigid motions over one space.
struct MotionSet {
    const VecSpace* S = nullptr;
    std::shared_ptr<const std::vector<Mat>> group;
    std::vector<Motion> items;

    const VecSpace& space() const { return *S; }
    const Mat& mat_of(const Motion& m) const { return (*group)[m.g]; }
    int64_t size() const { return (int64_t)items.size(); }
};

MotionSet all_rigid_motions(const VecSpace& S);
MotionSet make_motion_set(const VecSpace& S, std::shared_ptr<const std::vector<Mat>> group,
                          std::vector<Motion> items);

int64_t motion_apply(const VecSpace& S, const Mat& g, int64_t z, int64_t x);  // g x + z
// (g2,z2) o (g1,z1) = (g2 g1, g2 z1 + z2).
std::pair<Mat, int64_t> motion_compose(const VecSpace& S, const Mat& g2, int64_t z2,
                                       const Mat& g1, int64_t z1);
// Inverse of (g,z) is (g^T, -g^T z).
std::pair<Mat, int64_t> motion_inverse(const VecSpace& S, const Mat& g, int64_t z);

// Binary cache: header (p, ell, d, count) then row-major entries.
// The loader re-verifies g^T g = I for every row and the canonical order.
void save_group_cache(std::ostream& out, const Field& F, int d, const std::vector<Mat>& group);
std::vector<Mat> load_group_cache(std::istream& in, const Field& F, int d);

}  // namespace ffgeom
