#pragma once

// Dense representation of F_q^d: vectors are mixed-radix indices in [0, q^d)
// with the first coordinate least significant, and subsets are bit vectors
// over that index space. Everything downstream (spectra, motions, incidence
// counts, projections) works on these indices.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ffgeom/field.hpp"

namespace ffgeom {

class VecSpace {
public:
    // Throws ResourceError when q^d exceeds the dense-universe budget.
    VecSpace(const Field& F, int d);

    const Field& field() const { return *F_; }
    int dim() const { return d_; }
    int64_t size() const { return size_; }  // q^d

    int64_t encode(const int* coords) const;
    void decode(int64_t idx, int* coords) const;
    int coord(int64_t idx, int i) const { return (int)(idx / qpow_[i] % F_->q()); }

    int64_t add(int64_t a, int64_t b) const;
    int64_t sub(int64_t a, int64_t b) const;
    int64_t negate(int64_t a) const { return neg_t_[a]; }
    int64_t scale(int s, int64_t a) const;
    int dot(int64_t a, int64_t b) const;
    // x1^2 + ... + xd^2 as a field element.
    int norm(int64_t a) const { return norm_t_[a]; }

    int64_t unit(int i) const { return qpow_[i]; }  // e_{i+1}

    bool operator==(const VecSpace& o) const { return F_ == o.F_ && d_ == o.d_; }

private:
    const Field* F_;
    int d_;
    int64_t size_;
    std::vector<int64_t> qpow_;
    std::vector<int32_t> norm_t_, neg_t_;
};

class PointSet {
public:
    PointSet() : S_(nullptr) {}
    explicit PointSet(const VecSpace& S);

    const VecSpace& space() const { return *S_; }

    bool test(int64_t idx) const { return (bits_[idx >> 6] >> (idx & 63)) & 1; }
    void set(int64_t idx) { bits_[idx >> 6] |= 1ull << (idx & 63); }
    void reset(int64_t idx) { bits_[idx >> 6] &= ~(1ull << (idx & 63)); }

    int64_t card() const;
    bool empty() const { return card() == 0; }

    // Word-level AND/popcount; the universe sizes here make this the cheap path.
    static int64_t intersection_card(const PointSet& a, const PointSet& b);

    PointSet operator&(const PointSet& o) const;
    PointSet operator|(const PointSet& o) const;
    PointSet minus(const PointSet& o) const;
    bool operator==(const PointSet& o) const;

    PointSet translate(int64_t z) const;
    PointSet negate() const;

    template <class Fn>
    void for_each(Fn fn) const {
        for (size_t w = 0; w < bits_.size(); ++w) {
            uint64_t word = bits_[w];
            while (word) {
                int b = __builtin_ctzll(word);
                fn((int64_t)(w << 6) + b);
                word &= word - 1;
            }
        }
    }

    std::vector<int64_t> members() const;

    const std::vector<uint64_t>& words() const { return bits_; }

private:
    const VecSpace* S_;
    std::vector<uint64_t> bits_;
    void check_same(const PointSet& o) const;
};

PointSet full_set(const VecSpace& S);
PointSet set_of(const VecSpace& S, const std::vector<int64_t>& members);

// S_j = { x : norm(x) = j }.
PointSet sphere(const VecSpace& S, int j);

// Text format: first line "q=<q> d=<d>", then one vector per line as
// comma-separated coordinates in [0,q). Deterministic: ascending index order.
void save_pointset_text(std::ostream& out, const PointSet& A);
// Reads the header only, so callers can build the matching space first.
std::pair<int, int> peek_pointset_header(std::istream& in);
// Throws ParseError on malformed input or ShapeError on a header mismatch.
PointSet load_pointset_text(std::istream& in, const VecSpace& S);

// Pair universes: (x,y) in F_q^d x F_q^d lives at index x + q^d * y inside
// VecSpace(F, 2d); the two halves are recovered by div/mod q^d.
PointSet product_set(const VecSpace& pair_space, const PointSet& A, const PointSet& B);

}  // namespace ffgeom
