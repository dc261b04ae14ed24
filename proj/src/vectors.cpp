#include "ffgeom/vectors.hpp"

#include <bit>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "ffgeom/errors.hpp"

namespace ffgeom {

namespace {
constexpr int64_t kUniverseBudget = int64_t(1) << 24;
}

VecSpace::VecSpace(const Field& F, int d) : F_(&F), d_(d) {
    if (d < 1) throw ShapeError("dimension must be >= 1");
    size_ = 1;
    qpow_.resize(d + 1);
    for (int i = 0; i < d; ++i) {
        qpow_[i] = size_;
        size_ *= F.q();
        if (size_ > kUniverseBudget) throw ResourceError("q^d exceeds dense universe budget");
    }
    qpow_[d] = size_;

    norm_t_.resize(size_);
    neg_t_.resize(size_);
    std::vector<int> x(d);
    for (int64_t idx = 0; idx < size_; ++idx) {
        decode(idx, x.data());
        int n = 0;
        int64_t ng = 0;
        for (int i = 0; i < d; ++i) {
            n = F.add(n, F.mul(x[i], x[i]));
            ng += (int64_t)F.neg(x[i]) * qpow_[i];
        }
        norm_t_[idx] = n;
        neg_t_[idx] = (int32_t)ng;
    }
}

int64_t VecSpace::encode(const int* coords) const {
    int64_t idx = 0;
    for (int i = 0; i < d_; ++i) idx += (int64_t)coords[i] * qpow_[i];
    return idx;
}

void VecSpace::decode(int64_t idx, int* coords) const {
    int q = F_->q();
    for (int i = 0; i < d_; ++i) {
        coords[i] = (int)(idx % q);
        idx /= q;
    }
}

int64_t VecSpace::add(int64_t a, int64_t b) const {
    int q = F_->q();
    int64_t out = 0;
    for (int i = 0; i < d_; ++i) {
        out += (int64_t)F_->add((int)(a % q), (int)(b % q)) * qpow_[i];
        a /= q;
        b /= q;
    }
    return out;
}

int64_t VecSpace::sub(int64_t a, int64_t b) const { return add(a, neg_t_[b]); }

int64_t VecSpace::scale(int s, int64_t a) const {
    int q = F_->q();
    int64_t out = 0;
    for (int i = 0; i < d_; ++i) {
        out += (int64_t)F_->mul(s, (int)(a % q)) * qpow_[i];
        a /= q;
    }
    return out;
}

int VecSpace::dot(int64_t a, int64_t b) const {
    int q = F_->q();
    int s = 0;
    for (int i = 0; i < d_; ++i) {
        s = F_->add(s, F_->mul((int)(a % q), (int)(b % q)));
        a /= q;
        b /= q;
    }
    return s;
}

PointSet::PointSet(const VecSpace& S) : S_(&S), bits_((S.size() + 63) / 64, 0) {}

void PointSet::check_same(const PointSet& o) const {
    if (!S_ || !o.S_ || !(*S_ == *o.S_)) throw ShapeError("point sets live in different spaces");
}

int64_t PointSet::card() const {
    int64_t n = 0;
    for (uint64_t w : bits_) n += std::popcount(w);
    return n;
}

int64_t PointSet::intersection_card(const PointSet& a, const PointSet& b) {
    a.check_same(b);
    int64_t n = 0;
    for (size_t i = 0; i < a.bits_.size(); ++i) n += std::popcount(a.bits_[i] & b.bits_[i]);
    return n;
}

PointSet PointSet::operator&(const PointSet& o) const {
    check_same(o);
    PointSet r(*S_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
}

PointSet PointSet::operator|(const PointSet& o) const {
    check_same(o);
    PointSet r(*S_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
}

PointSet PointSet::minus(const PointSet& o) const {
    check_same(o);
    PointSet r(*S_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & ~o.bits_[i];
    return r;
}

bool PointSet::operator==(const PointSet& o) const {
    check_same(o);
    return bits_ == o.bits_;
}

PointSet PointSet::translate(int64_t z) const {
    PointSet r(*S_);
    for_each([&](int64_t x) { r.set(S_->add(x, z)); });
    return r;
}

PointSet PointSet::negate() const {
    PointSet r(*S_);
    for_each([&](int64_t x) { r.set(S_->negate(x)); });
    return r;
}

std::vector<int64_t> PointSet::members() const {
    std::vector<int64_t> v;
    v.reserve(card());
    for_each([&](int64_t x) { v.push_back(x); });
    return v;
}

PointSet full_set(const VecSpace& S) {
    PointSet r(S);
    for (int64_t i = 0; i < S.size(); ++i) r.set(i);
    return r;
}

PointSet set_of(const VecSpace& S, const std::vector<int64_t>& members) {
    PointSet r(S);
    for (int64_t m : members) {
        if (m < 0 || m >= S.size()) throw DomainError("member index out of range");
        r.set(m);
    }
    return r;
}

PointSet sphere(const VecSpace& S, int j) {
    if (j < 0 || j >= S.field().q()) throw DomainError("sphere radius must be a field element");
    PointSet r(S);
    for (int64_t i = 0; i < S.size(); ++i)
        if (S.norm(i) == j) r.set(i);
    return r;
}

void save_pointset_text(std::ostream& out, const PointSet& A) {
    const VecSpace& S = A.space();
    out << "q=" << S.field().q() << " d=" << S.dim() << "\n";
    std::vector<int> x(S.dim());
    A.for_each([&](int64_t idx) {
        S.decode(idx, x.data());
        for (int i = 0; i < S.dim(); ++i) out << (i ? "," : "") << x[i];
        out << "\n";
    });
}

std::pair<int, int> peek_pointset_header(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty point-set stream");
    int q = 0, d = 0;
    if (std::sscanf(line.c_str(), "q=%d d=%d", &q, &d) != 2 || q < 2 || d < 1)
        throw ParseError("bad point-set header: " + line);
    return {q, d};
}

PointSet load_pointset_text(std::istream& in, const VecSpace& S) {
    auto [q, d] = peek_pointset_header(in);
    if (q != S.field().q() || d != S.dim()) throw ShapeError("point-set header does not match the space");
    PointSet A(S);
    std::string line;
    std::vector<int> x(d);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        for (int i = 0; i < d; ++i) {
            std::string tok;
            if (!std::getline(ss, tok, ',')) throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(d) + " coordinates");
            try {
                x[i] = std::stoi(tok);
            } catch (...) {
                throw ParseError("line " + std::to_string(lineno) + ": bad coordinate '" + tok + "'");
            }
            if (x[i] < 0 || x[i] >= q) throw ParseError("line " + std::to_string(lineno) + ": coordinate out of range");
        }
        std::string extra;
        if (std::getline(ss, extra, ',')) throw ParseError("line " + std::to_string(lineno) + ": too many coordinates");
        A.set(S.encode(x.data()));
    }
    return A;
}

PointSet product_set(const VecSpace& pair_space, const PointSet& A, const PointSet& B) {
    const VecSpace& SA = A.space();
    const VecSpace& SB = B.space();
    if (!(SA == SB)) throw ShapeError("product factors live in different spaces");
    if (!(pair_space.field() == SA.field()) || pair_space.dim() != 2 * SA.dim())
        throw ShapeError("pair space does not match the factors");
    int64_t half = SA.size();
    PointSet P(pair_space);
    A.for_each([&](int64_t x) { B.for_each([&](int64_t y) { P.set(x + half * y); }); });
    return P;
}

}  // namespace ffgeom
