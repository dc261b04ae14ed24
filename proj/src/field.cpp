#include "ffgeom/field.hpp"

#include <cmath>

#include "ffgeom/errors.hpp"

namespace ffgeom {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int k = 2; (long long)k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

}  // namespace

Field::Field(int p, int ell) : p_(p), ell_(ell) {
    if (!is_prime(p) || p == 2) throw InvalidField("p must be an odd prime, got " + std::to_string(p));
    if (ell != 1 && ell != 2) throw Unsupported("extension degree must be 1 or 2, got " + std::to_string(ell));
    long long q = 1;
    for (int i = 0; i < ell; ++i) q *= p;
    if (q > 256) throw Unsupported("q = " + std::to_string(q) + " exceeds the table-driven limit 256");
    q_ = (int)q;

    nonres_ = 0;
    if (ell == 2) {
        for (int n = 2; n < p; ++n) {
            long long e = (p - 1) / 2, r = 1, x = n;
            while (e) {
                if (e & 1) r = r * x % p;
                x = x * x % p;
                e >>= 1;
            }
            if (r == p - 1) {
                nonres_ = n;
                break;
            }
        }
    }

    add_t_.resize((size_t)q_ * q_);
    mul_t_.resize((size_t)q_ * q_);
    neg_t_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        int a0 = a % p, a1 = a / p;
        neg_t_[a] = (uint16_t)((p - a0) % p + ((p - a1) % p) * p);
        for (int b = 0; b < q_; ++b) {
            int b0 = b % p, b1 = b / p;
            add_t_[(size_t)a * q_ + b] = (uint16_t)((a0 + b0) % p + ((a1 + b1) % p) * p);
            if (ell_ == 1) {
                mul_t_[(size_t)a * q_ + b] = (uint16_t)(a0 * b0 % p);
            } else {
                int c0 = (a0 * b0 + nonres_ * a1 % p * b1) % p;
                int c1 = (a0 * b1 + a1 * b0) % p;
                mul_t_[(size_t)a * q_ + b] = (uint16_t)(c0 + c1 * p);
            }
        }
    }

    inv_t_.assign(q_, 0);
    for (int a = 1; a < q_; ++a) {
        if (inv_t_[a]) continue;
        for (int b = 1; b < q_; ++b)
            if (mul_t_[(size_t)a * q_ + b] == 1) {
                inv_t_[a] = (uint16_t)b;
                inv_t_[b] = (uint16_t)a;
                break;
            }
    }

    frob_t_.resize(q_);
    trace_t_.resize(q_);
    eta_t_.resize(q_);
    chi_t_.resize(q_);
    std::vector<cplx> root(p);
    for (int k = 0; k < p; ++k)
        root[k] = cplx(std::cos(2.0 * M_PI * k / p), std::sin(2.0 * M_PI * k / p));
    for (int a = 0; a < q_; ++a) {
        int f = pow(a, p);
        frob_t_[a] = (uint16_t)f;
        int tr = (ell_ == 1) ? a : add_t_[(size_t)a * q_ + f];
        trace_t_[a] = (uint16_t)tr;  // lies in the prime subfield, index < p
        chi_t_[a] = root[tr % p];
        if (a == 0)
            eta_t_[a] = 0;
        else
            eta_t_[a] = (int8_t)(pow(a, (q_ - 1) / 2) == 1 ? 1 : -1);
    }
}

int Field::inv(int a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return inv_t_[a];
}

int Field::pow(int a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    int r = 1, x = a;
    while (e) {
        if (e & 1) r = mul_t_[(size_t)r * q_ + x];
        x = mul_t_[(size_t)x * q_ + x];
        e >>= 1;
    }
    return r;
}

int Field::from_int(long long k) const {
    long long r = k % p_;
    if (r < 0) r += p_;
    return (int)r;
}

cplx Field::gauss_sum(int a) const {
    if (a == 0) throw DomainError("Gauss sum requires a != 0");
    cplx s = 0.0;
    for (int t = 1; t < q_; ++t) s += (double)eta_t_[t] * chi_t_[mul_t_[(size_t)a * q_ + t]];
    return s;
}

cplx Field::gauss_sum_closed_form() const {
    double r = std::sqrt((double)q_);
    double sign = (ell_ == 1) ? 1.0 : -1.0;  // (-1)^{ell-1}
    if (p_ % 4 == 1) return cplx(sign * r, 0.0);
    // p = 3 mod 4: multiply by i^ell
    if (ell_ == 1) return cplx(0.0, sign * r);
    return cplx(sign * -1.0 * r, 0.0);
}

}  // namespace ffgeom
