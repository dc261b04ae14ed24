#pragma once

// Arithmetic for F_q, q = p^ell with p an odd prime and ell in {1,2},
// plus the additive/quadratic characters and Gauss sums built on it.
//
// Elements are dense indices in [0,q). For ell == 2 the index a0 + a1*p
// stands for a0 + a1*t where t^2 = n and n is the smallest quadratic
// non-residue mod p; F_p sits inside F_{p^2} as the indices < p.
// All per-element operations are table lookups after construction.

#include <complex>
#include <cstdint>
#include <vector>

namespace ffgeom {

using cplx = std::complex<double>;

class Field {
public:
    // Throws InvalidField (p not an odd prime), Unsupported (ell not in {1,2}
    // or q out of the table-driven range q <= 256).
    Field(int p, int ell);

    int p() const { return p_; }
    int ell() const { return ell_; }
    int q() const { return q_; }
    bool prime_field() const { return ell_ == 1; }
    // Modulus constant for ell == 2: x^2 - n. Zero for prime fields.
    int nonresidue() const { return nonres_; }

    int add(int a, int b) const { return add_t_[a * q_ + b]; }
    int sub(int a, int b) const { return add_t_[a * q_ + neg_t_[b]]; }
    int mul(int a, int b) const { return mul_t_[a * q_ + b]; }
    int neg(int a) const { return neg_t_[a]; }
    // Throws DomainError on a == 0.
    int inv(int a) const;
    int pow(int a, long long e) const;
    int frobenius(int a) const { return frob_t_[a]; }

    // Reduces an integer into the prime subfield (k mod p times the identity).
    int from_int(long long k) const;

    // Absolute trace to F_p: identity for ell == 1, a + a^p for ell == 2.
    int trace(int a) const { return trace_t_[a]; }

    // chi(a) = exp(2 pi i Tr(a) / p); the canonical nontrivial additive character.
    cplx chi(int a) const { return chi_t_[a]; }

    // Quadratic character: eta(0) = 0, else a^{(q-1)/2} as +-1.
    int eta(int a) const { return eta_t_[a]; }

    // G_a = sum_{t != 0} eta(t) chi(a t), by direct summation. Requires a != 0.
    cplx gauss_sum(int a) const;

    // Branch value of G_1: (-1)^{ell-1} sqrt(q) for p = 1 mod 4,
    // (-1)^{ell-1} i^ell sqrt(q) for p = 3 mod 4.
    cplx gauss_sum_closed_form() const;

    bool operator==(const Field& o) const { return p_ == o.p_ && ell_ == o.ell_; }

private:
    int p_, ell_, q_, nonres_;
    std::vector<uint16_t> add_t_, mul_t_, neg_t_, inv_t_, frob_t_, trace_t_;
    std::vector<int8_t> eta_t_;
    std::vector<cplx> chi_t_;
};

}  // namespace ffgeom
