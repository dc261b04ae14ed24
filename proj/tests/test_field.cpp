#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "ffgeom/errors.hpp"
#include "ffgeom/field.hpp"

using namespace ffgeom;

TEST_CASE("construction accepts odd prime powers up to 256 and rejects the rest") {
    CHECK_NOTHROW(Field(3, 1));
    CHECK_NOTHROW(Field(251, 1));
    CHECK_NOTHROW(Field(13, 2));
    CHECK_THROWS_AS(Field(2, 1), InvalidField);   // even
    CHECK_THROWS_AS(Field(1, 1), InvalidField);
    CHECK_THROWS_AS(Field(9, 1), InvalidField);   // composite
    CHECK_THROWS_AS(Field(15, 1), InvalidField);
    CHECK_THROWS_AS(Field(3, 3), Unsupported);    // degree out of range
    CHECK_THROWS_AS(Field(3, 0), Unsupported);
    CHECK_THROWS_AS(Field(17, 2), Unsupported);   // 289 > 256
    CHECK_THROWS_AS(Field(257, 1), Unsupported);
}

TEST_CASE("prime field arithmetic is integer arithmetic mod p") {
    Field F(7, 1);
    CHECK(F.q() == 7);
    CHECK(F.prime_field());
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            CHECK(F.add(a, b) == (a + b) % 7);
            CHECK(F.mul(a, b) == (a * b) % 7);
            CHECK(F.sub(a, b) == ((a - b) % 7 + 7) % 7);
        }
    CHECK(F.neg(0) == 0);
    CHECK(F.neg(3) == 4);
    CHECK(F.from_int(23) == 2);
    CHECK(F.from_int(-1) == 6);
    CHECK(F.trace(5) == 5);
}

TEST_CASE("field axioms hold exhaustively on every supported small field") {
    for (auto [p, ell] : {std::pair{3, 1}, {5, 1}, {3, 2}, {5, 2}, {7, 2}}) {
        Field F(p, ell);
        int q = F.q();
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) {
                CHECK(F.mul(a, F.inv(a)) == 1);
                CHECK(F.pow(a, q - 1) == 1);
            }
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < q && a < 4; ++c)
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
        CHECK_THROWS_AS(F.inv(0), DomainError);
    }
}

TEST_CASE("F_9 is built on the modulus x^2 - 2 and its Frobenius/trace are right") {
    Field F(3, 2);
    CHECK(F.q() == 9);
    CHECK_FALSE(F.prime_field());
    CHECK(F.nonresidue() == 2);  // 2 is the smallest non-residue mod 3
    int t = 3;                   // index of the generator: 0 + 1*p
    CHECK(F.mul(t, t) == 2);     // t^2 = 2
    CHECK(F.frobenius(t) == 6);  // t^3 = 2t, index 0 + 2*3
    CHECK(F.frobenius(1) == 1);
    CHECK(F.trace(t) == 0);      // t + 2t = 3t = 0
    CHECK(F.trace(1) == 2);      // 1 + 1
    for (int a = 0; a < 9; ++a) {
        CHECK(F.frobenius(F.frobenius(a)) == a);        // involution
        CHECK(F.frobenius(a) == F.pow(a, 3));           // x -> x^p
        CHECK(F.trace(a) < 3);                          // lands in F_p
        CHECK(F.trace(a) == F.add(a, F.frobenius(a)));
    }
}

TEST_CASE("quadratic character: eta(2) = -1 over F_3, eta is multiplicative") {
    Field F3(3, 1);
    CHECK(F3.eta(0) == 0);
    CHECK(F3.eta(1) == 1);
    CHECK(F3.eta(2) == -1);
    for (auto [p, ell] : {std::pair{5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
        Field F(p, ell);
        int squares = 0;
        for (int a = 1; a < F.q(); ++a) {
            for (int b = 1; b < F.q(); ++b) CHECK(F.eta(F.mul(a, b)) == F.eta(a) * F.eta(b));
            if (F.eta(a) == 1) ++squares;
        }
        CHECK(squares == (F.q() - 1) / 2);
        // Over F_{p^2} every element of F_p^* is a square.
        if (ell == 2)
            for (int a = 1; a < p; ++a) CHECK(F.eta(a) == 1);
    }
}

TEST_CASE("additive character: chi(0) = 1, chi sums to zero, chi is a homomorphism") {
    for (auto [p, ell] : {std::pair{3, 1}, {7, 1}, {3, 2}, {5, 2}}) {
        Field F(p, ell);
        CHECK(std::abs(F.chi(0) - cplx(1.0)) < 1e-12);
        cplx sum = 0.0;
        for (int a = 0; a < F.q(); ++a) {
            sum += F.chi(a);
            for (int b = 0; b < F.q(); ++b)
                CHECK(std::abs(F.chi(F.add(a, b)) - F.chi(a) * F.chi(b)) < 1e-12);
        }
        CHECK(std::abs(sum) < 1e-9);
    }
}

TEST_CASE("Gauss sum closed form: i*sqrt(3) over F_3 and sqrt(5) over F_5") {
    Field F3(3, 1);
    cplx g3 = F3.gauss_sum_closed_form();
    CHECK(g3.real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g3.imag() == doctest::Approx(std::sqrt(3.0)));
    Field F5(5, 1);
    cplx g5 = F5.gauss_sum_closed_form();
    CHECK(g5.real() == doctest::Approx(std::sqrt(5.0)));
    CHECK(g5.imag() == doctest::Approx(0.0).epsilon(1e-12));
    // Degree two flips the sign: (-1)^{ell-1} sqrt(q) branches.
    Field F9(3, 2);
    cplx g9 = F9.gauss_sum_closed_form();
    CHECK(std::abs(g9) == doctest::Approx(3.0));
    Field F25(5, 2);
    CHECK(F25.gauss_sum_closed_form().real() == doctest::Approx(-5.0));
}

TEST_CASE("direct Gauss sums match the closed form and twist by eta on every scaling") {
    for (int p : {3, 5, 7, 11, 13})
        for (int ell : {1, 2}) {
            Field F(p, ell);
            cplx closed = F.gauss_sum_closed_form();
            CHECK(std::abs(F.gauss_sum(1) - closed) < 1e-9);
            for (int a = 1; a < F.q(); ++a)
                CHECK(std::abs(F.gauss_sum(a) - (double)F.eta(a) * closed) < 1e-9);
        }
}
