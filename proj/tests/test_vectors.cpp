#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <vector>

#include "ffgeom/errors.hpp"
#include "ffgeom/field.hpp"
#include "ffgeom/vectors.hpp"

using namespace ffgeom;

TEST_CASE("index encoding is mixed-radix with the first coordinate least significant") {
    Field F(3, 1);
    VecSpace S(F, 3);
    CHECK(S.size() == 27);
    CHECK(S.unit(0) == 1);
    CHECK(S.unit(1) == 3);
    CHECK(S.unit(2) == 9);
    int coords[3];
    for (int64_t i = 0; i < S.size(); ++i) {
        S.decode(i, coords);
        CHECK(S.encode(coords) == i);
        for (int k = 0; k < 3; ++k) CHECK(S.coord(i, k) == coords[k]);
    }
    int v[3] = {2, 0, 1};
    CHECK(S.encode(v) == 2 + 0 * 3 + 1 * 9);
}

TEST_CASE("vector arithmetic agrees with coordinate-wise field arithmetic") {
    Field F(5, 1);
    VecSpace S(F, 2);
    for (int64_t a = 0; a < S.size(); ++a) {
        CHECK(S.add(a, S.negate(a)) == 0);
        CHECK(S.scale(1, a) == a);
        CHECK(S.scale(0, a) == 0);
        for (int64_t b = 0; b < S.size(); ++b) {
            int64_t s = S.add(a, b);
            int expect_dot = 0;
            for (int k = 0; k < 2; ++k) {
                CHECK(S.coord(s, k) == F.add(S.coord(a, k), S.coord(b, k)));
                expect_dot = F.add(expect_dot, F.mul(S.coord(a, k), S.coord(b, k)));
            }
            CHECK(S.dot(a, b) == expect_dot);
            CHECK(S.sub(s, b) == a);
        }
        CHECK(S.norm(a) == S.dot(a, a));
    }
}

TEST_CASE("sphere sizes over F_3^2 are 1, 4, 4 and over F_5^2 the zero sphere has 9 points") {
    Field F3(3, 1);
    VecSpace S3(F3, 2);
    CHECK(sphere(S3, 0).card() == 1);
    CHECK(sphere(S3, 1).card() == 4);
    CHECK(sphere(S3, 2).card() == 4);
    Field F5(5, 1);
    VecSpace S5(F5, 2);
    CHECK(sphere(S5, 0).card() == 9);  // q = 1 mod 4: isotropic lines, 2q - 1 points
    int64_t total = 0;
    for (int j = 0; j < 5; ++j) total += sphere(S5, j).card();
    CHECK(total == S5.size());
    CHECK_THROWS_AS(sphere(S5, 5), DomainError);
    CHECK_THROWS_AS(sphere(S5, -1), DomainError);
}

TEST_CASE("point-set algebra: intersection, union, difference, translate, negate") {
    Field F(3, 1);
    VecSpace S(F, 2);
    PointSet A = set_of(S, {0, 1, 4, 7});
    PointSet B = set_of(S, {1, 2, 7});
    CHECK(A.card() == 4);
    CHECK((A & B).card() == 2);
    CHECK(PointSet::intersection_card(A, B) == 2);
    CHECK((A | B).card() == 5);
    CHECK(A.minus(B).card() == 2);
    CHECK(full_set(S).card() == 9);
    for (int64_t z = 0; z < S.size(); ++z) {
        PointSet T = A.translate(z);
        CHECK(T.card() == A.card());
        bool match = true;
        A.for_each([&](int64_t x) { match = match && T.test(S.add(x, z)); });
        CHECK(match);
    }
    PointSet N = A.negate();
    CHECK(N.card() == A.card());
    CHECK(N.negate() == A);
    std::vector<int64_t> mem = A.members();
    CHECK(mem == std::vector<int64_t>{0, 1, 4, 7});
}

TEST_CASE("product sets live at index x + q^d * y") {
    Field F(3, 1);
    VecSpace S(F, 2);
    VecSpace pair(F, 4);
    PointSet A = set_of(S, {0, 3, 5});
    PointSet B = set_of(S, {1, 8});
    PointSet P = product_set(pair, A, B);
    CHECK(P.card() == 6);
    for (int64_t x = 0; x < S.size(); ++x)
        for (int64_t y = 0; y < S.size(); ++y)
            CHECK(P.test(x + S.size() * y) == (A.test(x) && B.test(y)));
}

TEST_CASE("text round trip is exact and deterministic") {
    Field F(5, 1);
    VecSpace S(F, 2);
    PointSet A = set_of(S, {0, 7, 13, 24});
    std::ostringstream out1, out2;
    save_pointset_text(out1, A);
    save_pointset_text(out2, A);
    CHECK(out1.str() == out2.str());
    CHECK(out1.str().substr(0, 8) == "q=5 d=2\n");
    std::istringstream in(out1.str());
    auto [q, d] = peek_pointset_header(in);
    CHECK(q == 5);
    CHECK(d == 2);
    std::istringstream in2(out1.str());
    PointSet back = load_pointset_text(in2, S);
    CHECK(back == A);
}

TEST_CASE("malformed point-set text is rejected with the right error") {
    Field F(3, 1);
    VecSpace S(F, 2);
    auto load = [&](const std::string& text) {
        std::istringstream in(text);
        return load_pointset_text(in, S);
    };
    CHECK_THROWS_AS(load(""), ParseError);                     // empty
    CHECK_THROWS_AS(load("hello\n0,0\n"), ParseError);         // bad header
    CHECK_THROWS_AS(load("q=5 d=2\n0,0\n"), ShapeError);       // wrong space
    CHECK_THROWS_AS(load("q=3 d=2\n0\n"), ParseError);         // missing coordinate
    CHECK_THROWS_AS(load("q=3 d=2\n0,7\n"), ParseError);       // coordinate out of range
    CHECK_THROWS_AS(load("q=3 d=2\n0,x\n"), ParseError);       // non-numeric
    CHECK_NOTHROW(load("q=3 d=2\n"));                          // empty set is fine
    CHECK(load("q=3 d=2\n2,1\n").members() == std::vector<int64_t>{5});
}

TEST_CASE("dense universes beyond the budget are refused") {
    Field F(13, 1);
    CHECK_NOTHROW(VecSpace(F, 6));              // 13^6 ~ 4.8M
    CHECK_THROWS_AS(VecSpace(F, 7), ResourceError);  // 13^7 ~ 63M > 2^24
}
