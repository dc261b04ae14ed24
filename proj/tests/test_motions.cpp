#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <vector>

#include "ffgeom/errors.hpp"
#include "ffgeom/field.hpp"
#include "ffgeom/motions.hpp"
#include "ffgeom/vectors.hpp"

using namespace ffgeom;

TEST_CASE("orthogonal group orders match the classical values") {
    struct Case {
        int p, ell, d;
        int64_t order;
    };
    // |O(2,q)| = 2(q - eta(-1)); |O(3,q)| = 2q(q^2 - 1).
    for (const Case& c : {Case{3, 1, 2, 8}, {5, 1, 2, 8}, {7, 1, 2, 16}, {11, 1, 2, 24},
                          {3, 2, 2, 16}, {3, 1, 3, 48}, {5, 1, 3, 240}}) {
        Field F(c.p, c.ell);
        std::vector<Mat> G = orthogonal_group(F, c.d);
        CHECK((int64_t)G.size() == c.order);
        CHECK(orthogonal_group_order_formula(c.d, F.q()) == doctest::Approx((double)c.order));
        CHECK(std::is_sorted(G.begin(), G.end()));
        CHECK(std::adjacent_find(G.begin(), G.end()) == G.end());
        bool has_id = false;
        for (const Mat& g : G) {
            CHECK(is_orthogonal(F, g));
            if (g == mat_identity(c.d)) has_id = true;
        }
        CHECK(has_id);
    }
    CHECK(orthogonal_group_order_formula(1, 3) == doctest::Approx(2.0));
}

TEST_CASE("column-extension enumeration equals the brute-force filter") {
    for (auto [p, d] : {std::pair{3, 2}, {5, 2}, {3, 3}}) {
        Field F(p, 1);
        CHECK(orthogonal_group(F, d) == ref::orthogonal_group_bruteforce(F, d));
    }
}

TEST_CASE("the group is closed under multiplication and transpose-inverse") {
    Field F(3, 1);
    std::vector<Mat> G = orthogonal_group(F, 2);
    for (const Mat& a : G) {
        CHECK(group_contains(G, mat_transpose(a)));
        CHECK(mat_mul(F, a, mat_transpose(a)) == mat_identity(2));
        for (const Mat& b : G) CHECK(group_contains(G, mat_mul(F, a, b)));
    }
}

TEST_CASE("matrix action: identity fixes, g acts linearly, sets map bijectively") {
    Field F(5, 1);
    VecSpace S(F, 2);
    std::vector<Mat> G = orthogonal_group(F, 2);
    for (const Mat& g : G) {
        CHECK(apply_mat(S, g, 0) == 0);
        for (int64_t x = 0; x < S.size(); ++x) {
            for (int64_t y = 0; y < S.size(); ++y)
                CHECK(apply_mat(S, g, S.add(x, y)) == S.add(apply_mat(S, g, x), apply_mat(S, g, y)));
            // Orthogonal matrices preserve the norm.
            CHECK(S.norm(apply_mat(S, g, x)) == S.norm(x));
        }
    }
    PointSet A = set_of(S, {1, 2, 7, 11});
    for (const Mat& g : G) CHECK(apply_mat_set(g, A).card() == A.card());
}

TEST_CASE("the stabilizer of a unit vector in O(2,3) has two elements") {
    Field F(3, 1);
    VecSpace S(F, 2);
    std::vector<Mat> G = orthogonal_group(F, 2);
    std::vector<Mat> stab = stabilizer(S, G, S.unit(0));
    CHECK(stab.size() == 2);
    for (const Mat& g : stab) CHECK(apply_mat(S, g, S.unit(0)) == S.unit(0));
}

TEST_CASE("rigid motions enumerate |O| q^d pairs and compose/invert correctly") {
    Field F(3, 1);
    VecSpace S(F, 2);
    MotionSet M = all_rigid_motions(S);
    CHECK(M.size() == 8 * 9);
    CHECK(std::is_sorted(M.items.begin(), M.items.end()));
    for (const Motion& mo : M.items) {
        const Mat& g = M.mat_of(mo);
        auto [gi, zi] = motion_inverse(S, g, mo.z);
        for (int64_t x = 0; x < S.size(); ++x) {
            int64_t fx = motion_apply(S, g, mo.z, x);
            CHECK(motion_apply(S, gi, zi, fx) == x);
        }
        auto [gc, zc] = motion_compose(S, gi, zi, g, mo.z);
        CHECK(gc == mat_identity(2));
        CHECK(zc == 0);
    }
}

TEST_CASE("make_motion_set rejects out-of-range references") {
    Field F(3, 1);
    VecSpace S(F, 2);
    MotionSet all = all_rigid_motions(S);
    CHECK_THROWS_AS(make_motion_set(S, all.group, {Motion{99, 0}}), DomainError);
    CHECK_THROWS_AS(make_motion_set(S, all.group, {Motion{0, 81}}), DomainError);
}

TEST_CASE("the binary group cache round-trips and the loader re-verifies") {
    Field F(5, 1);
    std::vector<Mat> G = orthogonal_group(F, 2);
    std::ostringstream out(std::ios::binary);
    save_group_cache(out, F, 2, G);
    std::string blob = out.str();
    {
        std::istringstream in(blob, std::ios::binary);
        CHECK(load_group_cache(in, F, 2) == G);
    }
    {  // truncated body
        std::istringstream in(blob.substr(0, blob.size() - 3), std::ios::binary);
        CHECK_THROWS_AS(load_group_cache(in, F, 2), ParseError);
    }
    {  // wrong field
        Field F7(7, 1);
        std::istringstream in(blob, std::ios::binary);
        CHECK_THROWS_AS(load_group_cache(in, F7, 2), ShapeError);
    }
    {  // corrupt an entry: 0xFF can never be a field element here
        std::string bad = blob;
        bad[bad.size() - 1] = (char)0xFF;
        std::istringstream in(bad, std::ios::binary);
        CHECK_THROWS_AS(load_group_cache(in, F, 2), ParseError);
    }
}

TEST_CASE("oversized enumerations are refused, not attempted") {
    Field F13(13, 1);
    CHECK_THROWS_AS(orthogonal_group(F13, 5), ResourceError);  // |O(5,13)| is astronomically large
    Field F3(3, 1);
    CHECK_THROWS_AS(orthogonal_group(F3, 6), Unsupported);     // beyond the matrix dimension cap
}
