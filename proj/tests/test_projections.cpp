#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "ffgeom/field.hpp"
#include "ffgeom/harness.hpp"
#include "ffgeom/projections.hpp"
#include "ffgeom/vectors.hpp"

using namespace ffgeom;

TEST_CASE("gaussian binomials match frozen values") {
    CHECK(gaussian_binomial(3, 2, 1) == 4);
    CHECK(gaussian_binomial(3, 3, 1) == 13);
    CHECK(gaussian_binomial(3, 3, 2) == 13);
    CHECK(gaussian_binomial(3, 4, 2) == 130);
    CHECK(gaussian_binomial(5, 3, 1) == 31);
    CHECK(gaussian_binomial(9, 2, 1) == 10);
    CHECK(gaussian_binomial(3, 3, 0) == 1);
    CHECK(gaussian_binomial(3, 3, 3) == 1);
}

TEST_CASE("grassmannian enumeration is sorted, complete, and matches the brute oracle") {
    for (auto [p, ell, d, m] : {std::tuple{3, 1, 2, 1}, {3, 1, 3, 1}, {3, 1, 3, 2}, {5, 1, 2, 1}}) {
        Field F(p, ell);
        std::vector<Subspace> G = enumerate_grassmannian(F, d, m);
        CHECK((long long)G.size() == gaussian_binomial(F.q(), d, m));
        CHECK(std::is_sorted(G.begin(), G.end()));
        CHECK(std::adjacent_find(G.begin(), G.end()) == G.end());
        std::vector<Subspace> brute = ref::grassmannian_bruteforce(F, d, m);
        CHECK(G == brute);
    }
}

TEST_CASE("rref_span canonicalizes scaled and redundant spanning rows") {
    Field F(5, 1);
    Subspace a = rref_span(F, 2, {{1, 2}, {2, 4}});
    CHECK(a.m == 1);
    CHECK(a.at(0, 0) == 1);
    CHECK(a.at(0, 1) == 2);
    Subspace b = rref_span(F, 2, {{2, 4}});
    CHECK(a == b);
    Subspace c = rref_span(F, 2, {{0, 3}});
    CHECK(c.m == 1);
    CHECK(c.at(0, 0) == 0);
    CHECK(c.at(0, 1) == 1);
    Subspace z = rref_span(F, 2, {{0, 0}});
    CHECK(z.m == 0);
}

TEST_CASE("span_set lists exactly the q^m row-space members") {
    Field F(3, 1);
    VecSpace S(F, 2);
    Subspace e1 = rref_span(F, 2, {{1, 0}});
    PointSet sp = span_set(S, e1);
    CHECK(sp.card() == 3);
    CHECK(sp.test(0));
    CHECK(sp.test(1));
    CHECK(sp.test(2));
    Subspace diag = rref_span(F, 2, {{1, 1}});
    PointSet spd = span_set(S, diag);
    CHECK(spd.card() == 3);
    CHECK(spd.test(0));
    CHECK(spd.test(4));  // (1,1)
    CHECK(spd.test(8));  // (2,2)
    CHECK(!spd.test(1));
    CHECK(subspace_contains(S, diag, 4));
    CHECK(!subspace_contains(S, diag, 1));
    CHECK(subspace_within(S, diag, rref_span(F, 2, {{1, 0}, {0, 1}})));
    CHECK(!subspace_within(S, diag, e1));
}

TEST_CASE("orthogonal complements have dimension d-m and the map is an involution") {
    Field F(3, 1);
    VecSpace S(F, 3);
    for (const Subspace& W : enumerate_grassmannian(F, 3, 1)) {
        Subspace C = orthogonal_complement(F, W);
        CHECK(C.m == 2);
        CHECK(orthogonal_complement(F, C) == W);
        // Every member of C is orthogonal to every member of W.
        PointSet cw = span_set(S, C);
        PointSet ww = span_set(S, W);
        bool ortho = true;
        cw.for_each([&](int64_t x) {
            ww.for_each([&](int64_t y) { ortho = ortho && S.dot(x, y) == 0; });
        });
        CHECK(ortho);
    }
    Field F2(3, 1);
    Subspace e1 = rref_span(F2, 2, {{1, 0}});
    Subspace e2 = rref_span(F2, 2, {{0, 1}});
    CHECK(orthogonal_complement(F2, e1) == e2);
}

TEST_CASE("an isotropic line is its own complement yet projections stay well-defined") {
    Field F(5, 1);
    VecSpace S(F, 2);
    Subspace W = rref_span(F, 2, {{1, 2}});  // (1,2).(1,2) = 5 = 0
    CHECK(orthogonal_complement(F, W) == W);
    // All of W^perp = W sits in one coset of itself.
    CHECK(project(span_set(S, W), W).card() == 1);
    CHECK(project(full_set(S), W).card() == 5);
}

TEST_CASE("projecting the whole space gives q^m cosets; projecting W^perp gives one") {
    Field F(3, 1);
    VecSpace S(F, 3);
    for (const Subspace& W : enumerate_grassmannian(F, 3, 2)) {
        CHECK(project(full_set(S), W).card() == 9);
        Subspace C = orthogonal_complement(F, W);
        CHECK(project(span_set(S, C), W).card() == 1);
    }
}

TEST_CASE("the projection sweep reproduces per-subspace counts in canonical order") {
    Field F(3, 1);
    VecSpace S(F, 3);
    PointSet A = random_set_density(S, 0.3, 11);
    PointSet B = random_set_density(S, 0.4, 12);
    std::vector<Subspace> G = enumerate_grassmannian(F, 3, 1);
    std::vector<ProjectionRow> rows = projection_intersection_sweep(A, B, 1);
    REQUIRE(rows.size() == G.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].w_index == (int32_t)i);
        PointSet pa = project(A, G[i]);
        PointSet pb = project(B, G[i]);
        CHECK(rows[i].proj_a == pa.card());
        CHECK(rows[i].proj_b == pb.card());
        CHECK(rows[i].inter == PointSet::intersection_card(pa, pb));
    }
}

TEST_CASE("projection_count_below agrees with direct counting at every threshold") {
    Field F(5, 1);
    VecSpace S(F, 2);
    PointSet E = random_set_density(S, 0.35, 7);
    std::vector<int64_t> thr = {0, 1, 2, 3, 5};
    std::vector<int64_t> got = projection_count_below(E, 1, thr);
    REQUIRE(got.size() == thr.size());
    std::vector<Subspace> G = enumerate_grassmannian(F, 2, 1);
    for (size_t t = 0; t < thr.size(); ++t) {
        int64_t direct = 0;
        for (const Subspace& W : G)
            if (project(E, W).card() <= thr[t]) ++direct;
        CHECK(got[t] == direct);
    }
}

TEST_CASE("flat families have the right sizes and point-line incidences") {
    Field F(3, 1);
    VecSpace S(F, 2);
    FlatFamily pts = all_flats(S, 0);
    CHECK(pts.directions.size() == 1);
    CHECK(pts.flats.size() == 9);
    FlatFamily lines = all_flats(S, 1);
    CHECK(lines.directions.size() == 4);
    CHECK(lines.flats.size() == 12);
    // Each of the 12 lines carries exactly 3 points.
    CHECK(flats_incidences(S, pts, lines) == 36);
    // A flat family is ordered by (direction, base).
    CHECK(std::is_sorted(lines.flats.begin(), lines.flats.end(), [](const Flat& a, const Flat& b) {
        return a.dir != b.dir ? a.dir < b.dir : a.base < b.base;
    }));
}
