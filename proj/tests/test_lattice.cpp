#include <doctest.h>

#include <algorithm>
#include <set>

#include "symtopo/catalog.hpp"
#include "symtopo/cone.hpp"

using namespace symtopo;

namespace {

std::vector<Vec> sorted(std::vector<Vec> vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    return vs;
}

// test-side oracle: can p be written as a nonnegative integer combination of
// gens, staying inside the cone?
bool decomposes_in_cone(const Cone& cone, const Vec& p, const std::vector<Vec>& gens,
                        size_t from = 0) {
    if (is_zero(p)) return true;
    for (size_t k = from; k < gens.size(); ++k) {
        Vec rest = vec_sub(p, gens[k]);
        if (cone_contains(cone, rest) && decomposes_in_cone(cone, rest, gens, k)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("validate_cone accepts the coordinate quadrant") {
    Cone c = validate_cone({{1, 0}, {0, 1}}, {{1, 0}, {0, 1}});
    CHECK(c.dim == 2);
    CHECK(c.rays == std::vector<Vec>{{0, 1}, {1, 0}});
    CHECK(c.facet_normals == std::vector<Vec>{{0, 1}, {1, 0}});
}

TEST_CASE("validate_cone accepts the A1 cone and canonicalizes scaling") {
    Cone c = validate_cone({{2, 0}, {1, 2}}, {{0, 3}, {2, -1}});
    CHECK(c.rays == std::vector<Vec>{{1, 0}, {1, 2}});
    CHECK(c.facet_normals == std::vector<Vec>{{0, 1}, {2, -1}});
    for (const Vec& r : c.rays)
        for (const Vec& nu : c.facet_normals) CHECK(dot(r, nu) >= 0);
}

TEST_CASE("validate_cone rejects a cone containing a line") {
    CHECK_THROWS_WITH_AS(validate_cone({{1, 0}, {-1, 0}}, {{0, 1}}),
                         doctest::Contains("NotStronglyConvex"), Error);
    CHECK_THROWS_AS(validate_cone({{1, 0}, {-1, 0}, {0, 1}}, {{0, 1}}), Error);
}

TEST_CASE("validate_cone rejects ray/normal mismatches") {
    // a ray strictly violating a normal
    CHECK_THROWS_AS(validate_cone({{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}), Error);
    // normal that supports no facet of the described cone
    try {
        validate_cone({{1, 0}, {1, 2}}, {{0, 1}, {1, 0}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::inconsistent_h_representation);
    }
    // lower-dimensional ray set
    try {
        validate_cone({{1, 0}}, {{0, 1}, {2, -1}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_full_dimensional);
    }
}

TEST_CASE("facet_normals_from_rays: quadrant is self-dual") {
    auto normals = facet_normals_from_rays({{1, 0}, {0, 1}});
    CHECK(sorted(normals) == std::vector<Vec>{{0, 1}, {1, 0}});
}

TEST_CASE("facet_normals_from_rays: A1 cone") {
    auto normals = facet_normals_from_rays({{1, 0}, {1, 2}});
    CHECK(sorted(normals) == std::vector<Vec>{{0, 1}, {2, -1}});
    CHECK_NOTHROW(validate_cone({{1, 0}, {1, 2}}, normals));
}

TEST_CASE("facet_normals_from_rays: quadric cone over the unit square") {
    auto normals = facet_normals_from_rays({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
    CHECK(sorted(normals) ==
          std::vector<Vec>{{0, 0, 1}, {0, 1, 0}, {1, -1, 0}, {1, 0, -1}});
}

TEST_CASE("facet_normals_from_rays honors the dimension cap") {
    std::vector<Vec> rays;
    for (int i = 0; i < 5; ++i) {
        Vec e(5, 0);
        e[i] = 1;
        rays.push_back(e);
    }
    try {
        facet_normals_from_rays(rays);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::dimension_cap_exceeded);
    }
    Limits wide;
    wide.dim_cap = 5;
    CHECK(facet_normals_from_rays(rays, wide).size() == 5);
}

TEST_CASE("duality round-trip on the catalog") {
    Limits lim;
    for (const char* name : {"quadrant-2", "quadrant-3", "A1", "quadric", "whitney-3"}) {
        Cone c = catalog_cone(name);
        CAPTURE(name);
        auto dual = facet_normals_from_rays(c.rays, lim);
        CHECK(sorted(dual) == sorted(c.facet_normals));
        auto back = facet_normals_from_rays(c.facet_normals, lim);
        CHECK(sorted(back) == sorted(c.rays));
    }
}

TEST_CASE("enumerate_points: quadrant up to degree 1") {
    Cone c = quadrant_cone(2);
    auto pts = enumerate_points(c, {1, 1}, 1);
    CHECK(pts == std::vector<Vec>{{0, 0}, {0, 1}, {1, 0}});
}

TEST_CASE("enumerate_points: A1 cone up to degree 2") {
    Cone c = a1_cone();
    auto pts = enumerate_points(c, {2, 0}, 2);
    CHECK(pts == std::vector<Vec>{{0, 0}, {1, 0}, {1, 1}, {1, 2}});
}

TEST_CASE("enumerate_points: degree 0 leaves only the origin") {
    for (const char* name : {"quadrant-2", "A1", "quadric", "whitney-4"}) {
        Cone c = catalog_cone(name);
        Vec w(c.dim, 0);
        for (const Vec& nu : c.facet_normals) w = vec_add(w, nu);
        CHECK(enumerate_points(c, w, 0) == std::vector<Vec>{Vec(c.dim, 0)});
    }
}

TEST_CASE("enumerate_points honors the point cap") {
    Limits tight;
    tight.point_cap = 3;
    try {
        enumerate_points(quadrant_cone(2), {1, 1}, 4, tight);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::enumeration_cap_exceeded);
    }
}

TEST_CASE("hilbert_basis: quadrant is freely generated by unit vectors") {
    Cone c = quadrant_cone(2);
    auto hb = hilbert_basis(c, {1, 1}, 2);
    CHECK(hb.points == std::vector<Vec>{{0, 1}, {1, 0}});
    CHECK(hb.complete);
    CHECK(hb.certified_bound == 2);
}

TEST_CASE("hilbert_basis: A1 cone has the three classic generators") {
    Cone c = a1_cone();
    auto hb = hilbert_basis(c, {2, 0}, 4);
    CHECK(hb.points == std::vector<Vec>{{1, 0}, {1, 1}, {1, 2}});
    CHECK(hb.complete);
    CHECK(hb.certified_bound == 4);
}

TEST_CASE("hilbert_basis: quadric cone is generated by its rays") {
    Cone c = quadric_cone();
    Vec w{2, 0, 0};
    auto hb = hilbert_basis(c, w, hilbert_degree_bound(c, w));
    CHECK(hb.points == std::vector<Vec>{{1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}});
    CHECK(hb.complete);
}

TEST_CASE("hilbert_basis: incomplete window is flagged") {
    Cone c = a1_cone();
    auto hb = hilbert_basis(c, {2, 0}, 2);
    CHECK_FALSE(hb.complete);
    CHECK(hb.points == std::vector<Vec>{{1, 0}, {1, 1}, {1, 2}});
}

TEST_CASE("hilbert basis elements are indecomposable and generate") {
    for (const char* name : {"quadrant-3", "A1", "quadric", "whitney-4"}) {
        CAPTURE(name);
        Cone c = catalog_cone(name);
        Vec w(c.dim, 0);
        for (const Vec& nu : c.facet_normals) w = vec_add(w, nu);
        Int bound = hilbert_degree_bound(c, w);
        auto hb = hilbert_basis(c, w, bound);
        REQUIRE(hb.complete);

        auto pts = enumerate_points(c, w, bound);
        // minimality, re-checked by brute force over all lattice point pairs
        for (const Vec& h : hb.points) {
            for (const Vec& q : pts) {
                if (is_zero(q)) continue;
                Vec rest = vec_sub(h, q);
                if (is_zero(rest)) continue;
                bool both_in_cone = cone_contains(c, rest) && cone_contains(c, q);
                CHECK_FALSE(both_in_cone);
                if (both_in_cone) break;
            }
        }

        // generation: every window point decomposes into basis elements
        Int max_basis_deg = 0;
        for (const Vec& h : hb.points) max_basis_deg = std::max(max_basis_deg, dot(h, w));
        for (const Vec& p : enumerate_points(c, w, bound - max_basis_deg))
            CHECK(decomposes_in_cone(c, p, hb.points));
    }
}

TEST_CASE("faces_all: quadrant has cone, two rays, origin") {
    auto faces = faces_all(quadrant_cone(2));
    REQUIRE(faces.size() == 4);
    CHECK(faces[0].dim_face == 2);
    CHECK(faces[0].normal_indices.empty());
    CHECK(faces[1].dim_face == 1);
    CHECK(faces[2].dim_face == 1);
    CHECK(faces[3].dim_face == 0);
    CHECK(faces[3].normal_indices == std::vector<int>{0, 1});
}

TEST_CASE("faces_all: A1 cone has 4 faces, quadric cone 10") {
    CHECK(faces_all(a1_cone()).size() == 4);
    auto faces = faces_all(quadric_cone());
    REQUIRE(faces.size() == 10);
    std::multiset<int> dims;
    for (const auto& f : faces) dims.insert(f.dim_face);
    CHECK(dims == std::multiset<int>{0, 1, 1, 1, 1, 2, 2, 2, 2, 3});
}

TEST_CASE("faces are canonical: stored normals are exactly the covering facets") {
    for (const char* name : {"quadrant-2", "A1", "quadric"}) {
        CAPTURE(name);
        Cone c = catalog_cone(name);
        for (const Face& f : faces_all(c)) {
            Face round = face_from_normals(c, f.normal_indices);
            CHECK(round == f);
        }
    }
}

TEST_CASE("face_from_normals canonicalizes non-maximal subsets") {
    // in the quadric cone, two adjacent facets meet in a ray covered by both
    Cone c = quadric_cone();
    Face f = face_from_normals(c, {0, 1});
    CHECK(f.dim_face == 1);
    CHECK(f.normal_indices.size() >= 2);
    Face again = face_from_normals(c, f.normal_indices);
    CHECK(again == f);
}
