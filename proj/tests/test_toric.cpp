#include <doctest.h>

#include <algorithm>

#include "symtopo/catalog.hpp"
#include "symtopo/corpus.hpp"
#include "symtopo/semigroup.hpp"

using namespace symtopo;

namespace {

// face of a ring cone selected by the single normal index set {i...}
Face face_of(const SemigroupRing& ring, std::vector<int> normal_indices) {
    return face_from_normals(ring.cone, normal_indices);
}

std::vector<Face> proper_faces(const SemigroupRing& ring) {
    std::vector<Face> out;
    for (const Face& f : faces_all(ring.cone))
        if (f.dim_face < ring.dim()) out.push_back(f);
    return out;
}

// Saturation-style brute force, independent of the halfspace oracle:
// b in P^(n) iff x^u * x^b in P^n for some monomial u on the face.
bool saturation_member(const Vec& b, const FacePrime& P, int n, Int u_degree_cap) {
    for (const Vec& u : enumerate_points(P.ring.cone, P.ring.weight, u_degree_cap)) {
        if (!point_in_face(P.ring.cone, P.face, u)) continue;
        if (ordinary_power_member(vec_add(b, u), P, n)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("make_ring: catalog rings") {
    auto quad = make_ring(quadrant_cone(2));
    CHECK(quad.basis == std::vector<Vec>{{0, 1}, {1, 0}});
    CHECK(quad.weight == Vec{1, 1});
    CHECK(quad.basis_complete);

    auto a1 = make_ring(a1_cone());
    CHECK(a1.basis == std::vector<Vec>{{1, 0}, {1, 1}, {1, 2}});
    CHECK(a1.weight == Vec{2, 0});
    CHECK(a1.basis_complete);

    auto quadric = make_ring(quadric_cone());
    CHECK(quadric.basis.size() == 4);
    CHECK(quadric.basis == quadric.cone.rays);
    CHECK(quadric.basis_complete);
}

TEST_CASE("face_prime: A1 height-one prime P = (y, z)") {
    auto ring = make_ring(a1_cone());
    // normals are {(0,1), (2,-1)}; index 0 vanishes on the ray (1,0)
    auto P = face_prime(ring, face_of(ring, {0}));
    CHECK(P.height == 1);
    CHECK(P.covering_normals == std::vector<int>{0});
    CHECK(P.gens == std::vector<Vec>{{1, 1}, {1, 2}});
}

TEST_CASE("face_prime: maximal monomial ideal of A1") {
    auto ring = make_ring(a1_cone());
    auto m = face_prime(ring, face_of(ring, {0, 1}));
    CHECK(m.height == 2);
    CHECK(m.gens.size() == 3);
}

TEST_CASE("face_prime: quadrant variable prime") {
    auto ring = make_ring(quadrant_cone(2));
    // normal index 1 is (1,0), vanishing on the ray (0,1); the prime is (x1)
    auto P = face_prime(ring, face_of(ring, {1}));
    CHECK(P.height == 1);
    CHECK(P.gens == std::vector<Vec>{{1, 0}});
}

TEST_CASE("face_prime rejects the whole cone") {
    auto ring = make_ring(a1_cone());
    try {
        face_prime(ring, face_of(ring, {}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::whole_cone_face);
    }
}

TEST_CASE("ordinary powers of the A1 prime") {
    auto ring = make_ring(a1_cone());
    auto P = face_prime(ring, face_of(ring, {0}));
    Vec z{1, 2};
    CHECK(ordinary_power_member(z, P, 0));
    CHECK(ordinary_power_member(z, P, 1));
    CHECK_FALSE(ordinary_power_member(z, P, 2));
}

TEST_CASE("symbolic powers of the A1 prime can be strictly larger") {
    auto ring = make_ring(a1_cone());
    auto P = face_prime(ring, face_of(ring, {0}));
    Vec z{1, 2};
    CHECK(symbolic_power_member(z, P, 2));
    CHECK_FALSE(symbolic_power_member(z, P, 3));
    CHECK(symbolic_order(z, P) == 2);
}

TEST_CASE("symbolic order on faces and on the polynomial ring") {
    auto a1 = make_ring(a1_cone());
    auto P = face_prime(a1, face_of(a1, {0}));
    CHECK(symbolic_order(Vec{3, 0}, P) == 0);  // x^3 lies on the face

    auto quad = make_ring(quadrant_cone(2));
    auto X = face_prime(quad, face_of(quad, {1}));  // P = (x1)
    CHECK(symbolic_order(Vec{3, 0}, X) == 3);  // valuation in a regular ring
}

TEST_CASE("first symbolic power is the prime itself") {
    auto ring = make_ring(a1_cone());
    for (const Face& f : proper_faces(ring)) {
        auto P = face_prime(ring, f);
        for (const Vec& b : enumerate_points(ring.cone, ring.weight, 6))
            CHECK(symbolic_power_member(b, P, 1) == ordinary_power_member(b, P, 1));
    }
}

TEST_CASE("maximal ideal: symbolic and ordinary powers agree on A1") {
    auto ring = make_ring(a1_cone());
    auto m = face_prime(ring, face_of(ring, {0, 1}));
    for (int n = 0; n <= 4; ++n) {
        auto s = symbolic_slice(m, n, 6);
        auto p = power_slice(m, n, 6);
        CHECK(s.monomials == p.monomials);
    }
}

TEST_CASE("valuation test for height-one primes") {
    auto ring = make_ring(a1_cone());
    auto P = face_prime(ring, face_of(ring, {0}));
    CHECK(valuation_member(Vec{1, 2}, P, 2));
    CHECK_FALSE(valuation_member(Vec{1, 0}, P, 1));
    CHECK(valuation_member(Vec{1, 1}, P, 1));
    CHECK_FALSE(valuation_member(Vec{1, 1}, P, 2));

    auto m = face_prime(ring, face_of(ring, {0, 1}));
    try {
        valuation_member(Vec{1, 1}, m, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_height_one);
    }
}

TEST_CASE("slices: windows onto symbolic and ordinary powers") {
    auto ring = make_ring(a1_cone());
    auto P = face_prime(ring, face_of(ring, {0}));

    auto s1 = symbolic_slice(P, 1, 6), p1 = power_slice(P, 1, 6);
    CHECK(s1.monomials == p1.monomials);
    CHECK(s1.min_gens_upto == p1.min_gens_upto);

    auto s2 = symbolic_slice(P, 2, 4), p2 = power_slice(P, 2, 4);
    Vec z{1, 2};
    CHECK(std::count(s2.monomials.begin(), s2.monomials.end(), z) == 1);
    CHECK(std::count(p2.monomials.begin(), p2.monomials.end(), z) == 0);
    // z is a minimal window generator of P^(2)
    CHECK(std::count(s2.min_gens_upto.begin(), s2.min_gens_upto.end(), z) == 1);

    auto s0 = symbolic_slice(P, 0, 4);
    CHECK(s0.monomials == enumerate_points(ring.cone, ring.weight, 4));
}

TEST_CASE("oracle consistency across the catalog: P^n inside P^(n), monotone in n") {
    for (const char* name : {"quadrant-2", "A1", "quadric", "whitney-3"}) {
        CAPTURE(name);
        auto ring = make_ring(catalog_cone(name));
        auto pts = enumerate_points(ring.cone, ring.weight, 6);
        for (const Face& f : proper_faces(ring)) {
            auto P = face_prime(ring, f);
            for (const Vec& b : pts) {
                bool prev = true;
                for (int n = 1; n <= 4; ++n) {
                    bool sym = symbolic_power_member(b, P, n);
                    if (ordinary_power_member(b, P, n)) CHECK(sym);
                    if (!prev) CHECK_FALSE(sym);  // monotone: false stays false
                    prev = sym;
                }
            }
        }
    }
}

TEST_CASE("height-one primes: halfspace oracle equals valuation oracle") {
    for (const char* name : {"quadrant-2", "quadrant-3", "A1", "quadric", "whitney-3"}) {
        CAPTURE(name);
        auto ring = make_ring(catalog_cone(name));
        auto pts = enumerate_points(ring.cone, ring.weight, 6);
        for (const Face& f : proper_faces(ring)) {
            if (ring.dim() - f.dim_face != 1) continue;
            auto P = face_prime(ring, f);
            for (const Vec& b : pts)
                for (int n = 0; n <= 5; ++n)
                    CHECK(symbolic_power_member(b, P, n) == valuation_member(b, P, n));
        }
    }
}

TEST_CASE("symbolic order is superadditive") {
    auto ring = make_ring(a1_cone());
    auto pts = enumerate_points(ring.cone, ring.weight, 4);
    for (const Face& f : proper_faces(ring)) {
        auto P = face_prime(ring, f);
        for (const Vec& b : pts)
            for (const Vec& c : pts)
                CHECK(symbolic_order(vec_add(b, c), P) >=
                      symbolic_order(b, P) + symbolic_order(c, P));
    }
}

TEST_CASE("polynomial rings are regular: symbolic equals ordinary") {
    auto ring = make_ring(quadrant_cone(3));
    for (const Face& f : proper_faces(ring)) {
        auto P = face_prime(ring, f);
        for (int n = 1; n <= 5; ++n) {
            auto s = symbolic_slice(P, n, 5), p = power_slice(P, n, 5);
            CHECK(s.monomials == p.monomials);
        }
    }
}

TEST_CASE("halfspace oracle agrees with saturation brute force on A1") {
    auto ring = make_ring(a1_cone());
    auto pts = enumerate_points(ring.cone, ring.weight, 5);
    for (const Face& f : proper_faces(ring)) {
        auto P = face_prime(ring, f);
        for (const Vec& b : pts)
            for (int n = 0; n <= 3; ++n) {
                CAPTURE(b);
                CAPTURE(n);
                CHECK(symbolic_power_member(b, P, n) == saturation_member(b, P, n, 24));
            }
    }
}

TEST_CASE("random 2D cones: oracles agree off the catalog") {
    // cones with negative coordinates exercise paths the catalog never hits
    SplitMix64 rng(20260808);
    int built = 0;
    while (built < 12) {
        Vec r1{1, static_cast<Int>(rng.bounded(9)) - 4};
        Vec r2{static_cast<Int>(rng.bounded(4)), static_cast<Int>(rng.bounded(9)) - 4};
        r1 = primitive(r1);
        r2 = primitive(r2);
        if (is_zero(r2) || r1 == r2 || r1 == vec_scale(-1, r2)) continue;
        if (r1[0] * r2[1] - r1[1] * r2[0] == 0) continue;  // parallel
        ++built;
        CAPTURE(r1);
        CAPTURE(r2);

        auto normals = facet_normals_from_rays({r1, r2});
        Cone cone = validate_cone({r1, r2}, normals);
        auto ring = make_ring(cone);
        REQUIRE(ring.basis_complete);

        // dual of the dual returns the rays
        auto back = facet_normals_from_rays(cone.facet_normals);
        std::sort(back.begin(), back.end(), lex_less);
        CHECK(back == cone.rays);

        Int window = std::min<Int>(ring.basis_bound, 24);
        auto pts = enumerate_points(cone, ring.weight, window);
        for (const Face& f : faces_all(cone)) {
            if (f.dim_face == 2) continue;
            auto P = face_prime(ring, f);
            for (const Vec& b : pts)
                for (int n = 1; n <= 3; ++n) {
                    bool sym = symbolic_power_member(b, P, n);
                    if (P.height == 1) CHECK(sym == valuation_member(b, P, n));
                    if (ordinary_power_member(b, P, n)) CHECK(sym);
                }
        }
    }
}

TEST_CASE("multiset cap raises an explicit error") {
    auto ring = make_ring(quadric_cone());
    auto P = face_prime(ring, face_from_normals(ring.cone, {0, 1, 2, 3}));
    Limits tight;
    tight.multiset_cap = 2;
    try {
        ordinary_power_member(Vec{3, 1, 1}, P, 3, tight);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::multiset_cap_exceeded);
    }
}

TEST_CASE("membership requires a point of the semigroup") {
    auto ring = make_ring(a1_cone());
    auto P = face_prime(ring, face_of(ring, {0}));
    CHECK_THROWS_AS(symbolic_power_member(Vec{0, 1}, P, 1), Error);   // outside the cone
    CHECK_THROWS_AS(symbolic_power_member(Vec{1, 1, 1}, P, 1), Error);  // wrong arity
}
