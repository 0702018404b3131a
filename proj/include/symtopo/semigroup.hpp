#pragma once

// Normal affine semigroup rings F[C cap Z^m] and their monomial primes.
// A proper face tau of the semigroup cone C determines the prime P_tau
// spanned by all monomials outside tau; ordinary and symbolic powers of
// P_tau are decided by exact membership oracles on exponent vectors.
//
// Symbolic membership oracle. By definition f lies in P^(n) iff uf lies in
// P^n for some u outside P. For a monomial x^b this reduces to a halfspace
// test: b is in P^(n) iff some multiset G of n generators of P has
//   <b - sum G, nu_i> >= 0 for every facet nu_i containing tau.
// One direction: if x^u * x^b = x^(sum G) * x^c with c in C and x^u not in
// P, then u lies on tau, so <u, nu_i> = 0 for the covering facets and
// <b - sum G, nu_i> = <c, nu_i> >= 0. (Monomials form a basis of the ring,
// so a monomial lies in the monomial ideal P^n iff it is one of the basis
// monomials of P^n; no coefficient cancellation can occur.) Conversely,
// given such a G, choose w a lattice point in the relative interior of tau
// (positive against every non-covering facet) and u = k*w for large k: then
// u + (b - sum G) lands in C, so x^u x^b lies in P^n while x^u stays
// outside P. The height-one valuation test and a saturation-style brute
// force cross-check this oracle in the test suite.

#include <algorithm>
#include <string>
#include <vector>

#include "symtopo/cone.hpp"
#include "symtopo/errors.hpp"
#include "symtopo/ints.hpp"
#include "symtopo/limits.hpp"

namespace symtopo {

struct SemigroupRing {
    Cone cone;                    // the semigroup cone C (dual side)
    std::vector<Vec> basis;       // Hilbert basis of C cap Z^m
    Vec weight;                   // strictly positive grading
    bool basis_complete = false;  // certified complete
    Int basis_bound = 0;

    int dim() const { return cone.dim; }
    bool operator==(const SemigroupRing&) const = default;
};

/// Ring with certified-complete Hilbert basis and the canonical grading
/// weight (sum of facet normals, strictly positive by strong convexity).
inline SemigroupRing make_ring(const Cone& cone, const Limits& limits = {}) {
    SemigroupRing ring;
    ring.cone = cone;
    ring.weight = Vec(cone.dim, 0);
    for (const Vec& nu : cone.facet_normals) ring.weight = vec_add(ring.weight, nu);
    Int bound = hilbert_degree_bound(cone, ring.weight);
    HilbertBasisResult hb = hilbert_basis(cone, ring.weight, bound, limits);
    ring.basis = hb.points;
    ring.basis_complete = hb.complete;
    ring.basis_bound = hb.certified_bound;
    for (const Vec& h : ring.basis)
        require(dot(h, ring.weight) >= 1, errc::invalid_parameter, "degenerate basis element");
    return ring;
}

/// The monomial prime attached to a proper face: generated by every Hilbert
/// basis element outside the face. The generating set need not be minimal;
/// neither oracle requires minimality.
struct FacePrime {
    SemigroupRing ring;
    Face face;
    std::vector<Vec> gens;             // basis \ face
    std::vector<int> covering_normals; // facets containing the face
    int height = 0;

    bool operator==(const FacePrime&) const = default;
};

inline FacePrime face_prime(const SemigroupRing& ring, const Face& face) {
    require(face.dim_face < ring.dim(), errc::whole_cone_face,
            "the whole cone is not a prime of interest");
    FacePrime P;
    P.ring = ring;
    P.face = face;
    P.covering_normals = face.normal_indices;
    P.height = ring.dim() - face.dim_face;
    for (const Vec& h : ring.basis)
        if (!point_in_face(ring.cone, face, h)) P.gens.push_back(h);
    for (const Vec& g : P.gens) {
        Int s = 0;
        for (int i : P.covering_normals) s += dot(g, ring.cone.facet_normals[i]);
        require(s >= 1, errc::invalid_parameter, "generator lies on the face");
    }
    return P;
}

namespace detail {

inline void check_multiset_cap(size_t num_gens, int n, const Limits& limits) {
    // C(num_gens + n - 1, n), capped during evaluation
    long long count = 1;
    for (int i = 1; i <= n; ++i) {
        count = count * static_cast<long long>(num_gens + n - i) / i;
        if (count > limits.multiset_cap)
            fail(errc::multiset_cap_exceeded,
                 "multiset enumeration over " + std::to_string(num_gens) + " generators at power " +
                     std::to_string(n) + " exceeds cap " + std::to_string(limits.multiset_cap));
    }
}

/// Is there a multiset of n generators with all tracked pairings of
/// b - sum(G) nonnegative? Pairings only decrease while subtracting
/// generators, so branches are pruned as soon as one goes negative.
inline bool multiset_member(const Vec& b, const std::vector<Vec>& gens,
                            const std::vector<Vec>& tracked_normals, int n,
                            const Limits& limits) {
    if (n == 0) return true;
    check_multiset_cap(gens.size(), n, limits);

    const size_t K = gens.size(), C = tracked_normals.size();
    std::vector<Int> residual(C);
    for (size_t c = 0; c < C; ++c) {
        residual[c] = dot(b, tracked_normals[c]);
        if (residual[c] < 0) return false;
    }
    std::vector<std::vector<Int>> gp(K, std::vector<Int>(C));
    std::vector<Int> gen_total(K, 0);
    Int min_total = 0;
    for (size_t k = 0; k < K; ++k) {
        for (size_t c = 0; c < C; ++c) {
            gp[k][c] = dot(gens[k], tracked_normals[c]);
            gen_total[k] = checked_add(gen_total[k], gp[k][c]);
        }
        min_total = (k == 0) ? gen_total[k] : std::min(min_total, gen_total[k]);
    }
    if (K == 0) return false;

    auto rec = [&](auto&& self, size_t from, int remaining, Int budget) -> bool {
        if (remaining == 0) return true;
        if (budget < checked_mul(static_cast<Int>(remaining), min_total)) return false;
        for (size_t k = from; k < K; ++k) {
            bool fits = true;
            for (size_t c = 0; c < C; ++c)
                if (residual[c] < gp[k][c]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (size_t c = 0; c < C; ++c) residual[c] -= gp[k][c];
            bool ok = self(self, k, remaining - 1, budget - gen_total[k]);
            for (size_t c = 0; c < C; ++c) residual[c] += gp[k][c];
            if (ok) return true;
        }
        return false;
    };
    Int budget = 0;
    for (size_t c = 0; c < C; ++c) budget = checked_add(budget, residual[c]);
    return rec(rec, 0, n, budget);
}

}  // namespace detail

inline void check_ring_point(const SemigroupRing& ring, const Vec& b) {
    require(static_cast<int>(b.size()) == ring.dim(), errc::mixed_arity, "point arity mismatch");
    require(cone_contains(ring.cone, b), errc::invalid_parameter,
            "point " + format_tuple(b) + " is not in the semigroup");
}

/// b in P^n: some multiset of n generators divides b within the semigroup.
inline bool ordinary_power_member(const Vec& b, const FacePrime& P, int n,
                                  const Limits& limits = {}) {
    require(n >= 0, errc::invalid_parameter, "power must be >= 0");
    check_ring_point(P.ring, b);
    return detail::multiset_member(b, P.gens, P.ring.cone.facet_normals, n, limits);
}

/// b in P^(n): the halfspace oracle documented above (covering facets only).
inline bool symbolic_power_member(const Vec& b, const FacePrime& P, int n,
                                  const Limits& limits = {}) {
    require(n >= 0, errc::invalid_parameter, "power must be >= 0");
    check_ring_point(P.ring, b);
    std::vector<Vec> covering;
    for (int i : P.covering_normals) covering.push_back(P.ring.cone.facet_normals[i]);
    return detail::multiset_member(b, P.gens, covering, n, limits);
}

/// max { a : b in P^(a) }; finite because every generator pairs at least 1
/// against the covering facets, so a is at most the covering pairing sum of b.
inline int symbolic_order(const Vec& b, const FacePrime& P, const Limits& limits = {}) {
    check_ring_point(P.ring, b);
    Int cap = 0;
    for (int i : P.covering_normals) cap = checked_add(cap, dot(b, P.ring.cone.facet_normals[i]));
    int a = 0;
    while (a < cap && symbolic_power_member(b, P, a + 1, limits)) ++a;
    return a;
}

/// Height-one fast path: P^(n) is the divisorial valuation ideal of its
/// single covering facet.
inline bool valuation_member(const Vec& b, const FacePrime& P, int n) {
    require(P.height == 1 && P.covering_normals.size() == 1, errc::not_height_one,
            "valuation test requires a height-one prime");
    check_ring_point(P.ring, b);
    return dot(b, P.ring.cone.facet_normals[P.covering_normals.front()]) >= n;
}

/// Finite window onto an infinite monomial ideal: the exact member set among
/// lattice points of degree <= degree_bound, plus the generators that are
/// minimal under semigroup divisibility within the window.
struct SemigroupIdealSlice {
    Int degree_bound = 0;
    std::vector<Vec> monomials;      // degree-then-lex
    std::vector<Vec> min_gens_upto;  // minimal within the window
};

namespace detail {

template <typename MemberFn>
inline SemigroupIdealSlice make_slice(const SemigroupRing& ring, Int d, const Limits& limits,
                                      MemberFn&& member) {
    SemigroupIdealSlice slice;
    slice.degree_bound = d;
    for (const Vec& p : enumerate_points(ring.cone, ring.weight, d, limits))
        if (member(p)) slice.monomials.push_back(p);
    for (const Vec& p : slice.monomials) {
        bool generated = false;
        for (const Vec& q : slice.monomials) {
            if (dot(q, ring.weight) >= dot(p, ring.weight)) break;  // sorted by degree
            if (cone_contains(ring.cone, vec_sub(p, q))) {
                generated = true;
                break;
            }
        }
        if (!generated) slice.min_gens_upto.push_back(p);
    }
    return slice;
}

}  // namespace detail

inline SemigroupIdealSlice symbolic_slice(const FacePrime& P, int n, Int d,
                                          const Limits& limits = {}) {
    return detail::make_slice(P.ring, d, limits,
                              [&](const Vec& b) { return symbolic_power_member(b, P, n, limits); });
}

inline SemigroupIdealSlice power_slice(const FacePrime& P, int n, Int d,
                                       const Limits& limits = {}) {
    return detail::make_slice(P.ring, d, limits,
                              [&](const Vec& b) { return ordinary_power_member(b, P, n, limits); });
}

}  // namespace symtopo
