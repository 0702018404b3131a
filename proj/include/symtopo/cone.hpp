#pragma once

// Exact rational polyhedral cone primitives: validation of a double
// (ray + inward facet normal) description, dual computation from rays,
// lattice point enumeration, Hilbert bases with a certified completeness
// bound, and the exposed face lattice.
//
// All cones here are full-dimensional and strongly convex (pointed), which
// is what makes faces ray-generated and Hilbert bases finite and unique.

#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "symtopo/errors.hpp"
#include "symtopo/ints.hpp"
#include "symtopo/limits.hpp"

namespace symtopo {

struct Cone {
    int dim = 0;
    std::vector<Vec> rays;           // primitive, deduplicated
    std::vector<Vec> facet_normals;  // primitive, inward

    bool operator==(const Cone&) const = default;
};

/// An exposed face in canonical form: normal_indices is the full set of
/// facets containing the face (so equal faces compare equal).
struct Face {
    std::vector<int> normal_indices;  // sorted ascending
    int dim_face = 0;

    bool operator==(const Face&) const = default;
};

namespace detail {

inline void check_common_arity(const std::vector<Vec>& vs, const char* what) {
    require(!vs.empty(), errc::invalid_parameter, std::string(what) + ": empty vector list");
    size_t m = vs.front().size();
    require(m >= 1, errc::invalid_parameter, std::string(what) + ": zero-dimensional vectors");
    for (const Vec& v : vs)
        require(v.size() == m, errc::mixed_arity, std::string(what) + ": mixed vector lengths");
}

/// rank over the rationals, exact integer elimination
inline int rank_of(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows.front().size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t j = r + 1; j < rows.size(); ++j) {
            if (rows[j][c] == 0) continue;
            Int a = rows[r][c], b = rows[j][c];
            Int g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
            Int fa = b / g, fb = a / g;
            for (size_t k = 0; k < cols; ++k)
                rows[j][k] = checked_sub(checked_mul(fb, rows[j][k]), checked_mul(fa, rows[r][k]));
            rows[j] = primitive(std::move(rows[j]));
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Exact determinant (Bareiss fraction-free elimination).
inline Int det(std::vector<Vec> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j])) / prev;
        prev = m[k][k];
    }
    return checked_mul(sign, m[n - 1][n - 1]);
}

/// Generalized cross product: a vector orthogonal to all m-1 input rows
/// (zero iff the rows are dependent).
inline Vec cross_vector(const std::vector<Vec>& rows) {
    const size_t m = rows.empty() ? 1 : rows.front().size();
    Vec v(m, 0);
    for (size_t i = 0; i < m; ++i) {
        std::vector<Vec> minor;
        minor.reserve(rows.size());
        for (const Vec& r : rows) {
            Vec cut;
            cut.reserve(m - 1);
            for (size_t j = 0; j < m; ++j)
                if (j != i) cut.push_back(r[j]);
            minor.push_back(std::move(cut));
        }
        Int d = det(std::move(minor));
        v[i] = (i % 2 == 0) ? d : checked_mul(Int(-1), d);
    }
    return v;
}

inline std::vector<Vec> canonicalize_vectors(std::vector<Vec> vs) {
    for (Vec& v : vs) {
        require(!is_zero(v), errc::invalid_parameter, "zero vector in cone description");
        v = primitive(std::move(v));
    }
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

}  // namespace detail

/// Validate a ray/normal pair description and return the canonical Cone
/// (vectors primitivized, deduplicated, sorted).
inline Cone validate_cone(std::vector<Vec> rays, std::vector<Vec> facet_normals) {
    detail::check_common_arity(rays, "rays");
    detail::check_common_arity(facet_normals, "facet_normals");
    const int m = static_cast<int>(rays.front().size());
    require(static_cast<int>(facet_normals.front().size()) == m, errc::mixed_arity,
            "rays and normals have different ambient dimensions");

    Cone cone;
    cone.dim = m;
    cone.rays = detail::canonicalize_vectors(std::move(rays));
    cone.facet_normals = detail::canonicalize_vectors(std::move(facet_normals));

    for (const Vec& r : cone.rays)
        for (const Vec& nu : cone.facet_normals)
            require(dot(r, nu) >= 0, errc::inconsistent_h_representation,
                    "ray " + format_tuple(r) + " violates normal " + format_tuple(nu));

    for (const Vec& r : cone.rays) {
        Vec neg = vec_scale(-1, r);
        require(!std::binary_search(cone.rays.begin(), cone.rays.end(), neg, lex_less),
                errc::not_strongly_convex,
                "rays " + format_tuple(r) + " and " + format_tuple(neg) + " span a line");
    }

    require(detail::rank_of(cone.rays) == m, errc::not_full_dimensional,
            "rays do not span the ambient space");
    require(detail::rank_of(cone.facet_normals) == m, errc::not_strongly_convex,
            "normals do not span; the cone contains a line");

    // every normal supports a facet; every ray is an extreme ray
    for (const Vec& nu : cone.facet_normals) {
        std::vector<Vec> on_facet;
        for (const Vec& r : cone.rays)
            if (dot(r, nu) == 0) on_facet.push_back(r);
        require(detail::rank_of(on_facet) == m - 1, errc::inconsistent_h_representation,
                "normal " + format_tuple(nu) + " does not support a facet");
    }
    for (const Vec& r : cone.rays) {
        std::vector<Vec> vanishing;
        for (const Vec& nu : cone.facet_normals)
            if (dot(r, nu) == 0) vanishing.push_back(nu);
        require(detail::rank_of(vanishing) == m - 1, errc::inconsistent_h_representation,
                "ray " + format_tuple(r) + " is not an extreme ray of the described cone");
    }
    return cone;
}

/// Inward primitive facet normals of the cone generated by `rays`.
/// Composing with validate_cone(rays, result) succeeds for pointed
/// full-dimensional input.
inline std::vector<Vec> facet_normals_from_rays(std::vector<Vec> rays, const Limits& limits = {}) {
    detail::check_common_arity(rays, "rays");
    const int m = static_cast<int>(rays.front().size());
    require(m <= limits.dim_cap, errc::dimension_cap_exceeded,
            "ambient dimension " + std::to_string(m) + " exceeds dual-computation cap " +
                std::to_string(limits.dim_cap));
    rays = detail::canonicalize_vectors(std::move(rays));
    require(detail::rank_of(rays) == m, errc::not_full_dimensional,
            "rays do not span the ambient space");

    std::vector<Vec> normals;
    auto keep_oriented = [&](Vec v) {
        if (is_zero(v)) return;
        v = primitive(std::move(v));
        bool all_nonneg = true, all_nonpos = true;
        for (const Vec& r : rays) {
            Int p = dot(r, v);
            if (p < 0) all_nonneg = false;
            if (p > 0) all_nonpos = false;
        }
        if (!all_nonneg && !all_nonpos) return;  // not a supporting hyperplane
        if (all_nonpos && !all_nonneg) v = vec_scale(-1, v);
        normals.push_back(std::move(v));
    };

    if (m == 1) {
        keep_oriented(Vec{1});
        keep_oriented(Vec{-1});
    } else {
        // each facet is spanned by m-1 independent rays; sweep all subsets
        std::vector<size_t> idx(m - 1);
        std::vector<Vec> subset(m - 1);
        auto rec = [&](auto&& self, size_t start, size_t depth) -> void {
            if (depth == static_cast<size_t>(m - 1)) {
                for (size_t i = 0; i < idx.size(); ++i) subset[i] = rays[idx[i]];
                keep_oriented(detail::cross_vector(subset));
                return;
            }
            for (size_t i = start; i < rays.size(); ++i) {
                idx[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }

    std::sort(normals.begin(), normals.end(), lex_less);
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    return normals;
}

inline bool cone_contains(const Cone& cone, const Vec& p) {
    for (const Vec& nu : cone.facet_normals)
        if (dot(p, nu) < 0) return false;
    return true;
}

/// All lattice points p of the cone with <p, weight> <= max_degree,
/// sorted by degree then lexicographically.
inline std::vector<Vec> enumerate_points(const Cone& cone, const Vec& weight, Int max_degree,
                                         const Limits& limits = {}) {
    require(max_degree >= 0, errc::invalid_parameter, "max_degree must be nonnegative");
    require(static_cast<int>(weight.size()) == cone.dim, errc::mixed_arity,
            "weight dimension mismatch");
    std::vector<Int> ray_deg;
    for (const Vec& r : cone.rays) {
        Int d = dot(r, weight);
        require(d >= 1, errc::invalid_parameter,
                "weight is not strictly positive on ray " + format_tuple(r));
        ray_deg.push_back(d);
    }

    const int m = cone.dim;
    // Coordinate box: any cone point of degree <= D is a nonnegative
    // combination sum mu_j * (r_j / deg_j) with sum mu_j <= D.
    Vec lo(m, 0), hi(m, 0);
    for (int i = 0; i < m; ++i) {
        for (size_t j = 0; j < cone.rays.size(); ++j) {
            Int num = checked_mul(max_degree, cone.rays[j][i]);
            hi[i] = std::max(hi[i], ceil_div(num, ray_deg[j]));
            lo[i] = std::min(lo[i], floor_div(num, ray_deg[j]));
        }
    }

    // constraints c.p >= rhs: every facet normal (rhs 0) and -weight (rhs -D)
    std::vector<Vec> coef(cone.facet_normals);
    std::vector<Int> rhs(coef.size(), 0);
    coef.push_back(vec_scale(-1, weight));
    rhs.push_back(checked_sub(0, max_degree));

    // best achievable tail value per constraint from coordinate k on
    std::vector<std::vector<Int>> tail_max(coef.size(), std::vector<Int>(m + 1, 0));
    for (size_t c = 0; c < coef.size(); ++c)
        for (int k = m - 1; k >= 0; --k)
            tail_max[c][k] = checked_add(tail_max[c][k + 1],
                                         std::max(checked_mul(coef[c][k], lo[k]),
                                                  checked_mul(coef[c][k], hi[k])));

    std::vector<Vec> out;
    Vec p(m, 0);
    std::vector<Int> partial(coef.size(), 0);
    auto rec = [&](auto&& self, int k) -> void {
        for (size_t c = 0; c < coef.size(); ++c)
            if (checked_add(partial[c], tail_max[c][k]) < rhs[c]) return;
        if (k == m) {
            require(static_cast<long long>(out.size()) < limits.point_cap,
                    errc::enumeration_cap_exceeded,
                    "enumeration exceeds point cap " + std::to_string(limits.point_cap));
            out.push_back(p);
            return;
        }
        for (Int v = lo[k]; v <= hi[k]; ++v) {
            p[k] = v;
            for (size_t c = 0; c < coef.size(); ++c)
                partial[c] = checked_add(partial[c], checked_mul(coef[c][k], v));
            self(self, k + 1);
            for (size_t c = 0; c < coef.size(); ++c)
                partial[c] = checked_sub(partial[c], checked_mul(coef[c][k], v));
        }
        p[k] = 0;
    };
    rec(rec, 0);

    std::sort(out.begin(), out.end(),
              [&](const Vec& a, const Vec& b) { return deg_lex_less(a, b, weight); });
    return out;
}

struct HilbertBasisResult {
    std::vector<Vec> points;  // degree-then-lex order
    bool complete = false;    // degree_cap reached the certified bound
    Int certified_bound = 0;
};

/// Certified degree bound for Hilbert basis elements: any indecomposable
/// point lies, by Caratheodory, in a simplicial subcone spanned by rays, and
/// there below the degree of the fundamental parallelepiped. Maximizing over
/// independent ray subsets covers every simplicial subcone of every
/// triangulation.
inline Int hilbert_degree_bound(const Cone& cone, const Vec& weight) {
    const int m = cone.dim;
    std::vector<Int> deg;
    for (const Vec& r : cone.rays) deg.push_back(dot(r, weight));
    Int best = 0;
    std::vector<size_t> idx(m);
    std::vector<Vec> subset(m);
    auto rec = [&](auto&& self, size_t start, size_t depth, Int sum) -> void {
        if (depth == static_cast<size_t>(m)) {
            for (size_t i = 0; i < idx.size(); ++i) subset[i] = cone.rays[idx[i]];
            if (detail::rank_of(subset) == m) best = std::max(best, sum);
            return;
        }
        for (size_t i = start; i < cone.rays.size(); ++i) {
            idx[depth] = i;
            self(self, i + 1, depth + 1, checked_add(sum, deg[i]));
        }
    };
    rec(rec, 0, 0, 0);
    require(best > 0, errc::not_full_dimensional, "no independent ray subset spans the space");
    return best;
}

/// Minimal monoid generators of (cone lattice points of degree <= degree_cap):
/// the points that are not a sum of two nonzero cone lattice points.
inline HilbertBasisResult hilbert_basis(const Cone& cone, const Vec& weight, Int degree_cap,
                                        const Limits& limits = {}) {
    HilbertBasisResult res;
    res.certified_bound = hilbert_degree_bound(cone, weight);
    res.complete = degree_cap >= res.certified_bound;

    std::vector<Vec> pts = enumerate_points(cone, weight, degree_cap, limits);
    std::unordered_set<Vec, VecHash> pset(pts.begin(), pts.end());
    for (const Vec& p : pts) {
        if (is_zero(p)) continue;
        Int dp = dot(p, weight);
        bool decomposable = false;
        for (const Vec& q : pts) {
            if (is_zero(q)) continue;
            Int dq = dot(q, weight);
            if (2 * dq > dp) break;  // pts sorted by degree; summands come in pairs
            Vec diff = vec_sub(p, q);
            if (!is_zero(diff) && pset.count(diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) res.points.push_back(p);
    }
    return res;
}

/// Every exposed face, in canonical form, ordered by decreasing dimension
/// (whole cone first, origin last). Face A is contained in face B iff
/// A.normal_indices is a superset of B.normal_indices.
inline std::vector<Face> faces_all(const Cone& cone) {
    const size_t nn = cone.facet_normals.size();
    require(nn <= 63, errc::dimension_cap_exceeded, "too many facets for face enumeration");
    const uint64_t full = (nn == 63) ? ~0ull : ((1ull << nn) - 1);

    std::vector<uint64_t> ray_zero(cone.rays.size(), 0);
    for (size_t i = 0; i < cone.rays.size(); ++i)
        for (size_t j = 0; j < nn; ++j)
            if (dot(cone.rays[i], cone.facet_normals[j]) == 0) ray_zero[i] |= 1ull << j;

    auto closure = [&](uint64_t mask) {
        uint64_t closed = full;
        bool any = false;
        for (size_t i = 0; i < cone.rays.size(); ++i)
            if ((ray_zero[i] & mask) == mask) {
                closed &= ray_zero[i];
                any = true;
            }
        return any ? closed : full;  // no rays: the origin face
    };
    auto face_dim = [&](uint64_t mask) {
        std::vector<Vec> in_face;
        for (size_t i = 0; i < cone.rays.size(); ++i)
            if ((ray_zero[i] & mask) == mask) in_face.push_back(cone.rays[i]);
        return detail::rank_of(in_face);
    };

    std::map<uint64_t, int> seen;  // canonical mask -> dim
    std::vector<uint64_t> queue{closure(0)};
    seen[queue[0]] = face_dim(queue[0]);
    while (!queue.empty()) {
        uint64_t cur = queue.back();
        queue.pop_back();
        for (size_t j = 0; j < nn; ++j) {
            if (cur & (1ull << j)) continue;
            uint64_t next = closure(cur | (1ull << j));
            if (!seen.count(next)) {
                seen[next] = face_dim(next);
                queue.push_back(next);
            }
        }
    }

    std::vector<Face> faces;
    for (const auto& [mask, dim] : seen) {
        Face f;
        f.dim_face = dim;
        for (size_t j = 0; j < nn; ++j)
            if (mask & (1ull << j)) f.normal_indices.push_back(static_cast<int>(j));
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dim_face != b.dim_face) return a.dim_face > b.dim_face;
        return a.normal_indices < b.normal_indices;
    });
    return faces;
}

/// Canonical form of the face cut out by an arbitrary subset of facets.
inline Face face_from_normals(const Cone& cone, const std::vector<int>& normal_indices) {
    for (int i : normal_indices)
        require(i >= 0 && i < static_cast<int>(cone.facet_normals.size()), errc::invalid_parameter,
                "facet normal index out of range: " + std::to_string(i));
    std::vector<Vec> in_face;
    for (const Vec& r : cone.rays) {
        bool on = true;
        for (int i : normal_indices)
            if (dot(r, cone.facet_normals[i]) != 0) {
                on = false;
                break;
            }
        if (on) in_face.push_back(r);
    }
    Face f;
    f.dim_face = detail::rank_of(in_face);
    for (size_t j = 0; j < cone.facet_normals.size(); ++j) {
        bool contains_face = true;
        for (const Vec& r : in_face)
            if (dot(r, cone.facet_normals[j]) != 0) {
                contains_face = false;
                break;
            }
        if (contains_face) f.normal_indices.push_back(static_cast<int>(j));
    }
    return f;
}

inline bool point_in_face(const Cone& cone, const Face& face, const Vec& p) {
    for (int i : face.normal_indices)
        if (dot(p, cone.facet_normals[i]) != 0) return false;
    return cone_contains(cone, p);
}

}  // namespace symtopo
