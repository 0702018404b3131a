#pragma once

// Exact monomial ideal arithmetic in polynomial rings, identified with
// exponent combinatorics over N^m. No coefficient field is represented:
// sums, products, intersections, membership and squarefree symbolic powers
// are all field-independent.

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "symtopo/errors.hpp"
#include "symtopo/ints.hpp"

namespace symtopo {

/// A monomial ideal by its unique minimal generators (an antichain under
/// divisibility), sorted degree-then-lex so equal ideals compare equal.
/// Empty min_gens is the zero ideal; the unit ideal is generated by 1.
struct PolyMonomialIdeal {
    int ambient_vars = 0;
    std::vector<Vec> min_gens;

    bool is_zero() const { return min_gens.empty(); }
    bool is_unit() const { return min_gens.size() == 1 && symtopo::is_zero(min_gens.front()); }

    bool operator==(const PolyMonomialIdeal&) const = default;
};

/// P = (x_i : i in support), indices 0-based.
struct VariablePrime {
    int ambient_vars = 0;
    std::vector<int> support;  // sorted, nonempty

    bool operator==(const VariablePrime&) const = default;
};

namespace detail {

inline void check_arity(const PolyMonomialIdeal& I, const PolyMonomialIdeal& J) {
    require(I.ambient_vars == J.ambient_vars, errc::mixed_arity,
            "ideals live in different polynomial rings");
}

}  // namespace detail

/// The divisibility antichain of `gens`, generating the same ideal.
inline PolyMonomialIdeal minimalize(int ambient_vars, std::vector<Vec> gens) {
    require(ambient_vars >= 1, errc::invalid_parameter, "ambient_vars must be >= 1");
    for (const Vec& g : gens) {
        require(static_cast<int>(g.size()) == ambient_vars, errc::mixed_arity,
                "generator arity mismatch");
        require(all_nonnegative(g), errc::invalid_parameter,
                "negative exponent in generator " + format_tuple(g));
    }
    std::sort(gens.begin(), gens.end(), tdeg_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    PolyMonomialIdeal I;
    I.ambient_vars = ambient_vars;
    for (const Vec& g : gens) {
        bool dominated = false;
        for (const Vec& kept : I.min_gens)
            if (divides(kept, g)) {
                dominated = true;
                break;
            }
        if (!dominated) I.min_gens.push_back(g);
    }
    return I;
}

inline PolyMonomialIdeal zero_ideal(int ambient_vars) { return minimalize(ambient_vars, {}); }

inline PolyMonomialIdeal unit_ideal(int ambient_vars) {
    return minimalize(ambient_vars, {Vec(ambient_vars, 0)});
}

inline PolyMonomialIdeal ideal_sum(const PolyMonomialIdeal& I, const PolyMonomialIdeal& J) {
    detail::check_arity(I, J);
    std::vector<Vec> gens = I.min_gens;
    gens.insert(gens.end(), J.min_gens.begin(), J.min_gens.end());
    return minimalize(I.ambient_vars, std::move(gens));
}

inline PolyMonomialIdeal ideal_product(const PolyMonomialIdeal& I, const PolyMonomialIdeal& J) {
    detail::check_arity(I, J);
    std::vector<Vec> gens;
    gens.reserve(I.min_gens.size() * J.min_gens.size());
    for (const Vec& g : I.min_gens)
        for (const Vec& h : J.min_gens) gens.push_back(vec_add(g, h));
    return minimalize(I.ambient_vars, std::move(gens));
}

inline PolyMonomialIdeal ideal_power(const PolyMonomialIdeal& I, int n) {
    require(n >= 0, errc::invalid_parameter, "power exponent must be >= 0");
    PolyMonomialIdeal acc = unit_ideal(I.ambient_vars);
    for (int i = 0; i < n; ++i) acc = ideal_product(acc, I);
    return acc;
}

inline PolyMonomialIdeal ideal_intersect(const PolyMonomialIdeal& I, const PolyMonomialIdeal& J) {
    detail::check_arity(I, J);
    std::vector<Vec> gens;
    gens.reserve(I.min_gens.size() * J.min_gens.size());
    std::unordered_set<Vec, VecHash> seen;
    for (const Vec& g : I.min_gens)
        for (const Vec& h : J.min_gens) {
            Vec l = componentwise_max(g, h);
            if (seen.insert(l).second) gens.push_back(std::move(l));
        }
    return minimalize(I.ambient_vars, std::move(gens));
}

/// (I : x^u)
inline PolyMonomialIdeal ideal_colon(const PolyMonomialIdeal& I, const Vec& u) {
    require(static_cast<int>(u.size()) == I.ambient_vars, errc::mixed_arity, "colon arity mismatch");
    require(all_nonnegative(u), errc::invalid_parameter, "colon by a non-monomial");
    std::vector<Vec> gens;
    for (const Vec& g : I.min_gens) {
        Vec q(g.size());
        for (size_t i = 0; i < g.size(); ++i) q[i] = std::max<Int>(g[i] - u[i], 0);
        gens.push_back(std::move(q));
    }
    return minimalize(I.ambient_vars, std::move(gens));
}

inline bool ideal_member(const Vec& b, const PolyMonomialIdeal& I) {
    require(static_cast<int>(b.size()) == I.ambient_vars, errc::mixed_arity,
            "member arity mismatch");
    for (const Vec& g : I.min_gens)
        if (divides(g, b)) return true;
    return false;
}

inline bool ideal_contains(const PolyMonomialIdeal& I, const PolyMonomialIdeal& J) {
    detail::check_arity(I, J);
    for (const Vec& g : J.min_gens)
        if (!ideal_member(g, I)) return false;
    return true;
}

inline bool is_squarefree(const PolyMonomialIdeal& I) {
    for (const Vec& g : I.min_gens)
        for (Int e : g)
            if (e > 1) return false;
    return true;
}

inline PolyMonomialIdeal variable_prime_ideal(const VariablePrime& P) {
    std::vector<Vec> gens;
    for (int i : P.support) {
        Vec e(P.ambient_vars, 0);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return minimalize(P.ambient_vars, std::move(gens));
}

/// Minimal primes of a squarefree monomial ideal: the minimal vertex covers
/// of the hypergraph of generator supports. Ordered by size then lex.
inline std::vector<VariablePrime> minimal_primes(const PolyMonomialIdeal& I) {
    require(is_squarefree(I), errc::not_squarefree, "minimal_primes requires a squarefree ideal");
    require(!I.is_zero() && !I.is_unit(), errc::invalid_parameter,
            "minimal_primes requires a nonzero proper ideal");
    const int m = I.ambient_vars;
    require(m <= 20, errc::dimension_cap_exceeded, "too many variables for cover enumeration");

    std::vector<uint32_t> edges;
    for (const Vec& g : I.min_gens) {
        uint32_t e = 0;
        for (int i = 0; i < m; ++i)
            if (g[i] == 1) e |= 1u << i;
        edges.push_back(e);
    }

    std::vector<uint32_t> covers;
    for (uint32_t s = 1; s < (1u << m); ++s) {
        bool covers_all = true;
        for (uint32_t e : edges)
            if ((e & s) == 0) {
                covers_all = false;
                break;
            }
        if (covers_all) covers.push_back(s);
    }
    std::sort(covers.begin(), covers.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    std::vector<uint32_t> minimal;
    for (uint32_t s : covers) {
        bool has_smaller = false;
        for (uint32_t t : minimal)
            if ((t & s) == t) {
                has_smaller = true;
                break;
            }
        if (!has_smaller) minimal.push_back(s);
    }

    std::vector<VariablePrime> primes;
    for (uint32_t s : minimal) {
        VariablePrime P;
        P.ambient_vars = m;
        for (int i = 0; i < m; ++i)
            if (s & (1u << i)) P.support.push_back(i);
        primes.push_back(std::move(P));
    }
    return primes;
}

/// Max height (= support size) over the minimal primes.
inline int big_height(const PolyMonomialIdeal& I) {
    auto primes = minimal_primes(I);
    size_t h = 0;
    for (const auto& P : primes) h = std::max(h, P.support.size());
    return static_cast<int>(h);
}

/// All monomials of degree n supported on `support`: the minimal generators
/// of P^n for the variable prime P.
inline std::vector<Vec> variable_prime_power_gens(const VariablePrime& P, int n) {
    std::vector<Vec> out;
    Vec cur(P.ambient_vars, 0);
    auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
        if (pos + 1 == P.support.size()) {
            cur[P.support[pos]] = remaining;
            out.push_back(cur);
            cur[P.support[pos]] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[P.support[pos]] = e;
            self(self, pos + 1, remaining - e);
            cur[P.support[pos]] = 0;
        }
    };
    rec(rec, 0, n);
    return out;
}

/// Symbolic power of a squarefree monomial ideal: the intersection of the
/// n-th powers of its minimal primes. For squarefree ideals all associated
/// primes of powers relevant here are minimal, so this is unambiguous.
inline PolyMonomialIdeal symbolic_power_poly(const PolyMonomialIdeal& I, int n) {
    require(n >= 0, errc::invalid_parameter, "symbolic exponent must be >= 0");
    require(is_squarefree(I), errc::not_squarefree, "symbolic_power_poly requires squarefree input");
    if (n == 0 || I.is_unit()) return unit_ideal(I.ambient_vars);
    if (I.is_zero()) return I;
    if (n == 1) return I;

    auto primes = minimal_primes(I);
    PolyMonomialIdeal acc;
    bool first = true;
    for (const VariablePrime& P : primes) {
        PolyMonomialIdeal Pn = minimalize(I.ambient_vars, variable_prime_power_gens(P, n));
        acc = first ? Pn : ideal_intersect(acc, Pn);
        first = false;
    }
    return acc;
}

/// Membership in the symbolic power without expanding generators:
/// b lies in I^(n) iff its exponent sum over every minimal cover is >= n.
inline bool symbolic_member_poly(const Vec& b, const std::vector<VariablePrime>& primes, int n) {
    for (const VariablePrime& P : primes) {
        Int s = 0;
        for (int i : P.support) s += b[i];
        if (s < n) return false;
    }
    return true;
}

}  // namespace symtopo
