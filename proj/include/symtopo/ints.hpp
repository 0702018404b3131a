#pragma once

// Exact integer vectors. All arithmetic is overflow-checked so a result is
// either exact or an ArithmeticOverflow error; nothing wraps silently.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "symtopo/errors.hpp"

namespace symtopo {

using Int = long long;
using Vec = std::vector<Int>;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::arithmetic_overflow, "add");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) fail(errc::arithmetic_overflow, "sub");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::arithmetic_overflow, "mul");
    return r;
}

/// Floor division for possibly negative numerator, positive denominator.
inline Int floor_div(Int a, Int b) {
    Int q = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

inline Int dot(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), errc::mixed_arity, "dot: length mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), errc::mixed_arity, "vec_add: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), errc::mixed_arity, "vec_sub: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

inline Vec vec_scale(Int c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
    return r;
}

inline bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

inline bool all_nonnegative(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](Int x) { return x >= 0; });
}

/// Componentwise a <= b (exponent divisibility: x^a | x^b).
inline bool divides(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Vec componentwise_max(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), errc::mixed_arity, "max: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Int total_degree(const Vec& a) {
    Int s = 0;
    for (Int x : a) s = checked_add(s, x);
    return s;
}

/// Divide by the gcd of the entries. The zero vector is returned unchanged.
inline Vec primitive(Vec a) {
    Int g = 0;
    for (Int x : a) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (Int& x : a) x /= g;
    return a;
}

inline bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// degree-then-lex order, degree taken against an explicit weight
inline bool deg_lex_less(const Vec& a, const Vec& b, const Vec& weight) {
    Int da = dot(a, weight), db = dot(b, weight);
    if (da != db) return da < db;
    return lex_less(a, b);
}

/// degree-then-lex with total degree (all-ones weight)
inline bool tdeg_lex_less(const Vec& a, const Vec& b) {
    Int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return lex_less(a, b);
}

struct VecHash {
    size_t operator()(const Vec& v) const {
        uint64_t h = 1469598103934665603ull;
        for (Int x : v) {
            h ^= static_cast<uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

inline std::string format_tuple(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

}  // namespace symtopo
