#pragma once

// Seeded corpora of squarefree monomial ideals. The generator is written
// out explicitly (splitmix64 + rejection sampling) so corpora are
// byte-identical across platforms and standard library implementations.

#include <cstdint>
#include <vector>

#include "symtopo/errors.hpp"
#include "symtopo/monomial_ideal.hpp"

namespace symtopo {

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// uniform in [0, n), rejection sampling (no modulo bias)
    uint64_t bounded(uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }
};

/// `count` nonzero proper squarefree ideals in num_vars variables, each
/// generated by 1..4 supports drawn uniformly from the nonempty subsets.
inline std::vector<PolyMonomialIdeal> random_squarefree_corpus(int num_vars, int count,
                                                               uint64_t seed) {
    require(num_vars >= 1 && num_vars <= 6, errc::invalid_parameter,
            "corpus supports 1..6 variables");
    require(count >= 1, errc::invalid_parameter, "corpus count must be >= 1");

    SplitMix64 rng(seed);
    const uint64_t subsets = (1ull << num_vars) - 1;  // nonempty supports
    std::vector<PolyMonomialIdeal> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        int k = 1 + static_cast<int>(rng.bounded(4));
        std::vector<Vec> gens;
        for (int j = 0; j < k; ++j) {
            uint64_t mask = 1 + rng.bounded(subsets);
            Vec g(num_vars, 0);
            for (int v = 0; v < num_vars; ++v)
                if (mask & (1ull << v)) g[v] = 1;
            gens.push_back(std::move(g));
        }
        out.push_back(minimalize(num_vars, std::move(gens)));
    }
    return out;
}

}  // namespace symtopo
