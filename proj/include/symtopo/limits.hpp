#pragma once

namespace symtopo {

/// Resource caps shared across the library. Every cap raises an explicit
/// error when exceeded; results are never truncated silently.
struct Limits {
    int dim_cap = 4;                      // dual/face enumeration dimension cap
    int tensor_dim_cap = 8;               // total dimension of product cones
    long long point_cap = 200000;         // lattice points per enumeration
    long long multiset_cap = 2000000;     // C(#gens+n-1, n) bound per membership query
    int max_degree = 8;                   // default degree window for scans
    int jobs = 1;                         // worker threads for scans
};

}  // namespace symtopo
