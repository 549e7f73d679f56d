#pragma once
// Extremal constructions for K_{r+1}-free intersection graphs: Turan numbers,
// the partition-based small-n families, the full-codimension families
// matching the absolute bound, general mixed-class families, and the exact
// partite-profile optimizer.

#include <cstdint>
#include <vector>

#include "cubegraph/subcube.hpp"

namespace cubegraph {

// Edge count of the balanced complete r-partite graph on n vertices.
unsigned long long turan_number(unsigned long long n, int r);

// k classes on pairwise disjoint coordinate blocks of size t (the smallest t
// with k*2^t >= n), balanced to n members; the graph is T_k(n).
CubeFamily partite_family(long long n, int d, int k);

// r classes with fixed sets [d] minus disjoint floor(d/r)-blocks: covers
// every point exactly r times, binom(r,2)*2^d edges, all intersections are
// single points.  n = r * 2^(d - floor(d/r)).
CubeFamily full_codim_family(int d, int r);

// Large-n counterpart: base classes with fixed sets [d]\P_i of codimension
// d-t (t the largest value with k*2^(d-t) <= n, block sizes rebalanced when
// t*k would exceed d), giving binom(k,2)*2^d edges; grown to n if needed.
CubeFamily large_n_family(long long n, int d, int k);

// One class per fixed set R_i (0-based coordinates); cross-class edge counts
// are exactly 2^|R_i u R_j|.
CubeFamily mixed_partite_family(int d,
                                const std::vector<std::vector<int>>& fixed_sets);

struct PartiteProfile {
    int r = 0;
    std::vector<int> part_dims;                  // d_1 >= ... >= d_r
    std::vector<unsigned long long> part_sizes;  // n_i <= 2^d_i
    unsigned long long objective = 0;            // sum binom(n_i, 2)
    unsigned long long edges = 0;                // binom(n,2) - objective
};

struct ProfileSearchStats {
    unsigned long long compositions = 0;  // dimension vectors enumerated
    unsigned long long feasible = 0;
};

// Certified optimum of: minimize sum binom(n_i,2) over d_1 >= ... >= d_r >= 0
// with sum d_i <= d, sum n_i = n, n_i <= 2^d_i; sizes by capacity-clipped
// water filling.  Ties break to the lexicographically smallest dimension
// vector.  Exhaustive, so exact for d <= 64, r <= 8.
PartiteProfile optimal_partite_profile(unsigned long long n, int d, int r,
                                       ProfileSearchStats* stats = nullptr);

// Realizes a profile on disjoint low-coordinate blocks; the intersection
// graph is complete multipartite with the profile's part sizes.
CubeFamily realize_profile(const PartiteProfile& profile, int d);

}  // namespace cubegraph
