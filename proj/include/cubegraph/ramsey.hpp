#pragma once
// Exact R_d(k,l) by isomorph-free exhaustive search over multisets of C_d
// under the hyperoctahedral group (coordinate permutations composed with
// per-coordinate 0/1 flips), plus witness verification, the blow-up lower
// bound, and the closed-form upper-bound evaluators.

#include <cstdint>
#include <string>
#include <utility>

#include "cubegraph/bitgraph.hpp"
#include "cubegraph/subcube.hpp"

namespace cubegraph {

// True iff the family has no K_k (clique number < k) and no l pairwise
// disjoint members (independence number < l).
bool verify_witness(const CubeFamily& fam, int k, int l);

struct RamseyResult {
    int d = 0, k = 0, l = 0;
    long long value = 0;         // R_d(k,l)
    CubeFamily witness;          // a good family of size value-1 (may be
                                 // elided in the closed-form regime; see note)
    unsigned long long nodes_explored = 0;
    double elapsed_seconds = 0;
    std::string note;
};

struct SearchOptions {
    int max_d = 4;               // configured cap; the engine tops out at 5
    int workers = 0;             // 0 = runtime default; result independent of it
    std::string checkpoint_path; // empty = no checkpointing
    unsigned long long node_budget = 0;  // 0 = unlimited; exceeding it saves a
                                         // checkpoint and raises resource_error
    uint64_t relabel_seed = 0;   // nonzero: search under a seeded relabeling of
                                 // the candidate universe (must not change the
                                 // result; exposed for the symmetry sanity test)
    int root_depth = 3;          // family size at which subtrees become
                                 // parallel/checkpointable units
};

// Minimum n such that every multiset of n subcubes of {0,1}^d contains a K_k
// or l pairwise disjoint members.  Exhaustive canonical-augmentation search
// with isomorph rejection; for l > 2^d returns (k-1)*2^d + 1 directly.
RamseyResult ramsey_exact(int d, int k, int l, const SearchOptions& opts = {});

// Reference search without symmetry reduction; small inputs only.
long long ramsey_exact_brute(int d, int k, int l);

// Blow-up lower bound: floor(k/x) copies of each subcube representing a
// d-vertex graph with no K_x and no independent l-set certify
// R_d(k,l) > d*floor(k/x).  Returns the bound and the verified family.
std::pair<long long, CubeFamily> lower_bound_blowup(int d, int k, int l,
                                                    const BitGraph& witness_graph,
                                                    int clique_bound);

// Closed-form upper bounds: 2k(l-1) for d = 2; 2dk/(log2 d - log2 log2 d)
// for l = 3, d >= 3; otherwise 2 d^(l-2) k.
double upper_bound_eval(int d, int k, int l);

// The pre-substitution l = 3 bound (d/alpha + 2^alpha) * k for exploring the
// free parameter the closed form fixes at log2 d - log2 log2 d.
double upper_bound_eval_alpha(int d, int k, double alpha);

// Verified witness graphs for the blow-up bound: (x=3,l=3) is the 5-cycle,
// (x=4,l=3) an 8-vertex graph.  Entries are re-checked on every access.
BitGraph catalog_witness(int x, int l);

// Lexicographically first n-vertex graph with no K_x and no independent
// l-set, by exhaustive extension; empty optional-like n=0 graph if none.
BitGraph find_ramsey_graph(int n, int x, int l);

}  // namespace cubegraph
