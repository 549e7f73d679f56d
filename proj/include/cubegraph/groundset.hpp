#pragma once
// Intersection families over an arbitrary finite ground set: the MOLS-based
// Turan-extremal construction, pair covers and pair packings with their dual
// families, and the edge-preserving split step.

#include <vector>

#include "cubegraph/bitgraph.hpp"

#include "json.hpp"

namespace cubegraph {

struct SetFamily {
    int ground_size = 0;                    // ground set {1..m}
    std::vector<std::vector<int>> members;  // sorted 1-based elements

    int size() const { return static_cast<int>(members.size()); }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

BitGraph intersection_graph(const SetFamily& fam);
nlohmann::json to_json(const SetFamily& fam);
SetFamily set_family_from_json(const nlohmann::json& j);

// Rows, columns, and the symbol classes of r-2 cyclic mutually orthogonal
// Latin squares of prime order q (L_k(i,j) = k*i + j mod q): n = rq sets on
// the q x q grid whose intersection graph is T_r(rq).
SetFamily mols_family(int q, int r);

// Blocks of an r-set system over [n] together with the dual family
// A_i = {a : i in S_a} over ground [m], m the block count.
struct BlockDesign {
    int n = 0;
    int r = 0;
    std::vector<std::vector<int>> blocks;  // sorted r-subsets of {1..n}
    SetFamily dual;
};

// Every pair of [n] in at least one block: exact Steiner triple systems from
// the built-in catalog when r = 3 and n is 3, 7, 9, 13 or 15, otherwise the
// lexicographic greedy cover.  The dual's intersection graph is complete.
BlockDesign pair_cover_family(int n, int r);

// Every pair of [n] in at most one block (maximal lexicographic greedy
// packing): dual members meet pairwise in at most one element and the dual
// graph has exactly binom(r,2)*m edges.
BlockDesign pair_packing_family(int n, int r);

// Replaces member `index` by the two classes of a 2-partition: elements in
// `part` and the rest (both must be nonempty).  Never decreases the edge
// count of the intersection graph.
SetFamily split_member(const SetFamily& fam, int index,
                       const std::vector<int>& part);

}  // namespace cubegraph
