#pragma once
// Intersection graphs of cube families: construction (OpenMP kernel with a
// serial reference), clique and independence machinery with Helly witnesses,
// clique counting, the d-vertex representation of arbitrary graphs, and the
// family-growing step used by the extremal constructions.

#include <string>
#include <vector>

#include "cubegraph/bitgraph.hpp"
#include "cubegraph/subcube.hpp"

#include "json.hpp"

namespace cubegraph {

struct IntersectionGraph {
    CubeFamily family;
    BitGraph adj;                // adj[i][j] = intersects(member i, member j)

    int n() const { return adj.n; }
    int width() const { return family.width; }
    long long edges() const { return adj.edge_count(); }
};

IntersectionGraph build_graph(const CubeFamily& fam);
// Reference kernel kept for testing the parallel build.
IntersectionGraph build_graph_serial(const CubeFamily& fam);

struct CliqueWitness {
    std::vector<int> vertices;  // ascending member indices
    Point point;                // common point of all listed members
};

struct CliqueResult {
    int omega = 0;
    CliqueWitness witness;
};

// Maximum clique with a Helly witness point.  Routed through the point
// coverage sweep for width <= point_sweep_max_width, and through the generic
// branch-and-bound solver (the authoritative route) beyond it.
CliqueResult clique_number(const IntersectionGraph& g);

// The two routes, individually exposed: the sweep counts point multiplicity
// across {0,1}^d (exact by the Helly property), the other runs max_clique on
// the adjacency matrix.
CliqueResult clique_number_points(const IntersectionGraph& g);
CliqueResult clique_number_branch_bound(const IntersectionGraph& g);

inline constexpr int point_sweep_max_width = 24;

int independence_number(const IntersectionGraph& g);

// Number of vertex subsets of the given size that are pairwise adjacent.
long long count_cliques(const IntersectionGraph& g, int size);
long long count_cliques_serial(const IntersectionGraph& g, int size);

// Embeds any simple graph on d vertices in I(d,d): member i fixes
// coordinate i to 1, non-neighbour coordinates to 0, and frees neighbours.
// build_graph of the result reproduces g exactly.
CubeFamily represent_graph(const BitGraph& g);

// Grows a K_{r+1}-free family to target_n without losing edges: repeatedly
// split the lowest-index non-singleton member on its lowest free coordinate
// (the half replaces it in place, the other half is appended), or, once all
// members are singletons, append a copy of the lowest-index singleton that
// occurs fewer than r times.
CubeFamily grow_family(const CubeFamily& fam, long long target_n, int r);

// Structured report: n, d, edges, omega with witness, independence number,
// clique counts for the requested sizes.
nlohmann::json analysis_report(const IntersectionGraph& g,
                               const std::vector<int>& clique_sizes = {});

}  // namespace cubegraph
