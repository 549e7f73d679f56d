#pragma once
// Dense symmetric adjacency over 64-bit row words, shared by intersection
// graphs and the small abstract graphs used as search witnesses.  Carries
// the generic branch-and-bound maximum-clique solver and the graph6 /
// DIMACS serializers.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cubegraph {

struct BitGraph {
    int n = 0;
    int stride = 0;                // words per row
    std::vector<uint64_t> rows;    // n * stride, diagonal clear

    BitGraph() = default;
    explicit BitGraph(int n_)
        : n(n_), stride(n_ > 0 ? (n_ + 63) / 64 : 0),
          rows(static_cast<size_t>(n_) * stride, 0) {}

    uint64_t* row(int i) { return rows.data() + static_cast<size_t>(i) * stride; }
    const uint64_t* row(int i) const {
        return rows.data() + static_cast<size_t>(i) * stride;
    }
    bool edge(int i, int j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1;
    }
    void add_edge(int i, int j);

    long long edge_count() const;
    int degree(int i) const;
    BitGraph complement() const;  // diagonal stays clear

    friend bool operator==(const BitGraph&, const BitGraph&) = default;
};

BitGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);
BitGraph cycle_graph(int n);

// Exact maximum clique by branch and bound with a greedy colouring bound.
// Deterministic: returns the first optimum met in the fixed vertex order.
std::vector<int> max_clique(const BitGraph& g);
int clique_number_bb(const BitGraph& g);

// Largest set of pairwise non-adjacent vertices.
std::vector<int> max_independent_set(const BitGraph& g);

std::string to_graph6(const BitGraph& g);
BitGraph from_graph6(const std::string& text);
std::string to_dimacs(const BitGraph& g);
// Reads "p edge n m" / "e i j" lines, 1-indexed vertices.
BitGraph read_dimacs(std::istream& in);

}  // namespace cubegraph
