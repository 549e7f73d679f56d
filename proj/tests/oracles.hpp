#pragma once
// Test-only brute-force oracles, independent of the library's fast paths:
// subcubes as explicit point sets, cliques and independent sets by subset
// enumeration.  Everything here is exponential and meant for tiny inputs.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cubegraph/bitgraph.hpp"
#include "cubegraph/subcube.hpp"

namespace oracle {

// Explicit point set of a subcube, widths up to 20.
inline std::set<uint64_t> point_set(const cubegraph::Subcube& c) {
    std::set<uint64_t> out;
    std::vector<int> free_coords;
    for (int i = 0; i < c.width; ++i)
        if (!c.coord_fixed(i)) free_coords.push_back(i);
    for (uint64_t m = 0; m < (uint64_t{1} << free_coords.size()); ++m) {
        uint64_t x = c.value[0];
        for (size_t j = 0; j < free_coords.size(); ++j)
            if ((m >> j) & 1) x |= uint64_t{1} << free_coords[j];
        out.insert(x);
    }
    return out;
}

inline bool intersects(const cubegraph::Subcube& a, const cubegraph::Subcube& b) {
    auto pa = point_set(a);
    for (uint64_t x : point_set(b))
        if (pa.count(x)) return true;
    return false;
}

inline int min_hamming(const cubegraph::Subcube& a, const cubegraph::Subcube& b) {
    int best = a.width + 1;
    for (uint64_t x : point_set(a))
        for (uint64_t y : point_set(b))
            best = std::min(best, std::popcount(x ^ y));
    return best;
}

// Maximum clique size by enumerating all vertex subsets (n <= 20).
inline int clique_number(const cubegraph::BitGraph& g) {
    int best = 0;
    for (uint32_t s = 1; s < (uint32_t{1} << g.n); ++s) {
        std::vector<int> verts;
        for (int i = 0; i < g.n; ++i)
            if ((s >> i) & 1) verts.push_back(i);
        if (static_cast<int>(verts.size()) <= best) continue;
        bool ok = true;
        for (size_t i = 0; i < verts.size() && ok; ++i)
            for (size_t j = i + 1; j < verts.size() && ok; ++j)
                ok = g.edge(verts[i], verts[j]);
        if (ok) best = static_cast<int>(verts.size());
    }
    return best;
}

inline int independence_number(const cubegraph::BitGraph& g) {
    return clique_number(g.complement());
}

inline long long count_cliques(const cubegraph::BitGraph& g, int size) {
    long long total = 0;
    std::vector<int> verts;
    for (uint32_t s = 0; s < (uint32_t{1} << g.n); ++s) {
        if (std::popcount(s) != size) continue;
        verts.clear();
        for (int i = 0; i < g.n; ++i)
            if ((s >> i) & 1) verts.push_back(i);
        bool ok = true;
        for (size_t i = 0; i < verts.size() && ok; ++i)
            for (size_t j = i + 1; j < verts.size() && ok; ++j)
                ok = g.edge(verts[i], verts[j]);
        if (ok) ++total;
    }
    return total;
}

inline cubegraph::Subcube random_subcube(std::mt19937_64& rng, int d,
                                         double p_star = 0.4) {
    cubegraph::Subcube c(d);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < d; ++i) {
        double u = unit(rng);
        if (u < p_star) continue;
        c.set_coord(i, u < p_star + (1 - p_star) / 2 ? '0' : '1');
    }
    return c;
}

inline cubegraph::CubeFamily random_family(std::mt19937_64& rng, int d, int n,
                                           double p_star = 0.4) {
    cubegraph::CubeFamily fam(d);
    for (int i = 0; i < n; ++i) fam.add(random_subcube(rng, d, p_star));
    return fam;
}

}  // namespace oracle
