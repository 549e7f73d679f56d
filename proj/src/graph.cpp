#include "cubegraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cubegraph/errors.hpp"

namespace cubegraph {

namespace {

void fill_adjacency_row(const CubeFamily& fam, BitGraph& g, int i) {
    const Subcube& a = fam.members[i];
    uint64_t* r = g.row(i);
    for (int j = 0; j < g.n; ++j) {
        if (j == i) continue;
        if (intersects(a, fam.members[j])) r[j >> 6] |= uint64_t{1} << (j & 63);
    }
}

}  // namespace

IntersectionGraph build_graph(const CubeFamily& fam) {
    IntersectionGraph out{fam, BitGraph(fam.size())};
    BitGraph& g = out.adj;
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < g.n; ++i) fill_adjacency_row(fam, g, i);
    return out;
}

IntersectionGraph build_graph_serial(const CubeFamily& fam) {
    IntersectionGraph out{fam, BitGraph(fam.size())};
    for (int i = 0; i < out.adj.n; ++i) fill_adjacency_row(fam, out.adj, i);
    return out;
}

CliqueResult clique_number_points(const IntersectionGraph& g) {
    int d = g.width();
    if (d > point_sweep_max_width)
        throw resource_error("point sweep limited to width 24");
    if (g.n() == 0) return {};
    if (g.n() >= 65535)
        throw resource_error("point sweep limited to families below 65535 members");

    size_t npoints = size_t{1} << d;
    std::vector<uint16_t> count(npoints, 0);
    for (const Subcube& m : g.family.members) {
        // walk the member's points: value | (spread of a counter over free coords)
        std::vector<int> free_coords;
        for (int i = 0; i < d; ++i)
            if (!m.coord_fixed(i)) free_coords.push_back(i);
        uint64_t base = m.value.empty() ? 0 : m.value[0];
        size_t dim = free_coords.size();
        for (uint64_t c = 0; c < (uint64_t{1} << dim); ++c) {
            uint64_t x = base;
            for (size_t j = 0; j < dim; ++j)
                if ((c >> j) & 1) x |= uint64_t{1} << free_coords[j];
            ++count[x];
        }
    }
    size_t best_point = 0;
    uint16_t best = 0;
    for (size_t x = 0; x < npoints; ++x)
        if (count[x] > best) { best = count[x]; best_point = x; }

    CliqueResult res;
    res.omega = best;
    res.witness.point = Point(d);
    if (!res.witness.point.bits.empty()) res.witness.point.bits[0] = best_point;
    for (int i = 0; i < g.n(); ++i)
        if (g.family.members[i].contains(res.witness.point))
            res.witness.vertices.push_back(i);
    return res;
}

CliqueResult clique_number_branch_bound(const IntersectionGraph& g) {
    CliqueResult res;
    if (g.n() == 0) return res;
    std::vector<int> clique = max_clique(g.adj);
    res.omega = static_cast<int>(clique.size());
    res.witness.vertices = clique;
    // the Helly property guarantees a common point: intersect the members
    Subcube common = g.family.members[clique.front()];
    for (size_t i = 1; i < clique.size(); ++i) {
        auto next = intersection(common, g.family.members[clique[i]]);
        if (!next)
            throw std::logic_error("clique members failed to intersect");
        common = *next;
    }
    res.witness.point = Point(common.width);
    res.witness.point.bits = common.value;  // free coordinates filled with 0
    return res;
}

CliqueResult clique_number(const IntersectionGraph& g) {
    if (g.width() <= point_sweep_max_width && g.n() < 65535)
        return clique_number_points(g);
    return clique_number_branch_bound(g);
}

int independence_number(const IntersectionGraph& g) {
    return static_cast<int>(max_independent_set(g.adj).size());
}

namespace {

long long count_extensions(const BitGraph& g, const std::vector<uint64_t>& cand,
                           int minv, int remaining) {
    if (remaining == 0) return 1;
    long long total = 0;
    for (int w = minv >> 6; w < g.stride; ++w) {
        uint64_t bits = cand[w];
        if (w == (minv >> 6)) bits &= ~((uint64_t{1} << (minv & 63)) - 1);
        while (bits) {
            int v = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            if (remaining == 1) {
                ++total;
                continue;
            }
            std::vector<uint64_t> next(g.stride);
            const uint64_t* nb = g.row(v);
            for (int u = 0; u < g.stride; ++u) next[u] = cand[u] & nb[u];
            total += count_extensions(g, next, v + 1, remaining - 1);
        }
    }
    return total;
}

}  // namespace

long long count_cliques_serial(const IntersectionGraph& g, int size) {
    if (size < 1) throw std::invalid_argument("clique size must be at least 1");
    if (size == 1) return g.n();
    long long total = 0;
    std::vector<uint64_t> cand(g.adj.stride);
    for (int v = 0; v < g.n(); ++v) {
        const uint64_t* nb = g.adj.row(v);
        for (int w = 0; w < g.adj.stride; ++w) cand[w] = nb[w];
        total += count_extensions(g.adj, cand, v + 1, size - 1);
    }
    return total;
}

long long count_cliques(const IntersectionGraph& g, int size) {
    if (size < 1) throw std::invalid_argument("clique size must be at least 1");
    if (size == 1) return g.n();
    long long total = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total)
    for (int v = 0; v < g.n(); ++v) {
        std::vector<uint64_t> cand(g.adj.stride);
        const uint64_t* nb = g.adj.row(v);
        for (int w = 0; w < g.adj.stride; ++w) cand[w] = nb[w];
        total += count_extensions(g.adj, cand, v + 1, size - 1);
    }
    return total;
}

CubeFamily represent_graph(const BitGraph& g) {
    if (g.n < 1)
        throw std::invalid_argument("representation needs at least one vertex");
    CubeFamily fam(g.n);
    for (int i = 0; i < g.n; ++i) {
        Subcube m(g.n);
        m.set_coord(i, '1');
        for (int j = 0; j < g.n; ++j)
            if (j != i && !g.edge(i, j)) m.set_coord(j, '0');
        fam.add(std::move(m));
    }
    return fam;
}

CubeFamily grow_family(const CubeFamily& fam, long long target_n, int r) {
    if (r < 1) throw std::invalid_argument("grow_family needs r >= 1");
    if (fam.width < 1)
        throw std::invalid_argument("grow_family needs a family of width >= 1");
    // capacity r * 2^d, saturating at 2^63
    unsigned __int128 cap128 = (unsigned __int128)r << std::min(fam.width, 63);
    unsigned long long cap =
        cap128 > (1ull << 63) ? (1ull << 63) : (unsigned long long)cap128;
    if ((unsigned long long)target_n > cap)
        throw infeasible_error(
            "target exceeds r*2^d: some point would lie in r+1 members");
    if (target_n < fam.size())
        throw std::invalid_argument("grow_family cannot shrink a family");

    CubeFamily out = fam;
    while (out.size() < target_n) {
        int split_idx = -1;
        for (int i = 0; i < out.size(); ++i)
            if (out.members[i].dimension() > 0) { split_idx = i; break; }
        if (split_idx >= 0) {
            Subcube v = out.members[split_idx];
            int coord = 0;
            while (v.coord_fixed(coord)) ++coord;  // lowest free coordinate
            Subcube v0 = v, v1 = v;
            v0.set_coord(coord, '0');
            v1.set_coord(coord, '1');
            out.members[split_idx] = std::move(v0);
            out.members.push_back(std::move(v1));
        } else {
            // all singletons: copy the first member below the multiplicity
            // cap, or, failing that, the lowest-valued singleton of {0,1}^d
            // not yet at the cap (the pigeonhole guarantees one exists)
            int dup_idx = -1;
            for (int i = 0; i < out.size() && dup_idx < 0; ++i) {
                int mult = 0;
                for (int j = 0; j < out.size(); ++j)
                    if (out.members[j] == out.members[i]) ++mult;
                if (mult < r) dup_idx = i;
            }
            if (dup_idx >= 0) {
                out.members.push_back(out.members[dup_idx]);
            } else {
                Subcube fresh(out.width);
                for (uint64_t v = 0;; ++v) {
                    Subcube s(out.width);
                    for (int i = 0; i < out.width && i < 64; ++i)
                        s.set_coord(i, ((v >> i) & 1) ? '1' : '0');
                    for (int i = 64; i < out.width; ++i) s.set_coord(i, '0');
                    int mult = 0;
                    for (int j = 0; j < out.size(); ++j)
                        if (out.members[j] == s) ++mult;
                    if (mult < r) { fresh = std::move(s); break; }
                }
                out.members.push_back(std::move(fresh));
            }
        }
    }
    return out;
}

nlohmann::json analysis_report(const IntersectionGraph& g,
                               const std::vector<int>& clique_sizes) {
    nlohmann::json out;
    out["n"] = g.n();
    out["d"] = g.width();
    out["edges"] = g.edges();
    if (g.n() > 0) {
        CliqueResult cl = clique_number(g);
        out["omega"] = {{"value", cl.omega},
                        {"witness_point", cl.witness.point.to_string()},
                        {"witness_vertices", cl.witness.vertices}};
        out["independence_number"] = independence_number(g);
    } else {
        out["omega"] = {{"value", 0}};
        out["independence_number"] = 0;
    }
    if (!clique_sizes.empty()) {
        nlohmann::json counts = nlohmann::json::object();
        for (int s : clique_sizes)
            counts[std::to_string(s)] = count_cliques(g, s);
        out["clique_counts"] = counts;
    }
    return out;
}

}  // namespace cubegraph
