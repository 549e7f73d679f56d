#include "cubegraph/bitgraph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace cubegraph {

void BitGraph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("self loops are not representable");
    row(i)[j >> 6] |= uint64_t{1} << (j & 63);
    row(j)[i >> 6] |= uint64_t{1} << (i & 63);
}

long long BitGraph::edge_count() const {
    long long twice = 0;
    for (uint64_t w : rows) twice += std::popcount(w);
    return twice / 2;
}

int BitGraph::degree(int i) const {
    int d = 0;
    const uint64_t* r = row(i);
    for (int w = 0; w < stride; ++w) d += std::popcount(r[w]);
    return d;
}

BitGraph BitGraph::complement() const {
    BitGraph out(n);
    for (int i = 0; i < n; ++i) {
        const uint64_t* src = row(i);
        uint64_t* dst = out.row(i);
        for (int w = 0; w < stride; ++w) dst[w] = ~src[w];
        // clear diagonal and tail bits
        dst[i >> 6] &= ~(uint64_t{1} << (i & 63));
        if (n % 64) dst[stride - 1] &= (uint64_t{1} << (n % 64)) - 1;
    }
    return out;
}

BitGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    BitGraph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
}

BitGraph cycle_graph(int n) {
    BitGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

namespace {

// Word-set helpers for candidate masks.
inline bool set_empty(const uint64_t* s, int words) {
    for (int w = 0; w < words; ++w)
        if (s[w]) return false;
    return true;
}

inline int set_size(const uint64_t* s, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(s[w]);
    return c;
}

struct CliqueSearch {
    const BitGraph& g;
    int words;
    std::vector<int> best;
    std::vector<int> cur;
    // scratch: one candidate-set layer per depth
    std::vector<std::vector<uint64_t>> layers;

    explicit CliqueSearch(const BitGraph& graph)
        : g(graph), words(graph.stride) {}

    // Greedy colouring of the candidate set; emits vertices in colour order
    // with their colour numbers (1-based) as the pruning bound.
    void colour_order(const uint64_t* cand, std::vector<int>& order,
                      std::vector<int>& bound) {
        order.clear();
        bound.clear();
        std::vector<uint64_t> uncol(cand, cand + words);
        std::vector<uint64_t> cls(words);
        int colour = 0;
        while (!set_empty(uncol.data(), words)) {
            ++colour;
            std::copy(uncol.begin(), uncol.end(), cls.begin());
            while (!set_empty(cls.data(), words)) {
                int v = -1;
                for (int w = 0; w < words; ++w)
                    if (cls[w]) { v = w * 64 + std::countr_zero(cls[w]); break; }
                order.push_back(v);
                bound.push_back(colour);
                uncol[v >> 6] &= ~(uint64_t{1} << (v & 63));
                cls[v >> 6] &= ~(uint64_t{1} << (v & 63));
                const uint64_t* nb = g.row(v);
                for (int w = 0; w < words; ++w) cls[w] &= ~nb[w];
            }
        }
    }

    void expand(int depth, const uint64_t* cand) {
        std::vector<int> order, bound;
        colour_order(cand, order, bound);
        if (depth + 1 >= static_cast<int>(layers.size()))
            layers.emplace_back(words);
        std::vector<uint64_t> local(cand, cand + words);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (static_cast<int>(cur.size()) + bound[idx] <= static_cast<int>(best.size()))
                return;
            int v = order[idx];
            cur.push_back(v);
            std::vector<uint64_t>& next = layers[depth + 1];
            const uint64_t* nb = g.row(v);
            bool any = false;
            for (int w = 0; w < words; ++w) {
                next[w] = local[w] & nb[w];
                any = any || next[w];
            }
            if (!any) {
                if (cur.size() > best.size()) best = cur;
            } else {
                expand(depth + 1, next.data());
            }
            cur.pop_back();
            local[v >> 6] &= ~(uint64_t{1} << (v & 63));
        }
    }
};

}  // namespace

std::vector<int> max_clique(const BitGraph& g) {
    if (g.n == 0) return {};
    CliqueSearch search(g);
    std::vector<uint64_t> all(g.stride, 0);
    for (int i = 0; i < g.n; ++i) all[i >> 6] |= uint64_t{1} << (i & 63);
    search.layers.emplace_back(g.stride);
    search.expand(0, all.data());
    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

int clique_number_bb(const BitGraph& g) {
    return static_cast<int>(max_clique(g).size());
}

std::vector<int> max_independent_set(const BitGraph& g) {
    return max_clique(g.complement());
}

std::string to_graph6(const BitGraph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(63 + g.n));
    } else if (g.n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((g.n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((g.n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (g.n & 63)));
    } else {
        throw std::invalid_argument("graph too large for graph6 export");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

BitGraph from_graph6(const std::string& text) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size())
            throw std::invalid_argument("truncated graph6 string");
        int c = static_cast<unsigned char>(text[pos++]) - 63;
        if (c < 0 || c > 63) throw std::invalid_argument("bad graph6 byte");
        return c;
    };
    int n;
    int c0 = next();
    if (c0 == 63) {
        int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = c0;
    }
    BitGraph g(n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    }
    return g;
}

std::string to_dimacs(const BitGraph& g) {
    std::ostringstream out;
    out << "p edge " << g.n << " " << g.edge_count() << "\n";
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.edge(i, j)) out << "e " << i + 1 << " " << j + 1 << "\n";
    return out.str();
}

BitGraph read_dimacs(std::istream& in) {
    std::string line;
    BitGraph g;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string fmt;
            int n = 0;
            long long m = 0;
            ls >> fmt >> n >> m;
            if (n < 0) throw std::invalid_argument("bad DIMACS vertex count");
            g = BitGraph(n);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header)
                throw std::invalid_argument("DIMACS edge before header");
            int i = 0, j = 0;
            ls >> i >> j;
            if (i < 1 || j < 1 || i > g.n || j > g.n)
                throw std::invalid_argument("DIMACS edge endpoint out of range");
            if (i != j) g.add_edge(i - 1, j - 1);
        }
    }
    if (!have_header) throw std::invalid_argument("missing DIMACS header");
    return g;
}

}  // namespace cubegraph
