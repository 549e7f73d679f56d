#include "cubegraph/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cubegraph/errors.hpp"
#include "cubegraph/graph.hpp"

#include "json.hpp"

namespace cubegraph {

bool verify_witness(const CubeFamily& fam, int k, int l) {
    if (k < 2 || l < 2)
        throw std::invalid_argument("verify_witness needs k, l >= 2");
    if (fam.size() == 0) return true;
    IntersectionGraph g = build_graph(fam);
    if (clique_number(g).omega >= k) return false;
    return independence_number(g) < l;
}

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Apply a coordinate permutation bitwise: bit i of x lands on bit perm[i].
uint32_t apply_perm(uint32_t x, const std::vector<int>& perm) {
    uint32_t out = 0;
    while (x) {
        int i = std::countr_zero(x);
        x &= x - 1;
        out |= uint32_t{1} << perm[i];
    }
    return out;
}

// The candidate universe for one search: all 3^d subcubes in a fixed total
// order, their pairwise intersection matrix, per-candidate point masks, and
// the inverse index tables of the full hyperoctahedral group.
struct Universe {
    int d = 0;
    int m = 0;                       // 3^d
    int words = 0;                   // words per candidate bitset
    std::vector<uint32_t> fixed_of, value_of;
    std::vector<uint32_t> points_of;         // point bitmask, 2^d <= 32 bits
    std::vector<uint64_t> adj;               // m x words intersection matrix
    std::vector<std::vector<uint16_t>> ipm;  // ipm[g][t] = preimage of t
    int group_order = 0;

    const uint64_t* adj_row(int c) const { return adj.data() + (size_t)c * words; }

    Subcube subcube(int c) const {
        Subcube s(d);
        for (int i = 0; i < d; ++i) {
            if (!((fixed_of[c] >> i) & 1)) continue;
            s.set_coord(i, ((value_of[c] >> i) & 1) ? '1' : '0');
        }
        return s;
    }

    uint64_t order_signature() const {
        std::string blob;
        for (int c = 0; c < m; ++c) {
            blob += std::to_string(fixed_of[c]);
            blob += ',';
            blob += std::to_string(value_of[c]);
            blob += ';';
        }
        return fnv1a(blob);
    }
};

Universe build_universe(int d, uint64_t relabel_seed) {
    Universe u;
    u.d = d;
    u.m = 1;
    for (int i = 0; i < d; ++i) u.m *= 3;
    u.words = (u.m + 63) / 64;

    // optional relabeling: one fixed group element applied to the standard
    // enumeration, so the visit order changes but the searched set does not
    std::vector<int> rperm(d);
    std::iota(rperm.begin(), rperm.end(), 0);
    uint32_t rflip = 0;
    if (relabel_seed) {
        uint64_t s = relabel_seed;
        for (int i = d - 1; i > 0; --i)
            std::swap(rperm[i], rperm[splitmix64(s) % (i + 1)]);
        rflip = static_cast<uint32_t>(splitmix64(s)) & ((uint32_t{1} << d) - 1);
    }

    u.fixed_of.reserve(u.m);
    u.value_of.reserve(u.m);
    for (uint32_t f = 0; f < (uint32_t{1} << d); ++f) {
        // subsets of f in ascending value order
        uint32_t v = 0;
        while (true) {
            uint32_t ff = apply_perm(f, rperm);
            uint32_t vv = apply_perm(v ^ (rflip & f), rperm);
            u.fixed_of.push_back(ff);
            u.value_of.push_back(vv);
            if (v == f) break;
            v = (v - f) & f;  // next subset
        }
    }

    // point masks and pairwise intersections
    u.points_of.assign(u.m, 0);
    for (int c = 0; c < u.m; ++c) {
        uint32_t pts = 0;
        for (uint32_t x = 0; x < (uint32_t{1} << d); ++x)
            if (((x ^ u.value_of[c]) & u.fixed_of[c]) == 0) pts |= uint32_t{1} << x;
        u.points_of[c] = pts;
    }
    u.adj.assign((size_t)u.m * u.words, 0);
    for (int a = 0; a < u.m; ++a)
        for (int b = 0; b < u.m; ++b)
            if ((u.fixed_of[a] & u.fixed_of[b] & (u.value_of[a] ^ u.value_of[b])) == 0)
                u.adj[(size_t)a * u.words + (b >> 6)] |= uint64_t{1} << (b & 63);

    // full group: d! permutations x 2^d flips, as inverse index tables
    std::vector<int> base(d);
    std::iota(base.begin(), base.end(), 0);
    std::vector<int> index_of(size_t{1} << (2 * d), -1);
    for (int c = 0; c < u.m; ++c)
        index_of[(size_t(u.fixed_of[c]) << d) | u.value_of[c]] = c;
    std::vector<int> perm = base;
    do {
        for (uint32_t flip = 0; flip < (uint32_t{1} << d); ++flip) {
            std::vector<uint16_t> inv(u.m);
            for (int c = 0; c < u.m; ++c) {
                uint32_t f = apply_perm(u.fixed_of[c], perm);
                uint32_t v = apply_perm(u.value_of[c] ^ (flip & u.fixed_of[c]), perm);
                int image = index_of[(size_t(f) << d) | v];
                inv[image] = static_cast<uint16_t>(c);
            }
            u.ipm.push_back(std::move(inv));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    u.group_order = static_cast<int>(u.ipm.size());
    return u;
}

// One subtree result: the largest good family met and the node count.
struct BranchResult {
    int best_n = 0;
    std::vector<uint16_t> best_seq;
    unsigned long long nodes = 0;

    void take(int n, const std::vector<uint16_t>& seq) {
        if (n > best_n) {
            best_n = n;
            best_seq = seq;
        }
    }
    void merge(const BranchResult& other) {
        nodes += other.nodes;
        if (other.best_n > best_n) {
            best_n = other.best_n;
            best_seq = other.best_seq;
        }
    }
};

struct SearchAborted {};  // node budget exhausted

class Searcher {
public:
    Searcher(const Universe& u, int k, int l,
             std::atomic<unsigned long long>* budget_left)
        : u_(u), k_(k), l_(l), budget_left_(budget_left),
          mult_(u.m, 0), cover_(uint32_t{1} << u.d, 0) {}

    // Rebuilds the incremental state for a frontier family.
    void load(const std::vector<uint16_t>& seq) {
        std::fill(mult_.begin(), mult_.end(), 0);
        std::fill(cover_.begin(), cover_.end(), 0);
        seq_ = seq;
        for (uint16_t c : seq) {
            ++mult_[c];
            uint32_t pts = u_.points_of[c];
            while (pts) {
                int x = std::countr_zero(pts);
                pts &= pts - 1;
                ++cover_[x];
            }
        }
    }

    // Exhausts the subtree below the loaded family.
    BranchResult run() {
        result_ = BranchResult{};
        result_.take(static_cast<int>(seq_.size()), seq_);
        dfs(seq_.empty() ? 0 : seq_.back());
        return result_;
    }

    // Enumerates canonical good families of size exactly `depth` reachable
    // from the empty family, tracking the best shallow family on the way.
    BranchResult collect_roots(int depth, std::vector<std::vector<uint16_t>>& roots) {
        result_ = BranchResult{};
        result_.take(0, {});
        collect_(0, depth, roots);
        return result_;
    }

private:
    const Universe& u_;
    int k_, l_;
    std::atomic<unsigned long long>* budget_left_;
    std::vector<uint8_t> mult_;
    std::vector<uint8_t> cover_;
    std::vector<uint16_t> seq_;
    BranchResult result_;

    void charge_node() {
        ++result_.nodes;
        if (budget_left_ &&
            budget_left_->fetch_sub(1, std::memory_order_relaxed) == 0) {
            budget_left_->store(0, std::memory_order_relaxed);
            throw SearchAborted{};
        }
    }

    bool coverage_allows(int c) const {
        uint32_t pts = u_.points_of[c];
        while (pts) {
            int x = std::countr_zero(pts);
            pts &= pts - 1;
            if (cover_[x] >= k_ - 1) return false;
        }
        return true;
    }

    // Would appending c complete l pairwise disjoint members?  Checks for an
    // independent (l-1)-set among current members disjoint from c.
    bool creates_independent_l(int c) const {
        std::vector<uint16_t> strangers;
        const uint64_t* row = u_.adj_row(c);
        for (uint16_t s : seq_)
            if (!((row[s >> 6] >> (s & 63)) & 1)) strangers.push_back(s);
        if (static_cast<int>(strangers.size()) < l_ - 1) return false;
        return has_independent(strangers, l_ - 1);
    }

    // Any `need` pairwise disjoint members within the pool?
    bool has_independent(const std::vector<uint16_t>& pool, int need) const {
        if (need == 0) return true;
        for (size_t i = 0; i + need <= pool.size(); ++i) {
            const uint64_t* row = u_.adj_row(pool[i]);
            std::vector<uint16_t> next;
            for (size_t j = i + 1; j < pool.size(); ++j)
                if (!((row[pool[j] >> 6] >> (pool[j] & 63)) & 1))
                    next.push_back(pool[j]);
            if (need == 1 || has_independent(next, need - 1)) return true;
        }
        return false;
    }

    // Lex-min canonicity on the multiplicity vector: the sorted index
    // sequence is minimal in its orbit iff no group element maps it to a
    // vector whose first differing entry is larger.
    bool is_canonical() const {
        for (const auto& inv : u_.ipm) {
            for (int t = 0; t < u_.m; ++t) {
                uint8_t mapped = mult_[inv[t]];
                uint8_t own = mult_[t];
                if (mapped != own) {
                    if (mapped > own) return false;
                    break;
                }
            }
        }
        return true;
    }

    void push(int c) {
        seq_.push_back(static_cast<uint16_t>(c));
        ++mult_[c];
        uint32_t pts = u_.points_of[c];
        while (pts) {
            int x = std::countr_zero(pts);
            pts &= pts - 1;
            ++cover_[x];
        }
    }
    void pop(int c) {
        seq_.pop_back();
        --mult_[c];
        uint32_t pts = u_.points_of[c];
        while (pts) {
            int x = std::countr_zero(pts);
            pts &= pts - 1;
            --cover_[x];
        }
    }

    bool child_ok(int c) {
        if (mult_[c] >= k_ - 1) return false;  // k copies would be a K_k
        if (!coverage_allows(c)) return false;
        if (creates_independent_l(c)) return false;
        return true;
    }

    void dfs(int from) {
        charge_node();
        for (int c = from; c < u_.m; ++c) {
            if (!child_ok(c)) continue;
            push(c);
            if (is_canonical()) {
                result_.take(static_cast<int>(seq_.size()), seq_);
                dfs(c);
            }
            pop(c);
        }
    }

    void collect_(int from, int depth, std::vector<std::vector<uint16_t>>& roots) {
        charge_node();
        if (static_cast<int>(seq_.size()) == depth) {
            roots.push_back(seq_);
            return;
        }
        for (int c = from; c < u_.m; ++c) {
            if (!child_ok(c)) continue;
            push(c);
            if (is_canonical()) {
                result_.take(static_cast<int>(seq_.size()), seq_);
                collect_(c, depth, roots);
            }
            pop(c);
        }
    }
};

struct Checkpoint {
    uint64_t config_hash = 0;
    size_t roots_total = 0;
    // per completed root: best_n, best_seq, nodes
    std::map<size_t, BranchResult> completed;

    static Checkpoint load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot read checkpoint: " + path);
        nlohmann::json j;
        in >> j;
        if (j.value("format", "") != "cubegraph-ramsey-checkpoint" ||
            j.value("version", 0) != 1)
            throw std::invalid_argument("unrecognized checkpoint format");
        Checkpoint c;
        c.config_hash = std::stoull(j.at("config_hash").get<std::string>(), nullptr, 16);
        c.roots_total = j.at("roots_total").get<size_t>();
        for (const auto& e : j.at("completed")) {
            BranchResult r;
            r.best_n = e.at("best_n").get<int>();
            r.best_seq = e.at("best_seq").get<std::vector<uint16_t>>();
            r.nodes = e.at("nodes").get<unsigned long long>();
            c.completed[e.at("root").get<size_t>()] = std::move(r);
        }
        return c;
    }

    void save(const std::string& path, int d, int k, int l) const {
        nlohmann::json j;
        j["format"] = "cubegraph-ramsey-checkpoint";
        j["version"] = 1;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(config_hash));
        j["config_hash"] = buf;
        j["d"] = d;
        j["k"] = k;
        j["l"] = l;
        j["roots_total"] = roots_total;
        nlohmann::json done = nlohmann::json::array();
        for (const auto& [root, r] : completed)
            done.push_back({{"root", root},
                            {"best_n", r.best_n},
                            {"best_seq", r.best_seq},
                            {"nodes", r.nodes}});
        j["completed"] = std::move(done);
        std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) throw std::invalid_argument("cannot write checkpoint: " + tmp);
            out << j.dump(1) << "\n";
        }
        if (std::rename(tmp.c_str(), path.c_str()) != 0)
            throw std::invalid_argument("cannot move checkpoint into place: " + path);
    }
};

CubeFamily family_from_seq(const Universe& u, const std::vector<uint16_t>& seq) {
    CubeFamily fam(u.d);
    for (uint16_t c : seq) fam.add(u.subcube(c));
    return fam;
}

}  // namespace

RamseyResult ramsey_exact(int d, int k, int l, const SearchOptions& opts) {
    if (d < 1) throw std::invalid_argument("ramsey_exact needs d >= 1");
    if (k < 2 || l < 2) throw std::invalid_argument("ramsey_exact needs k, l >= 2");

    auto t0 = std::chrono::steady_clock::now();
    RamseyResult res;
    res.d = d;
    res.k = k;
    res.l = l;

    // beyond l = 2^d no independent l-set exists at all; only the K_k
    // constraint binds and the pigeonhole closed form applies.  The paper's
    // remark omits the +1 of the min-based definition; we report the least n
    // forcing a K_k.
    if (d < 62 && (long long)l > (1ll << d)) {
        long long max_free = ((long long)k - 1) << d;
        res.value = max_free + 1;
        res.note = "closed form for l > 2^d: every K_k-free multiset has at most "
                   "(k-1)*2^d members";
        if (max_free <= 4096) {
            CubeFamily fam(d);
            for (long long x = 0; x < (1ll << d); ++x) {
                Subcube s(d);
                for (int i = 0; i < d; ++i)
                    s.set_coord(i, ((x >> i) & 1) ? '1' : '0');
                for (int c = 0; c < k - 1; ++c) fam.add(s);
            }
            if (!verify_witness(fam, k, l))
                throw std::logic_error("closed-form witness failed verification");
            res.witness = std::move(fam);
        } else {
            res.note += "; witness elided (too large to materialize)";
        }
        res.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    }

    if (d > opts.max_d)
        throw resource_error("search capped at d = " + std::to_string(opts.max_d) +
                             "; raise max_d to proceed");
    if (d > 5)
        throw resource_error("search engine supports d <= 5");

    Universe u = build_universe(d, opts.relabel_seed);

    std::ostringstream cfg;
    cfg << "v1|d=" << d << "|k=" << k << "|l=" << l << "|root=" << opts.root_depth
        << "|m=" << u.m << "|order=" << std::hex << u.order_signature();
    uint64_t config_hash = fnv1a(cfg.str());

    std::atomic<unsigned long long> budget_left{0};
    std::atomic<unsigned long long>* budget =
        opts.node_budget ? &budget_left : nullptr;
    if (opts.node_budget) budget_left = opts.node_budget;

    // phase 1: shallow canonical families and the subtree roots
    std::vector<std::vector<uint16_t>> roots;
    Searcher shallow(u, k, l, budget);
    shallow.load({});
    BranchResult overall;
    try {
        overall = shallow.collect_roots(std::max(opts.root_depth, 1), roots);
    } catch (const SearchAborted&) {
        throw resource_error("node budget exhausted before the root frontier");
    }

    Checkpoint ckpt;
    ckpt.config_hash = config_hash;
    ckpt.roots_total = roots.size();
    if (!opts.checkpoint_path.empty()) {
        std::ifstream probe(opts.checkpoint_path);
        if (probe.good()) {
            probe.close();
            Checkpoint loaded = Checkpoint::load(opts.checkpoint_path);
            if (loaded.config_hash != config_hash)
                throw std::invalid_argument(
                    "checkpoint does not match this search configuration");
            if (loaded.roots_total != roots.size())
                throw std::invalid_argument("checkpoint root frontier mismatch");
            ckpt = std::move(loaded);
        }
    }

    std::atomic<bool> aborted{false};
    std::string io_error;
#ifdef _OPENMP
    int prev_threads = omp_get_max_threads();
    if (opts.workers > 0) omp_set_num_threads(opts.workers);
#endif
#pragma omp parallel
    {
        Searcher worker(u, k, l, budget);
#pragma omp for schedule(dynamic)
        for (size_t i = 0; i < roots.size(); ++i) {
            bool skip = aborted.load(std::memory_order_relaxed);
            if (!skip) {
#pragma omp critical(ckpt)
                skip = ckpt.completed.count(i) != 0 || !io_error.empty();
            }
            if (skip) continue;
            worker.load(roots[i]);
            try {
                BranchResult r = worker.run();
#pragma omp critical(ckpt)
                {
                    ckpt.completed[i] = std::move(r);
                    if (!opts.checkpoint_path.empty())
                        ckpt.save(opts.checkpoint_path, d, k, l);
                }
            } catch (const SearchAborted&) {
                aborted.store(true, std::memory_order_relaxed);
            } catch (const std::exception& e) {
#pragma omp critical(ckpt)
                io_error = e.what();
            }
        }
    }
#ifdef _OPENMP
    if (opts.workers > 0) omp_set_num_threads(prev_threads);
#endif
    if (!io_error.empty()) throw std::invalid_argument(io_error);

    if (aborted.load() || ckpt.completed.size() != roots.size()) {
        if (!opts.checkpoint_path.empty()) ckpt.save(opts.checkpoint_path, d, k, l);
        throw resource_error(
            "node budget exhausted; progress saved to checkpoint");
    }

    for (const auto& [root, r] : ckpt.completed) overall.merge(r);

    res.value = overall.best_n + 1;
    res.witness = family_from_seq(u, overall.best_seq);
    res.nodes_explored = overall.nodes;
    if (!verify_witness(res.witness, k, l))
        throw std::logic_error("search produced an invalid witness");
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

long long ramsey_exact_brute(int d, int k, int l) {
    if (d < 1 || d > 3)
        throw std::invalid_argument("brute-force reference supports d <= 3");
    if (k < 2 || l < 2) throw std::invalid_argument("needs k, l >= 2");
    Universe u = build_universe(d, 0);

    // plain nondecreasing-sequence DFS with goodness pruning only
    std::vector<uint8_t> mult(u.m, 0);
    std::vector<uint8_t> cover(uint32_t{1} << d, 0);
    std::vector<uint16_t> seq;
    int best = 0;

    auto coverage_allows = [&](int c) {
        uint32_t pts = u.points_of[c];
        while (pts) {
            int x = std::countr_zero(pts);
            pts &= pts - 1;
            if (cover[x] >= k - 1) return false;
        }
        return true;
    };
    std::function<bool(std::vector<uint16_t>&, size_t, int)> indep =
        [&](std::vector<uint16_t>& pool, size_t from, int need) -> bool {
        if (need == 0) return true;
        for (size_t i = from; i + need <= pool.size(); ++i) {
            const uint64_t* row = u.adj_row(pool[i]);
            std::vector<uint16_t> next;
            for (size_t j = i + 1; j < pool.size(); ++j)
                if (!((row[pool[j] >> 6] >> (pool[j] & 63)) & 1))
                    next.push_back(pool[j]);
            if (need == 1 || indep(next, 0, need - 1)) return true;
        }
        return false;
    };
    std::function<void(int)> dfs = [&](int from) {
        best = std::max(best, static_cast<int>(seq.size()));
        for (int c = from; c < u.m; ++c) {
            if (mult[c] >= k - 1 || !coverage_allows(c)) continue;
            std::vector<uint16_t> strangers;
            const uint64_t* row = u.adj_row(c);
            for (uint16_t s : seq)
                if (!((row[s >> 6] >> (s & 63)) & 1)) strangers.push_back(s);
            if (static_cast<int>(strangers.size()) >= l - 1 &&
                indep(strangers, 0, l - 1))
                continue;
            seq.push_back(static_cast<uint16_t>(c));
            ++mult[c];
            uint32_t pts = u.points_of[c];
            while (pts) { int x = std::countr_zero(pts); pts &= pts - 1; ++cover[x]; }
            dfs(c);
            pts = u.points_of[c];
            while (pts) { int x = std::countr_zero(pts); pts &= pts - 1; --cover[x]; }
            --mult[c];
            seq.pop_back();
        }
    };
    dfs(0);
    return best + 1;
}

std::pair<long long, CubeFamily> lower_bound_blowup(int d, int k, int l,
                                                    const BitGraph& witness_graph,
                                                    int clique_bound) {
    if (clique_bound < 2 || l < 2 || k < 2)
        throw std::invalid_argument("blow-up needs k, l, clique_bound >= 2");
    if (witness_graph.n != d)
        throw std::invalid_argument("witness graph must have exactly d vertices");
    if (clique_number_bb(witness_graph) >= clique_bound)
        throw std::invalid_argument("invalid witness: contains a K_x");
    if (static_cast<int>(max_independent_set(witness_graph).size()) >= l)
        throw std::invalid_argument("invalid witness: contains an independent l-set");

    long long copies = k / clique_bound;
    CubeFamily fam(d);
    if (copies > 0) {
        CubeFamily rep = represent_graph(witness_graph);
        for (const Subcube& s : rep.members)
            for (long long c = 0; c < copies; ++c) fam.add(s);
        if (!verify_witness(fam, k, l))
            throw std::logic_error("blow-up family failed verification");
    }
    return {static_cast<long long>(d) * copies, fam};
}

double upper_bound_eval(int d, int k, int l) {
    if (d < 1) throw std::invalid_argument("upper_bound_eval needs d >= 1");
    if (k < 2 || l < 2) throw std::invalid_argument("upper_bound_eval needs k, l >= 2");
    if (d == 2) return 2.0 * k * (l - 1);
    if (l == 3 && d >= 3)
        return 2.0 * d * k / (std::log2((double)d) - std::log2(std::log2((double)d)));
    return 2.0 * k * std::pow((double)d, l - 2);
}

double upper_bound_eval_alpha(int d, int k, double alpha) {
    if (d < 1 || k < 2) throw std::invalid_argument("needs d >= 1, k >= 2");
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    return (d / alpha + std::exp2(alpha)) * k;
}

BitGraph catalog_witness(int x, int l) {
    BitGraph g;
    if (x == 3 && l == 3) {
        g = cycle_graph(5);
    } else if (x == 4 && l == 3) {
        // 8 vertices, circulant with connection set {2,3}: found once by
        // find_ramsey_graph(8,4,3) and frozen here
        g = BitGraph(8);
        for (int i = 0; i < 8; ++i) {
            g.add_edge(i, (i + 2) % 8);
            g.add_edge(i, (i + 3) % 8);
        }
    } else {
        throw std::invalid_argument("no catalog witness for these parameters");
    }
    if (clique_number_bb(g) >= x ||
        static_cast<int>(max_independent_set(g).size()) >= l)
        throw std::logic_error("catalog witness failed its re-verification");
    return g;
}

BitGraph find_ramsey_graph(int n, int x, int l) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("witness search supports 1 <= n <= 16");
    // extend vertex by vertex; prefix clique/independence pruning keeps the
    // tree small for the sizes this is used at
    std::vector<uint32_t> adj(n, 0);
    auto omega_alpha_ok = [&](int verts) {
        BitGraph g(verts);
        for (int i = 0; i < verts; ++i)
            for (int j = i + 1; j < verts; ++j)
                if ((adj[i] >> j) & 1) g.add_edge(i, j);
        if (clique_number_bb(g) >= x) return false;
        return static_cast<int>(max_independent_set(g).size()) < l;
    };
    std::function<bool(int)> extend = [&](int v) -> bool {
        if (v == n) return true;
        for (uint32_t mask = 0; mask < (uint32_t{1} << v); ++mask) {
            for (int i = 0; i < v; ++i) {
                if ((mask >> i) & 1) adj[i] |= uint32_t{1} << v; else adj[i] &= ~(uint32_t{1} << v);
            }
            adj[v] = mask;
            if (omega_alpha_ok(v + 1) && extend(v + 1)) return true;
        }
        for (int i = 0; i < v; ++i) adj[i] &= ~(uint32_t{1} << v);
        adj[v] = 0;
        return false;
    };
    if (!extend(0)) return BitGraph(0);
    BitGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((adj[i] >> j) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace cubegraph
