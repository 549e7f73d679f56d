#include "cubegraph/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubegraph/errors.hpp"
#include "cubegraph/graph.hpp"

namespace cubegraph {

namespace {

unsigned long long binom2(unsigned long long n) {
    return n / 2 * (n - 1) + (n % 2 ? n / 2 : 0);  // n*(n-1)/2 without overflow
}

// a * 2^e, saturating at 2^63 (plenty for every feasibility check here)
unsigned long long sat_shl(unsigned long long a, int e) {
    if (a == 0) return 0;
    if (e >= 63) return 1ull << 63;
    unsigned __int128 v = (unsigned __int128)a << e;
    return v > (1ull << 63) ? (1ull << 63) : (unsigned long long)v;
}

// Subcube with the given fixed mask and value bits, width <= 64 words handled
// generally through set_coord to stay width-agnostic.
Subcube make_member(int width, uint64_t fixed_mask, uint64_t value_bits) {
    Subcube m(width);
    for (int i = 0; i < width && i < 64; ++i)
        if ((fixed_mask >> i) & 1)
            m.set_coord(i, ((value_bits >> i) & 1) ? '1' : '0');
    return m;
}

// Appends all 2^|mask| subcubes with the given fixed set, values ascending
// in the packed order of the mask's bits.
void append_class(CubeFamily& fam, uint64_t mask, unsigned long long take) {
    std::vector<int> coords;
    for (int i = 0; i < fam.width && i < 64; ++i)
        if ((mask >> i) & 1) coords.push_back(i);
    for (unsigned long long v = 0; v < take; ++v) {
        uint64_t bits = 0;
        for (size_t j = 0; j < coords.size(); ++j)
            if ((v >> j) & 1) bits |= uint64_t{1} << coords[j];
        fam.add(make_member(fam.width, mask, bits));
    }
}

void check_width(int d) {
    if (d < 1) throw std::invalid_argument("width must be at least 1");
    if (d > 64)
        throw std::invalid_argument("constructions support widths up to 64");
}

}  // namespace

unsigned long long turan_number(unsigned long long n, int r) {
    if (r < 1) throw std::invalid_argument("turan_number needs r >= 1");
    // balanced parts: n mod r parts of size ceil, the rest floor
    unsigned long long q = n / r, rem = n % r;
    unsigned long long same =
        rem * binom2(q + 1) + (static_cast<unsigned long long>(r) - rem) * binom2(q);
    return binom2(n) - same;
}

CubeFamily partite_family(long long n, int d, int k) {
    check_width(d);
    if (k < 2) throw std::invalid_argument("partite_family needs k >= 2");
    if (n < 1) throw std::invalid_argument("partite_family needs n >= 1");

    // capacity under the theorem: k * 2^(floor(d/k)), saturating
    if ((unsigned long long)n > sat_shl(k, d / k))
        throw infeasible_error("partite_family: n exceeds k*2^(floor(d/k))");

    // smallest t with k*2^t >= n, so each class can hold its balanced share
    int t = 0;
    while (((unsigned long long)k << t) < (unsigned long long)n) ++t;

    CubeFamily fam(d);
    long long q = n / k, rem = n % k;
    for (int i = 0; i < k; ++i) {
        uint64_t mask = t == 0 ? 0 : ((~uint64_t{0} >> (64 - t)) << (i * t));
        append_class(fam, mask, (unsigned long long)(q + (i < rem ? 1 : 0)));
    }
    return fam;
}

CubeFamily full_codim_family(int d, int r) {
    check_width(d);
    if (r < 1) throw std::invalid_argument("full_codim_family needs r >= 1");
    int t = d / r;
    if (d - t > 40)
        throw resource_error("full_codim_family would emit more than 2^40 members");
    uint64_t all = d == 64 ? ~uint64_t{0} : (uint64_t{1} << d) - 1;
    CubeFamily fam(d);
    for (int i = 0; i < r; ++i) {
        uint64_t block = t == 0 ? 0 : ((~uint64_t{0} >> (64 - t)) << (i * t));
        append_class(fam, all & ~block, uint64_t{1} << (d - t));
    }
    return fam;
}

CubeFamily large_n_family(long long n, int d, int k) {
    check_width(d);
    if (k < 2) throw std::invalid_argument("large_n_family needs k >= 2");
    if ((unsigned long long)n > sat_shl(k, d))
        throw infeasible_error("large_n_family: n exceeds k*2^d");

    // largest t >= 0 with k*2^(d-t) <= n
    int t = -1;
    for (int cand = 0; cand <= d; ++cand)
        if (sat_shl(k, d - cand) <= (unsigned long long)n) {
            t = cand;
            break;
        }
    if (t < 0)
        throw infeasible_error("large_n_family: n below the smallest base size");

    std::vector<int> block_sizes(k, t);
    if (t * k > d) {
        // the equal-size blocks do not fit; fall back to the balanced
        // partition of [d] (ceil(d/k) for the first d mod k blocks)
        for (int i = 0; i < k; ++i)
            block_sizes[i] = d / k + (i < d % k ? 1 : 0);
        unsigned long long base = 0;
        for (int i = 0; i < k; ++i)
            base += uint64_t{1} << (d - block_sizes[i]);
        if (base > (unsigned long long)n)
            throw infeasible_error(
                "large_n_family: rounding gap, the smallest full-edge base has " +
                std::to_string(base) + " members");
    }
    if (d - t > 40)
        throw resource_error("large_n_family would emit more than 2^40 members");

    uint64_t all = d == 64 ? ~uint64_t{0} : (uint64_t{1} << d) - 1;
    CubeFamily fam(d);
    int offset = 0;
    for (int i = 0; i < k; ++i) {
        int bs = block_sizes[i];
        uint64_t block = bs == 0 ? 0 : ((~uint64_t{0} >> (64 - bs)) << offset);
        offset += bs;
        append_class(fam, all & ~block, uint64_t{1} << (d - bs));
    }
    if (fam.size() < n) fam = grow_family(fam, n, k);
    return fam;
}

CubeFamily mixed_partite_family(int d,
                                const std::vector<std::vector<int>>& fixed_sets) {
    check_width(d);
    if (fixed_sets.empty())
        throw std::invalid_argument("mixed_partite_family needs at least one class");
    CubeFamily fam(d);
    for (const auto& set : fixed_sets) {
        uint64_t mask = 0;
        for (int c : set) {
            if (c < 0 || c >= d)
                throw std::invalid_argument("fixed-set coordinate out of range");
            mask |= uint64_t{1} << c;
        }
        if (std::popcount(mask) > 40)
            throw resource_error("mixed_partite_family class larger than 2^40");
        append_class(fam, mask, uint64_t{1} << std::popcount(mask));
    }
    return fam;
}

namespace {

// Water filling: distribute n over capacity-capped parts as equally as
// possible.  caps ascending; returns sizes aligned with caps.
bool water_fill(const std::vector<unsigned long long>& caps_asc,
                unsigned long long n, std::vector<unsigned long long>& out) {
    out.assign(caps_asc.size(), 0);
    unsigned long long rem = n;
    size_t m = caps_asc.size();
    for (size_t i = 0; i < m; ++i) {
        unsigned long long share = rem / (m - i);
        unsigned long long take = std::min(caps_asc[i], share);
        out[i] = take;
        rem -= take;
    }
    return rem == 0;
}

}  // namespace

PartiteProfile optimal_partite_profile(unsigned long long n, int d, int r,
                                       ProfileSearchStats* stats) {
    if (r < 1 || r > 8)
        throw std::invalid_argument("optimizer supports 1 <= r <= 8");
    if (d < 1 || d > 64)
        throw std::invalid_argument("optimizer supports 1 <= d <= 64");
    if (n > (1ull << 32))
        throw std::invalid_argument("optimizer supports n up to 2^32");
    if (n > sat_shl(r, d)) throw infeasible_error("optimizer: n exceeds r*2^d");

    PartiteProfile best;
    bool have = false;
    ProfileSearchStats st;

    std::vector<int> dims(r, 0);
    // enumerate nonincreasing dimension vectors in lexicographic order
    auto recurse = [&](auto&& self, int idx, int maxv, int left) -> void {
        if (idx == r) {
            ++st.compositions;
            std::vector<unsigned long long> caps(r);
            for (int i = 0; i < r; ++i)
                caps[i] = dims[i] >= 62 ? (1ull << 62)
                                        : (unsigned long long)1 << dims[i];
            std::vector<unsigned long long> caps_asc(caps.rbegin(), caps.rend());
            std::vector<unsigned long long> sizes_asc;
            if (!water_fill(caps_asc, n, sizes_asc)) return;
            ++st.feasible;
            unsigned long long obj = 0;
            for (unsigned long long s : sizes_asc) obj += binom2(s);
            if (!have || obj < best.objective) {
                have = true;
                best.r = r;
                best.part_dims = dims;
                best.part_sizes.assign(sizes_asc.rbegin(), sizes_asc.rend());
                best.objective = obj;
                best.edges = binom2(n) - obj;
            }
            return;
        }
        for (int v = 0; v <= std::min(maxv, left); ++v) {
            dims[idx] = v;
            self(self, idx + 1, v, left - v);
        }
    };
    // lexicographically smallest optimum wins: ascending enumeration plus a
    // strict improvement test keeps the first one found
    recurse(recurse, 0, d, d);

    if (stats) *stats = st;
    if (!have) throw infeasible_error("optimizer: no feasible profile");
    return best;
}

CubeFamily realize_profile(const PartiteProfile& profile, int d) {
    check_width(d);
    int total = 0;
    for (int v : profile.part_dims) total += v;
    if (total > d)
        throw std::invalid_argument("profile dimensions exceed the width");
    CubeFamily fam(d);
    int offset = 0;
    for (int i = 0; i < profile.r; ++i) {
        int di = profile.part_dims[i];
        uint64_t mask = di == 0 ? 0 : ((~uint64_t{0} >> (64 - di)) << offset);
        offset += di;
        append_class(fam, mask, profile.part_sizes[i]);
    }
    return fam;
}

}  // namespace cubegraph
