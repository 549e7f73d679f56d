#pragma once
// Random subcube families: the i.i.d. coordinate model (each coordinate 0
// with probability p, 1 with probability p, free otherwise) and the
// codimension-distribution variant.  Sampling is driven by per-member
// counter-based streams so output is identical for any worker count.

#include <cstdint>
#include <optional>
#include <vector>

#include "cubegraph/subcube.hpp"

namespace cubegraph {

// Counter-based stream: output i is the splitmix64 finalizer applied to
// key + (i+1)*golden_gamma, with key = mix(seed) ^ mix(member_index + 1).
// Pinned here so identical parameters reproduce identical families.
struct SplitStream {
    uint64_t key = 0;
    uint64_t counter = 0;

    uint64_t next();
    double next_unit();               // uniform in [0,1), 53 bits
    uint64_t next_below(uint64_t m);  // uniform in [0,m)
};

SplitStream member_stream(uint64_t seed, uint64_t member_index);

struct RandomModelParams {
    long long n = 0;
    int d = 1;
    double p = 0.25;  // in [0, 1/2]
    uint64_t seed = 0;
    std::optional<std::vector<double>> codim_distribution;  // over {0..d}
};

// n i.i.d. subcubes with i.i.d. coordinates under the 3-point law.
CubeFamily sample_family(const RandomModelParams& params);

// Each member draws a codimension from the distribution, then a uniform
// fixed set of that size, then uniform values.
CubeFamily sample_family_codim(const RandomModelParams& params);

// P(two independent samples intersect) = (1 - 2p^2)^d.
double edge_probability(int d, double p);

}  // namespace cubegraph
