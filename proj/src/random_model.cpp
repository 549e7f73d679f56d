#include "cubegraph/random_model.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cubegraph {

namespace {

constexpr uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

uint64_t SplitStream::next() {
    ++counter;
    return mix64(key + counter * golden_gamma);
}

double SplitStream::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

uint64_t SplitStream::next_below(uint64_t m) {
    return static_cast<uint64_t>(((unsigned __int128)next() * m) >> 64);
}

SplitStream member_stream(uint64_t seed, uint64_t member_index) {
    SplitStream s;
    s.key = mix64(seed) ^ mix64(member_index + 1);
    return s;
}

namespace {

void validate_common(const RandomModelParams& params) {
    if (params.n < 0) throw std::invalid_argument("sample size must be nonnegative");
    if (params.d < 1) throw std::invalid_argument("width must be at least 1");
    if (!(params.p >= 0.0 && params.p <= 0.5))
        throw std::invalid_argument("p must lie in [0, 1/2]");
}

}  // namespace

CubeFamily sample_family(const RandomModelParams& params) {
    validate_common(params);
    CubeFamily fam(params.d);
    fam.members.resize(params.n, Subcube(params.d));
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < params.n; ++i) {
        SplitStream rng = member_stream(params.seed, static_cast<uint64_t>(i));
        Subcube& m = fam.members[i];
        for (int c = 0; c < params.d; ++c) {
            double u = rng.next_unit();
            if (u < params.p) m.set_coord(c, '0');
            else if (u < 2 * params.p) m.set_coord(c, '1');
            // else free
        }
    }
    return fam;
}

CubeFamily sample_family_codim(const RandomModelParams& params) {
    validate_common(params);
    if (!params.codim_distribution)
        throw std::invalid_argument("codimension distribution missing");
    const std::vector<double>& dist = *params.codim_distribution;
    if (static_cast<int>(dist.size()) != params.d + 1)
        throw std::invalid_argument("codimension distribution needs d+1 entries");
    double sum = 0;
    for (double w : dist) {
        if (w < 0) throw std::invalid_argument("codimension probabilities must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("codimension distribution must sum to 1");

    std::vector<double> cdf(dist.size());
    std::partial_sum(dist.begin(), dist.end(), cdf.begin());
    cdf.back() = 1.0;

    CubeFamily fam(params.d);
    fam.members.resize(params.n, Subcube(params.d));
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < params.n; ++i) {
        SplitStream rng = member_stream(params.seed, static_cast<uint64_t>(i));
        double u = rng.next_unit();
        int codim = 0;
        while (codim < params.d && u >= cdf[codim]) ++codim;
        // uniform codim-subset by partial Fisher-Yates
        std::vector<int> coords(params.d);
        std::iota(coords.begin(), coords.end(), 0);
        for (int j = 0; j < codim; ++j) {
            int pick = j + static_cast<int>(rng.next_below(params.d - j));
            std::swap(coords[j], coords[pick]);
        }
        Subcube& m = fam.members[i];
        for (int j = 0; j < codim; ++j)
            m.set_coord(coords[j], rng.next() & 1 ? '1' : '0');
    }
    return fam;
}

double edge_probability(int d, double p) {
    if (d < 1) throw std::invalid_argument("width must be at least 1");
    if (!(p >= 0.0 && p <= 0.5))
        throw std::invalid_argument("p must lie in [0, 1/2]");
    return std::pow(1.0 - 2.0 * p * p, d);
}

}  // namespace cubegraph
