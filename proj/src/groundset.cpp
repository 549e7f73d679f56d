#include "cubegraph/groundset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cubegraph/errors.hpp"

namespace cubegraph {

namespace {

bool sorted_intersects(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

void validate(const SetFamily& fam) {
    for (const auto& m : fam.members) {
        if (m.empty()) throw std::invalid_argument("set family member is empty");
        for (int e : m)
            if (e < 1 || e > fam.ground_size)
                throw std::invalid_argument("set family element out of ground range");
    }
}

}  // namespace

BitGraph intersection_graph(const SetFamily& fam) {
    validate(fam);
    BitGraph g(fam.size());
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (sorted_intersects(fam.members[i], fam.members[j])) g.add_edge(i, j);
    return g;
}

nlohmann::json to_json(const SetFamily& fam) {
    return {{"ground_size", fam.ground_size}, {"members", fam.members}};
}

SetFamily set_family_from_json(const nlohmann::json& j) {
    SetFamily fam;
    fam.ground_size = j.at("ground_size").get<int>();
    fam.members = j.at("members").get<std::vector<std::vector<int>>>();
    for (auto& m : fam.members) std::sort(m.begin(), m.end());
    validate(fam);
    return fam;
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

}  // namespace

SetFamily mols_family(int q, int r) {
    if (!is_prime(q))
        throw std::invalid_argument(
            "mols_family supports prime orders only (got " + std::to_string(q) + ")");
    if (r < 2) throw std::invalid_argument("mols_family needs r >= 2");
    if (r > q + 1)
        throw std::invalid_argument("mols_family: at most q+1 classes exist for order q");

    SetFamily fam;
    fam.ground_size = q * q;
    auto cell = [q](int i, int j) { return i * q + j + 1; };  // 1-based
    for (int x = 0; x < q; ++x) {  // rows
        std::vector<int> s;
        for (int j = 0; j < q; ++j) s.push_back(cell(x, j));
        fam.members.push_back(std::move(s));
    }
    for (int y = 0; y < q; ++y) {  // columns
        std::vector<int> s;
        for (int i = 0; i < q; ++i) s.push_back(cell(i, y));
        fam.members.push_back(std::move(s));
    }
    for (int k = 1; k <= r - 2; ++k) {  // symbol classes of L_k(i,j) = k*i+j
        for (int x = 0; x < q; ++x) {
            std::vector<int> s;
            for (int i = 0; i < q; ++i) {
                int j = ((x - k * i) % q + q * q) % q;
                s.push_back(cell(i, j));
            }
            std::sort(s.begin(), s.end());
            fam.members.push_back(std::move(s));
        }
    }
    return fam;
}

namespace {

// Cyclic Steiner triple systems from base blocks, plus the affine plane for
// n = 9.  Blocks returned sorted, elements 1-based.
std::vector<std::vector<int>> catalog_steiner_triples(int n) {
    std::vector<std::vector<int>> blocks;
    auto develop = [&](std::initializer_list<int> base, int orbit_len) {
        for (int s = 0; s < orbit_len; ++s) {
            std::vector<int> b;
            for (int e : base) b.push_back((e + s) % n + 1);
            std::sort(b.begin(), b.end());
            blocks.push_back(std::move(b));
        }
    };
    switch (n) {
        case 3:
            blocks.push_back({1, 2, 3});
            break;
        case 7:
            develop({0, 1, 3}, 7);
            break;
        case 9: {
            // AG(2,3): rows, columns, both diagonal directions of the 3x3 grid
            auto cell = [](int i, int j) { return i * 3 + j + 1; };
            for (int i = 0; i < 3; ++i)
                blocks.push_back({cell(i, 0), cell(i, 1), cell(i, 2)});
            for (int j = 0; j < 3; ++j)
                blocks.push_back({cell(0, j), cell(1, j), cell(2, j)});
            for (int s = 0; s < 3; ++s) {
                std::vector<int> b1, b2;
                for (int i = 0; i < 3; ++i) {
                    b1.push_back(cell(i, (s + i) % 3));
                    b2.push_back(cell(i, ((s - i) % 3 + 3) % 3));
                }
                std::sort(b1.begin(), b1.end());
                std::sort(b2.begin(), b2.end());
                blocks.push_back(b1);
                blocks.push_back(b2);
            }
            break;
        }
        case 13:
            develop({0, 1, 4}, 13);
            develop({0, 2, 7}, 13);
            break;
        case 15:
            develop({0, 1, 4}, 15);
            develop({0, 2, 9}, 15);
            develop({0, 5, 10}, 5);  // short orbit
            break;
        default:
            break;
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

// All r-subsets of {1..n} in lexicographic order, visited one at a time.
template <typename F>
void for_each_subset(int n, int r, F&& visit) {
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i + 1;
    while (true) {
        if (!visit(cur)) return;
        int i = r - 1;
        while (i >= 0 && cur[i] == n - (r - 1 - i)) --i;
        if (i < 0) return;
        ++cur[i];
        for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
}

BlockDesign finish_design(int n, int r, std::vector<std::vector<int>> blocks) {
    BlockDesign out;
    out.n = n;
    out.r = r;
    out.blocks = std::move(blocks);
    out.dual.ground_size = static_cast<int>(out.blocks.size());
    out.dual.members.assign(n, {});
    for (int a = 0; a < static_cast<int>(out.blocks.size()); ++a)
        for (int i : out.blocks[a]) out.dual.members[i - 1].push_back(a + 1);
    for (const auto& m : out.dual.members)
        if (m.empty())
            throw infeasible_error("design leaves an element of [n] uncovered");
    return out;
}

}  // namespace

BlockDesign pair_cover_family(int n, int r) {
    if (r < 2 || n < r)
        throw infeasible_error("pair cover needs n >= r >= 2");
    std::vector<std::vector<int>> blocks;
    if (r == 3) blocks = catalog_steiner_triples(n);
    if (blocks.empty()) {
        // lexicographic greedy: take a block iff it covers a new pair
        std::vector<char> covered(static_cast<size_t>(n) * n, 0);
        auto idx = [n](int i, int j) { return static_cast<size_t>(i - 1) * n + (j - 1); };
        for_each_subset(n, r, [&](const std::vector<int>& s) {
            bool useful = false;
            for (size_t i = 0; i < s.size() && !useful; ++i)
                for (size_t j = i + 1; j < s.size() && !useful; ++j)
                    useful = !covered[idx(s[i], s[j])];
            if (useful) {
                for (size_t i = 0; i < s.size(); ++i)
                    for (size_t j = i + 1; j < s.size(); ++j)
                        covered[idx(s[i], s[j])] = 1;
                blocks.push_back(s);
            }
            return true;
        });
    }
    return finish_design(n, r, std::move(blocks));
}

BlockDesign pair_packing_family(int n, int r) {
    if (r < 2 || n < r)
        throw infeasible_error("pair packing needs n >= r >= 2");
    std::vector<std::vector<int>> blocks;
    std::vector<char> used(static_cast<size_t>(n) * n, 0);
    auto idx = [n](int i, int j) { return static_cast<size_t>(i - 1) * n + (j - 1); };
    for_each_subset(n, r, [&](const std::vector<int>& s) {
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (used[idx(s[i], s[j])]) return true;
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                used[idx(s[i], s[j])] = 1;
        blocks.push_back(s);
        return true;
    });
    return finish_design(n, r, std::move(blocks));
}

SetFamily split_member(const SetFamily& fam, int index,
                       const std::vector<int>& part) {
    if (index < 0 || index >= fam.size())
        throw std::invalid_argument("split index out of range");
    const std::vector<int>& m = fam.members[index];
    std::set<int> in_part(part.begin(), part.end());
    std::vector<int> first, second;
    for (int e : m) (in_part.count(e) ? first : second).push_back(e);
    if (first.size() != in_part.size())
        throw std::invalid_argument("split part is not a subset of the member");
    if (first.empty() || second.empty())
        throw std::invalid_argument("both sides of a split must be nonempty");
    SetFamily out = fam;
    out.members[index] = std::move(first);
    out.members.push_back(std::move(second));
    return out;
}

}  // namespace cubegraph
