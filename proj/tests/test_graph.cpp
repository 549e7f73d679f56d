#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "cubegraph/constructions.hpp"
#include "cubegraph/errors.hpp"
#include "cubegraph/graph.hpp"
#include "oracles.hpp"

using namespace cubegraph;

namespace {

CubeFamily family_of(const std::vector<std::string>& texts) {
    CubeFamily fam;
    for (const auto& t : texts) fam.add(parse_subcube(t));
    return fam;
}

const std::vector<std::string> c5_texts = {"0**", "*0*", "1*0", "11*", "*11"};

}  // namespace

TEST_CASE("build_graph on the two-block complete bipartite family") {
    CubeFamily fam = family_of({"00**", "10**", "01**", "11**",
                                "**00", "**10", "**01", "**11"});
    IntersectionGraph g = build_graph(fam);
    CHECK(g.edges() == 16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(g.adj.edge(i, j + 4));
            if (i != j) {
                CHECK_FALSE(g.adj.edge(i, j));
                CHECK_FALSE(g.adj.edge(i + 4, j + 4));
            }
        }
}

TEST_CASE("build_graph recognises the 5-cycle family") {
    IntersectionGraph g = build_graph(family_of(c5_texts));
    CHECK(g.adj == cycle_graph(5));
}

TEST_CASE("build_graph of the empty family") {
    IntersectionGraph g = build_graph(CubeFamily{});
    CHECK(g.n() == 0);
    CHECK(g.edges() == 0);
}

TEST_CASE("parallel and serial builds agree") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 1 + static_cast<int>(rng() % 10);
        int n = static_cast<int>(rng() % 30);
        CubeFamily fam = oracle::random_family(rng, d, n);
        CHECK(build_graph(fam).adj == build_graph_serial(fam).adj);
    }
    // multi-word widths
    CubeFamily wide = oracle::random_family(rng, 70, 25);
    CHECK(build_graph(wide).adj == build_graph_serial(wide).adj);
}

TEST_CASE("clique number with Helly witness") {
    IntersectionGraph g = build_graph(family_of({"*0", "*1", "0*", "1*"}));
    CliqueResult res = clique_number(g);
    CHECK(res.omega == 2);
    CHECK(res.witness.point.to_string() == "00");
    CHECK(res.witness.vertices == std::vector<int>{0, 2});

    CubeFamily three(2);
    for (int i = 0; i < 3; ++i) three.add(parse_subcube("**"));
    CHECK(clique_number(build_graph(three)).omega == 3);

    CHECK(clique_number(build_graph(family_of(c5_texts))).omega == 2);
}

TEST_CASE("point sweep, branch and bound, and the subset oracle agree") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 1 + static_cast<int>(rng() % 10);
        int n = 1 + static_cast<int>(rng() % 12);
        IntersectionGraph g = build_graph(oracle::random_family(rng, d, n));
        CliqueResult via_points = clique_number_points(g);
        CliqueResult via_bb = clique_number_branch_bound(g);
        int expected = oracle::clique_number(g.adj);
        CHECK(via_points.omega == expected);
        CHECK(via_bb.omega == expected);
        // both witnesses must be genuine: the point lies in every member
        for (const CliqueResult* r : {&via_points, &via_bb}) {
            CHECK(static_cast<int>(r->witness.vertices.size()) >= r->omega);
            for (int v : r->witness.vertices)
                CHECK(g.family.members[v].contains(r->witness.point));
        }
    }
}

TEST_CASE("independence number") {
    CHECK(independence_number(build_graph(family_of({"00", "01", "10", "11"}))) == 4);
    CHECK(independence_number(build_graph(family_of(c5_texts))) == 2);
    IntersectionGraph k44 = build_graph(partite_family(8, 4, 2));
    CHECK(independence_number(k44) == 4);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 1 + static_cast<int>(rng() % 6);
        int n = 1 + static_cast<int>(rng() % 12);
        IntersectionGraph g = build_graph(oracle::random_family(rng, d, n));
        int alpha = independence_number(g);
        CHECK(alpha == oracle::independence_number(g.adj));
        CHECK(alpha <= (1 << d));
    }
}

TEST_CASE("count_cliques") {
    IntersectionGraph k44 = build_graph(partite_family(8, 4, 2));
    CHECK(count_cliques(k44, 3) == 0);
    CHECK(count_cliques(k44, 2) == 16);

    IntersectionGraph quad = build_graph(family_of({"*0", "*1", "0*", "1*"}));
    CHECK(count_cliques(quad, 2) == 4);
    CHECK(count_cliques(quad, 1) == 4);

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        int d = 1 + static_cast<int>(rng() % 6);
        int n = 1 + static_cast<int>(rng() % 11);
        IntersectionGraph g = build_graph(oracle::random_family(rng, d, n));
        for (int size = 1; size <= 4; ++size) {
            long long expected = oracle::count_cliques(g.adj, size);
            CHECK(count_cliques(g, size) == expected);
            CHECK(count_cliques_serial(g, size) == expected);
        }
    }
    CHECK_THROWS_AS(count_cliques(quad, 0), std::invalid_argument);
}

TEST_CASE("represent_graph embeds any small graph exactly") {
    BitGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CubeFamily rep = represent_graph(path);
    REQUIRE(rep.size() == 3);
    CHECK(rep.members[0].to_string() == "1*0");
    CHECK(rep.members[1].to_string() == "*1*");
    CHECK(rep.members[2].to_string() == "0*1");
    CHECK(build_graph(rep).adj == path);

    BitGraph edgeless(2);
    CubeFamily e2 = represent_graph(edgeless);
    CHECK(e2.members[0].to_string() == "10");
    CHECK(e2.members[1].to_string() == "01");

    BitGraph k2(2);
    k2.add_edge(0, 1);
    CubeFamily fk2 = represent_graph(k2);
    CHECK(fk2.members[0].to_string() == "1*");
    CHECK(fk2.members[1].to_string() == "*1");

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        BitGraph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() & 1) g.add_edge(i, j);
        CHECK(build_graph(represent_graph(g)).adj == g);
    }
}

TEST_CASE("grow_family") {
    CubeFamily start = family_of({"0*"});
    CubeFamily grown = grow_family(start, 2, 2);
    REQUIRE(grown.size() == 2);
    CHECK(grown.members[0].to_string() == "00");
    CHECK(grown.members[1].to_string() == "01");
    CHECK(build_graph(grown).edges() == 0);

    CubeFamily singles = family_of({"00", "01", "10", "11"});
    CubeFamily plus = grow_family(singles, 5, 2);
    REQUIRE(plus.size() == 5);
    CHECK(plus.members[4] == plus.members[0]);
    CHECK(build_graph(plus).edges() == 1);

    CHECK_THROWS_AS(grow_family(family_of({"**"}), 9, 2), infeasible_error);

    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 40) {
        int d = 2 + static_cast<int>(rng() % 4);
        int r = 2 + static_cast<int>(rng() % 3);
        CubeFamily fam = oracle::random_family(rng, d, 1 + rng() % 6);
        IntersectionGraph g = build_graph(fam);
        if (clique_number(g).omega > r) continue;
        ++done;
        long long target = fam.size() + 1 + static_cast<long long>(rng() % 8);
        target = std::min<long long>(target, (long long)r << d);
        CubeFamily bigger = grow_family(fam, target, r);
        IntersectionGraph g2 = build_graph(bigger);
        CHECK(g2.n() == target);
        CHECK(g2.edges() >= g.edges());
        // the grown family stays K_{r+1}-free
        CHECK(clique_number(g2).omega <= r);
    }
}

TEST_CASE("graph6 export matches reference strings") {
    BitGraph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    CHECK(to_graph6(k4) == "C~");
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");

    BitGraph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(to_graph6(p3) == "Bg");
    CHECK(to_graph6(BitGraph(3)) == "B?");

    BitGraph k44(8);
    for (int i = 0; i < 4; ++i)
        for (int j = 4; j < 8; ++j) k44.add_edge(i, j);
    CHECK(to_graph6(k44) == "G?~vf_");

    // large-n prefix form
    CHECK(to_graph6(cycle_graph(65)).substr(0, 4) == std::string("~?@@"));

    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 70);
        BitGraph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) g.add_edge(i, j);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("dimacs round-trip") {
    IntersectionGraph g = build_graph(family_of(c5_texts));
    std::string text = to_dimacs(g.adj);
    std::istringstream in(text);
    CHECK(read_dimacs(in) == g.adj);
    std::istringstream bad("e 1 2\n");
    CHECK_THROWS_AS(read_dimacs(bad), std::invalid_argument);
}

TEST_CASE("analysis report") {
    IntersectionGraph g = build_graph(family_of(c5_texts));
    nlohmann::json rep = analysis_report(g, {2, 3});
    CHECK(rep["n"] == 5);
    CHECK(rep["d"] == 3);
    CHECK(rep["edges"] == 5);
    CHECK(rep["omega"]["value"] == 2);
    CHECK(rep["independence_number"] == 2);
    CHECK(rep["clique_counts"]["2"] == 5);
    CHECK(rep["clique_counts"]["3"] == 0);

    nlohmann::json empty = analysis_report(build_graph(CubeFamily{}), {});
    CHECK(empty["n"] == 0);
    CHECK(empty["edges"] == 0);
}
