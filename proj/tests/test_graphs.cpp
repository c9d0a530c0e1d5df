#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <set>

#include "kg/graphs.hpp"
#include "kg/rng.hpp"

using namespace kg;

TEST_CASE("partitions into parts >= 3") {
    auto p9 = partitions_min3(9);
    REQUIRE(p9.size() == 4);
    CHECK(p9[0] == std::vector<int>{9});
    std::set<std::vector<int>> got(p9.begin(), p9.end());
    CHECK(got.count({3, 6}));
    CHECK(got.count({4, 5}));
    CHECK(got.count({3, 3, 3}));

    CHECK(partitions_min3(10).size() == 5);
    CHECK(partitions_min3(14).size() == 13);
    CHECK(partitions_min3(30).size() == 331);
    CHECK(partitions_min3(50).size() == 8182);
    for (const auto& parts : partitions_min3(21)) {
        int s = 0;
        for (int x : parts) {
            CHECK(x >= 3);
            s += x;
        }
        CHECK(s == 21);
    }
}

TEST_CASE("cycle graphs from partitions") {
    Graph g = cycles_from_partition(9, {3, 6});
    CHECK(g.n == 9);
    CHECK(g.degree == 2);
    CHECK(g.edges.size() == 9);
    auto lens = cycle_lengths(g);
    CHECK(lens == std::vector<int>{3, 6});
    auto comp = connected_components(g);
    REQUIRE(comp.size() == 2);
    CHECK(comp[0] == std::vector<int>{0, 1, 2});
    CHECK(comp[1].size() == 6);
}

TEST_CASE("regular sampler produces simple d-regular graphs") {
    auto rng = make_rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = sample_regular(12, 3, rng);
        std::vector<int> deg(12, 0);
        std::set<std::pair<int, int>> seen;
        for (auto [a, b] : g.edges) {
            CHECK(a < b);
            CHECK(!seen.count({a, b}));
            seen.insert({a, b});
            ++deg[a];
            ++deg[b];
        }
        for (int d : deg) CHECK(d == 3);
    }
    auto r1 = make_rng(7), r2 = make_rng(7);
    CHECK(sample_regular(10, 3, r1).edges == sample_regular(10, 3, r2).edges);
}

TEST_CASE("certificates are invariant under relabeling") {
    auto rng = make_rng(3);
    for (int d : {2, 3}) {
        Graph g = d == 2 ? cycles_from_partition(10, {4, 6})
                         : sample_regular(10, 3, rng);
        std::vector<int> perm{3, 1, 4, 0, 9, 2, 6, 8, 7, 5};
        Graph h = permute_graph(g, perm);
        CHECK(iso_certificate(g) == iso_certificate(h));
    }
    CHECK(iso_certificate(cycles_from_partition(10, {4, 6})) !=
          iso_certificate(cycles_from_partition(10, {3, 7})));
    CHECK(iso_certificate(cycles_from_partition(10, {4, 6})) !=
          iso_certificate(cycles_from_partition(10, {10})));
}

TEST_CASE("small regular families saturate to the known counts") {
    auto rng = make_rng(17);
    CHECK(all_regular_graphs(4, 3, rng).size() == 1);
    CHECK(all_regular_graphs(6, 3, rng).size() == 2);
    CHECK(all_regular_graphs(8, 3, rng).size() == 6);
    CHECK(all_regular_graphs(6, 2, rng).size() == 2);
}

TEST_CASE("graph file round trip") {
    Graph g = cycles_from_partition(7, {3, 4});
    const char* path = "roundtrip_graph.txt";
    write_graph(g, path);
    Graph h = read_graph(path);
    std::remove(path);
    CHECK(h.n == g.n);
    CHECK(h.degree == g.degree);
    CHECK(h.edges == g.edges);
}
