#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "dht/cube_maps.hpp"
#include "dht/graph.hpp"
#include "dht/iso.hpp"
#include "dht/json_io.hpp"

using namespace dht;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) g.add_edge(i, j);
    return g;
}

GraphMap random_map(std::mt19937& rng, const Graph& a, const Graph& b) {
    // Relation-preserving map found by simple retries; falls back to a
    // constant map (always valid since b is reflexive).
    std::uniform_int_distribution<int> pick(0, b.size() - 1);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<int> assign(a.size());
        for (auto& v : assign) v = pick(rng);
        GraphMap m{a, b, assign};
        if (m.is_valid()) return m;
    }
    return GraphMap{a, b, std::vector<int>(a.size(), 0)};
}

}  // namespace

TEST_CASE("interval graphs") {
    Graph i0 = interval(0);
    CHECK(i0.size() == 1);
    CHECK(i0.edge_count() == 0);

    Graph i3 = interval(3);
    CHECK(i3.size() == 4);
    CHECK(i3.edge_count() == 3);

    Graph i5 = interval(5);
    CHECK(i5.size() == 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(i5.adjacent(i, j) == (std::abs(i - j) <= 1));
}

TEST_CASE("cycle graphs") {
    Graph c3 = cycle(3);
    CHECK(c3.size() == 3);
    CHECK(c3.edge_count() == 3);

    Graph c5 = cycle(5);
    CHECK(c5.size() == 5);
    CHECK(c5.edge_count() == 5);

    Graph c4 = cycle(4);
    CHECK(c4.adjacent(0, 3));
    CHECK(!c4.adjacent(0, 2));

    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("box product") {
    Graph c5 = cycle(5);
    auto unit = box_product(c5, interval(0));
    auto iso = graph_isomorphic(unit.graph, c5);
    REQUIRE(iso);
    CHECK(is_graph_isomorphism(*iso));

    auto sq = box_product(interval(1), interval(1));
    CHECK(sq.graph.size() == 4);
    CHECK(sq.graph.edge_count() == 4);
    CHECK(sq.pi1.is_valid());
    CHECK(sq.pi2.is_valid());

    auto grid = box_product(interval(2), interval(2));
    CHECK(grid.graph.size() == 9);
    CHECK(grid.graph.edge_count() == 12);
}

TEST_CASE("box product commutes and associates up to the swap witness") {
    Graph a = cycle(3), b = interval(2);
    auto ab = box_product(a, b), ba = box_product(b, a);
    // Explicit swap (v,w) -> (w,v).
    std::vector<int> swap_assign(ab.graph.size());
    for (int i = 0; i < ab.graph.size(); ++i) {
        int v = ab.pi1.apply(i), w = ab.pi2.apply(i);
        swap_assign[i] = w * a.size() + v;
    }
    CHECK(is_graph_isomorphism(GraphMap{ab.graph, ba.graph, swap_assign}));

    Graph c = interval(1);
    auto left = box_product(box_product(a, b).graph, c).graph;
    auto right = box_product(a, box_product(b, c).graph).graph;
    auto iso = graph_isomorphic(left, right);
    REQUIRE(iso);
    CHECK(is_graph_isomorphism(*iso));
}

TEST_CASE("cube vertex counts") {
    CHECK(cube(5, 0).size() == 1);
    CHECK(cube(2, 3).size() == 27);
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 4; ++n) {
            long long expect = 1;
            for (int i = 0; i < n; ++i) expect *= m + 1;
            CHECK(cube(m, n).size() == expect);
        }
    auto iso = graph_isomorphic(cube(1, 2), cycle(4));
    REQUIRE(iso);
}

TEST_CASE("distance") {
    CHECK(distance(interval(5), 0, 5) == 5);
    CHECK(distance(cycle(5), 0, 3) == 2);
    CHECK(distance(cycle(5), 0, 0) == 0);
    Graph two = disjoint_union(interval(2), interval(3));
    CHECK(!distance(two, 0, 3).has_value());
    CHECK_THROWS_AS(distance(interval(1), 0, 7), std::out_of_range);
}

TEST_CASE("distance triangle inequality on random graphs") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 12, 0.3);
        for (int u = 0; u < g.size(); ++u) {
            auto du = bfs_distances(g, u);
            for (int v = 0; v < g.size(); ++v) {
                if (du[v] < 0) continue;
                auto dv = bfs_distances(g, v);
                for (int w = 0; w < g.size(); ++w) {
                    if (dv[w] < 0 || du[w] < 0) continue;
                    CHECK(du[w] <= du[v] + dv[w]);
                }
            }
        }
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(cycle(5)).size() == 1);
    CHECK(connected_components(disjoint_union(interval(2), interval(3))).size() == 2);
    CHECK(connected_components(Graph{}).empty());
}

TEST_CASE("enumerate_cube_maps counts") {
    Graph i1 = interval(1);
    CHECK(enumerate_cube_maps(i1, 1, 1).size() == 4);
    CHECK(enumerate_cube_maps(i1, 2, 1).size() == 16);

    Graph c5 = cycle(5);
    auto maps0 = enumerate_cube_maps(c5, 0, 2);
    CHECK(maps0.size() == 5);  // one per vertex

    // Lexicographic canonical order.
    auto maps = enumerate_cube_maps(i1, 2, 1);
    CHECK(std::is_sorted(maps.begin(), maps.end()));
}

TEST_CASE("enumerate_cube_maps closure properties") {
    Graph c5 = cycle(5);
    const int n = 2, m = 2;
    auto maps = enumerate_cube_maps(c5, n, m);
    std::set<std::vector<int>> index(maps.begin(), maps.end());
    CubeLattice lat(m, n);

    // Closed under coordinate permutation of the domain.
    for (const auto& f : maps) {
        std::vector<int> swapped(f.size());
        for (long long p = 0; p < lat.points; ++p) {
            auto x = lat.coords(p);
            std::swap(x[0], x[1]);
            swapped[lat.index(x)] = f[p];
        }
        CHECK(index.count(swapped));
    }

    // Face restrictions are enumerated in the lower dimension.
    auto below = enumerate_cube_maps(c5, n - 1, m);
    std::set<std::vector<int>> below_index(below.begin(), below.end());
    for (const auto& f : maps)
        for (int i = 1; i <= n; ++i)
            for (int eps = 0; eps < 2; ++eps)
                CHECK(below_index.count(cube_map_face(f, n, m, i, eps)));
}

TEST_CASE("pushout") {
    Graph i1 = interval(1);

    SUBCASE("along identities recovers the other leg") {
        Graph c5 = cycle(5);
        auto po = pushout(identity_map(c5), identity_map(c5));
        auto iso = graph_isomorphic(po.graph, c5);
        REQUIRE(iso);
    }

    SUBCASE("gluing two edges at a point gives a path") {
        Graph pt = interval(0);
        GraphMap to_end1{pt, i1, {1}};
        GraphMap to_end0{pt, i1, {0}};
        auto po = pushout(to_end1, to_end0);
        auto iso = graph_isomorphic(po.graph, interval(2));
        REQUIRE(iso);
    }

    SUBCASE("gluing two length-2 paths along both endpoints gives a 4-cycle") {
        // Two copies of I2 share their endpoint pair {0, 2}.
        Graph i2 = interval(2);
        Graph ends;
        ends.add_vertex("a");
        ends.add_vertex("b");
        GraphMap f{ends, i2, {0, 2}};
        auto po = pushout(f, f);
        auto iso = graph_isomorphic(po.graph, cycle(4));
        REQUIRE(iso);
        // The same gluing with single edges just recovers the edge.
        Graph e2;
        e2.add_vertex("a");
        e2.add_vertex("b");
        GraphMap g{e2, i1, {0, 1}};
        auto po1 = pushout(g, g);
        CHECK(graph_isomorphic(po1.graph, i1));
    }

    CHECK(pushout(identity_map(i1), identity_map(i1)).from_b.is_valid());
}

TEST_CASE("graph_isomorphic") {
    Graph c5 = cycle(5);
    auto self = graph_isomorphic(c5, c5);
    REQUIRE(self);
    CHECK(is_graph_isomorphism(*self));
    CHECK(!graph_isomorphic(cycle(5), cycle(6)));
    CHECK(graph_isomorphic(cube(1, 2), cycle(4)));
    // Same degree sequence, different graphs: C6 vs two triangles.
    Graph two_tri = disjoint_union(cycle(3), cycle(3));
    CHECK(!graph_isomorphic(cycle(6), two_tri));
}

TEST_CASE("graph JSON round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 9, 0.4);
        Graph back = graph_from_json(graph_to_json(g));
        CHECK(back == g);
    }
    CHECK_THROWS(graph_from_json(R"({"vertices":["a"],"edges":[["a","a"]]})"));
    CHECK_THROWS(graph_from_json(R"({"vertices":["a"],"edges":[["a","b"]]})"));
    CHECK_THROWS(graph_from_json(R"({"vertices":["a","a"],"edges":[]})"));
}

TEST_CASE("random graph maps stay valid under composition") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        Graph a = random_graph(rng, 6, 0.5);
        Graph b = random_graph(rng, 7, 0.5);
        GraphMap f = random_map(rng, a, b);
        CHECK(f.is_valid());
        GraphMap g = compose(identity_map(b), f);
        CHECK(g.is_valid());
        CHECK(same_vertex_function(f, g));
    }
}
