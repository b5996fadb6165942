#include <random>
#include <set>

#include "doctest.h"

#include "dht/gamma.hpp"
#include "dht/graph.hpp"
#include "dht/homology.hpp"
#include "dht/iso.hpp"
#include "dht/json_io.hpp"

using namespace dht;

TEST_CASE("simplicial complexes") {
    auto k = make_complex({"a", "b", "c"}, {{0, 1, 2}});
    CHECK(k.face_vector() == std::vector<int>{3, 3, 1});

    auto rp2 = builtin_rp2();
    CHECK(rp2.face_vector() == std::vector<int>{6, 15, 10});
    // Euler characteristic 1.
    CHECK(6 - 15 + 10 == 1);
    // Every edge lies in exactly two triangles.
    for (const auto& e : rp2.simplices[1]) {
        int count = 0;
        for (const auto& t : rp2.simplices[2])
            if (std::includes(t.begin(), t.end(), e.begin(), e.end())) ++count;
        CHECK(count == 2);
    }
}

TEST_CASE("complex JSON") {
    auto k = complex_from_json(R"({"vertices":["0","1","2"],"facets":[["0","1","2"]]})");
    CHECK(k.face_vector() == std::vector<int>{3, 3, 1});
    CHECK_THROWS(complex_from_json(R"({"vertices":["0"],"facets":[["0","7"]]})"));
}

TEST_CASE("cubify") {
    SUBCASE("a single vertex") {
        auto x = cubify(make_complex({"a"}, {{0}}));
        CHECK(x.count(0) == 1);
        CHECK(x.dim() == 0);
    }

    SUBCASE("a single edge") {
        auto x = cubify(make_complex({"a", "b"}, {{0, 1}}));
        CHECK(x.count(0) == 3);
        CHECK(x.count(1) == 2);
        CHECK(x.faces_valid());
    }

    SUBCASE("a triangle adds 1 + 3 + 3 cells above its boundary") {
        auto tri = cubify(make_complex({"a", "b", "c"}, {{0, 1, 2}}));
        auto edges_only = cubify(make_complex({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}}));
        CHECK(tri.count(0) - edges_only.count(0) == 1);
        CHECK(tri.count(1) - edges_only.count(1) == 3);
        CHECK(tri.count(2) == 3);
        CHECK(edges_only.count(2) == 0);
        CHECK(tri.faces_valid());
    }

    SUBCASE("rp2 cubification counts") {
        auto x = cubify(builtin_rp2());
        CHECK(x.count(0) == 6 + 15 + 10);
        CHECK(x.count(1) == 15 * 2 + 10 * 3);
        CHECK(x.count(2) == 10 * 3);
        CHECK(x.faces_valid());
    }

    SUBCASE("cubification is nonsingular") {
        // Every cell of the cubification includes monomorphically: the
        // iterated faces of each 2-cube are pairwise distinct per
        // dimension.
        auto x = cubify(builtin_rp2());
        for (int c = 0; c < x.count(2); ++c) {
            std::set<int> edges, corners;
            for (int i = 1; i <= 2; ++i)
                for (int eps = 0; eps < 2; ++eps) {
                    int e = x.face(2, c, i, eps);
                    CHECK(edges.insert(e).second);
                }
            for (int e : edges) {
                corners.insert(x.face(1, e, 1, 0));
                corners.insert(x.face(1, e, 1, 1));
            }
            CHECK(corners.size() == 4);
        }
    }
}

TEST_CASE("gamma of representable cubes matches F(m, n)") {
    for (auto [m, n] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        auto g = gamma(standard_cube(n), m);
        auto fg = f_graph(m, n);
        auto iso = graph_isomorphic(g.graph, fg.graph);
        REQUIRE_MESSAGE(iso, "gamma(cube^", n, ", ", m, ") vs F(", m, ",", n, ")");

        auto gb = gamma(standard_boundary(n), m);
        auto iso_b = graph_isomorphic(gb.graph, f_boundary_graph(fg));
        REQUIRE(iso_b);
    }
}

TEST_CASE("gamma of a point") {
    SemiCubicalSet pt;
    pt.add_cube(0, "p");
    for (int m = 1; m <= 4; ++m) CHECK(gamma(pt, m).graph.size() == 1);
    CHECK(gamma_of_complex(make_complex({"a"}, {{0}}), 3).graph.size() == 1);
}

TEST_CASE("gamma canonicalization is confluent under random peel orders") {
    // Peel a boundary sequence one ground-set element at a time in a
    // random order via single FR1-splits; the result must match the
    // library's canonical form.
    std::mt19937 rng(808);
    auto x = standard_cube(3);
    const int m = 2;
    for (int trial = 0; trial < 200; ++trial) {
        // Random F-sequence over the 3-cube.
        auto all = all_f_sequences(m, 3);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        FSequence s = all[pick(rng)];
        GammaVertex expect = gamma_canonical(x, 3, 0, s);

        // Randomized single-element peeling.
        int dim = 3, cube = 0;
        FSequence cur = reduce(s);
        while (cur.length() >= 1 && cur.weight[0] == 0) {
            auto members = cur.class_members(1);
            std::uniform_int_distribution<size_t> pick_member(0, members.size() - 1);
            int j = members[pick_member(rng)];
            int eps = cur.sign[j - 1] > 0 ? 1 : 0;
            cube = x.face(dim, cube, j, eps);
            --dim;
            // Drop j from the front class and re-index.
            FSequence rest;
            rest.m = cur.m;
            rest.n = cur.n - 1;
            bool front_now_empty = members.size() == 1;
            rest.weight = cur.weight;
            if (front_now_empty) rest.weight.erase(rest.weight.begin());
            for (int e = 1; e <= cur.n; ++e) {
                if (e == j) continue;
                rest.sign.push_back(cur.sign[e - 1]);
                rest.cls.push_back(front_now_empty ? cur.cls[e - 1] - 1 : cur.cls[e - 1]);
            }
            cur = reduce(rest);
        }
        CHECK(dim == expect.dim);
        CHECK(cube == expect.cube);
        CHECK(cur == expect.seq);
    }
}

TEST_CASE("gamma preserves coproducts") {
    auto x = standard_cube(1);
    auto y = standard_boundary(2);
    const int m = 2;
    auto both = gamma(disjoint_union(x, y), m);
    auto gx = gamma(x, m);
    auto gy = gamma(y, m);
    auto iso = graph_isomorphic(both.graph, disjoint_union(gx.graph, gy.graph));
    REQUIRE(iso);
}

TEST_CASE("rp2 gamma vertex audit at m = 3") {
    auto g = gamma_of_complex(builtin_rp2(), 3);
    // Per-cell accounting: 31 zero-cubes, 60 one-cubes each contributing
    // |interior F(3,1)| = 5, 30 two-cubes contributing 49.
    CHECK(g.graph.size() == 31 + 60 * 5 + 30 * 49);
    CHECK(g.graph.size() == 1801);
}

TEST_CASE("gamma of cubes is contractible in low homology") {
    for (auto [m, n] : {std::pair{3, 1}, {3, 2}}) {
        auto g = gamma(standard_cube(n), m);
        CHECK(homology(g.graph, 0, 1) == HomologyGroup{1, {}});
        CHECK(homology(g.graph, 1, 2) == HomologyGroup{0, {}});
        CHECK(homology(g.graph, 2, 3) == HomologyGroup{0, {}});
    }
}
