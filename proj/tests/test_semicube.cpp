#include <random>
#include <stdexcept>

#include "doctest.h"

#include "dht/cube_maps.hpp"
#include "dht/graph.hpp"
#include "dht/semicube.hpp"

using namespace dht;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("standard cubes and boundaries") {
    auto c0 = standard_cube(0);
    CHECK(c0.count(0) == 1);

    auto c2 = standard_cube(2);
    CHECK(c2.count(0) == 4);
    CHECK(c2.count(1) == 4);
    CHECK(c2.count(2) == 1);

    auto b1 = standard_boundary(1);
    CHECK(b1.count(0) == 2);
    CHECK(b1.count(1) == 0);

    for (int n = 0; n <= 5; ++n) {
        auto cn = standard_cube(n);
        for (int k = 0; k <= n; ++k) CHECK(cn.count(k) == binom(n, k) * (1LL << (n - k)));
        CHECK(cn.faces_valid());
    }
}

TEST_CASE("skeleton") {
    auto c2 = standard_cube(2);
    auto empty = skeleton(c2, -1);
    CHECK(empty.dim() == -1);

    auto sk1 = skeleton(c2, 1);
    auto b2 = standard_boundary(2);
    CHECK(sk1.count(0) == b2.count(0));
    CHECK(sk1.count(1) == b2.count(1));
    CHECK(sk1.count(2) == 0);

    auto sk9 = skeleton(c2, 9);
    CHECK(sk9.count(2) == c2.count(2));
}

TEST_CASE("semicubical pushout") {
    SUBCASE("glue a 1-cell to two points") {
        auto b1 = standard_boundary(1);  // two points
        auto c1 = standard_cube(1);
        // The boundary inclusion, matched up by cell name.
        std::vector<std::vector<int>> lv(1);
        lv[0].resize(b1.count(0));
        for (int c = 0; c < b1.count(0); ++c) {
            for (int d = 0; d < c1.count(0); ++d)
                if (c1.name(0, d) == b1.name(0, c)) lv[0][c] = d;
        }
        SemiCubicalMap f{b1, c1, lv};
        CHECK(f.is_valid());

        SemiCubicalSet two_points;
        two_points.add_cube(0, "p");
        two_points.add_cube(0, "q");
        SemiCubicalMap g{b1, two_points, {{0, 1}}};
        CHECK(g.is_valid());

        auto po = pushout_semicubical(f, g);
        CHECK(po.count(0) == 2);
        CHECK(po.count(1) == 1);
        CHECK(po.faces_valid());
    }

    SUBCASE("glue along the identity recovers the cube") {
        auto b2 = standard_boundary(2);
        auto c2 = standard_cube(2);
        std::vector<std::vector<int>> lv(2);
        for (int d = 0; d <= 1; ++d) {
            lv[d].resize(b2.count(d));
            for (int c = 0; c < b2.count(d); ++c)
                for (int e = 0; e < c2.count(d); ++e)
                    if (c2.name(d, e) == b2.name(d, c)) lv[d][c] = e;
        }
        SemiCubicalMap f{b2, c2, lv};
        REQUIRE(f.is_valid());
        auto po = pushout_semicubical(f, identity_semicubical_map(b2));
        CHECK(po.count(0) == c2.count(0));
        CHECK(po.count(1) == c2.count(1));
        CHECK(po.count(2) == 1);
    }

    SUBCASE("cycle glued from L one-cells") {
        // L copies of the 1-cell, endpoints chained in a loop.
        const int L = 5;
        SemiCubicalSet cells;
        for (int i = 0; i < L; ++i) cells.add_cube(0, "s" + std::to_string(i));
        for (int i = 0; i < L; ++i) cells.add_cube(0, "t" + std::to_string(i));
        for (int i = 0; i < L; ++i) {
            int e = cells.add_cube(1, "e" + std::to_string(i));
            cells.set_face(1, e, 1, 0, i);
            cells.set_face(1, e, 1, 1, L + i);
        }
        cells.finalize();
        SemiCubicalSet pts;
        for (int i = 0; i < L; ++i) pts.add_cube(0, "v" + std::to_string(i));
        SemiCubicalSet ends;
        for (int i = 0; i < 2 * L; ++i) ends.add_cube(0, "x" + std::to_string(i));
        std::vector<int> to_cells(2 * L), to_pts(2 * L);
        for (int i = 0; i < 2 * L; ++i) to_cells[i] = i;
        for (int i = 0; i < L; ++i) {
            to_pts[i] = i;                    // source of edge i is vertex i
            to_pts[L + i] = (i + 1) % L;      // target is the next vertex
        }
        SemiCubicalMap f{ends, cells, {to_cells}};
        SemiCubicalMap g{ends, pts, {to_pts}};
        auto cyc = pushout_semicubical(f, g);
        CHECK(cyc.count(0) == L);
        CHECK(cyc.count(1) == L);
    }
}

TEST_CASE("semicubical pushout rejects malformed maps") {
    auto c1 = standard_cube(1);
    // Bogus level assignment that does not commute with faces.
    SemiCubicalMap bad{c1, c1, {{1, 0}, {0}}};
    CHECK(!bad.is_valid());
    CHECK_THROWS_AS(pushout_semicubical(bad, identity_semicubical_map(c1)), std::invalid_argument);
}

TEST_CASE("nerve cube sets") {
    Graph i0 = interval(0);
    auto n0 = nerve_cube_sets(i0, 3);
    for (int d = 0; d <= 3; ++d) CHECK(n0.count(d) == 1);

    Graph i1 = interval(1);
    auto n1 = nerve_cube_sets(i1, 2, 1);
    CHECK(n1.count(0) == 2);
    CHECK(n1.count(1) == 4);
    CHECK(n1.count(2) == 16);
    CHECK(n1.faces_valid());

    Graph c5 = cycle(5);
    auto n5 = nerve_cube_sets(c5, 2);
    CHECK(n5.faces_valid());  // faces of every 2-cube are among the 1-cubes
}

TEST_CASE("nerve is functorial on test triples") {
    Graph c3 = cycle(3);
    Graph c6 = cycle(6);
    // The winding map C6 -> C3.
    GraphMap w{c6, c3, {0, 1, 2, 0, 1, 2}};
    REQUIRE(w.is_valid());
    const int m = 1, max_dim = 2;
    for (int d = 0; d <= max_dim; ++d) {
        auto src = enumerate_cube_maps(c6, d, m);
        for (const auto& f : src) {
            std::vector<int> pf(f.size());
            for (size_t i = 0; i < f.size(); ++i) pf[i] = w.apply(f[i]);
            if (d == 0) continue;
            for (int i = 1; i <= d; ++i)
                for (int eps = 0; eps < 2; ++eps) {
                    // postcompose-then-face equals face-then-postcompose
                    auto a = cube_map_face(pf, d, m, i, eps);
                    auto face = cube_map_face(f, d, m, i, eps);
                    std::vector<int> b(face.size());
                    for (size_t t = 0; t < face.size(); ++t) b[t] = w.apply(face[t]);
                    CHECK(a == b);
                }
        }
    }
}

TEST_CASE("face identity validator rejects scrambled faces") {
    auto c2 = standard_cube(2);
    SemiCubicalSet bad;
    for (int d = 0; d <= 2; ++d)
        for (int c = 0; c < c2.count(d); ++c) bad.add_cube(d, c2.name(d, c));
    for (int d = 1; d <= 2; ++d)
        for (int c = 0; c < c2.count(d); ++c)
            for (int i = 1; i <= d; ++i)
                for (int eps = 0; eps < 2; ++eps) bad.set_face(d, c, i, eps, c2.face(d, c, i, eps));
    // Swap one 2-cube face pair to break the identity.
    int f10 = bad.face(2, 0, 1, 0), f21 = bad.face(2, 0, 2, 1);
    bad.set_face(2, 0, 1, 0, f21);
    bad.set_face(2, 0, 2, 1, f10);
    CHECK(!bad.faces_valid());
    CHECK_THROWS_AS(bad.finalize(), std::logic_error);
}

TEST_CASE("semicubical disjoint union") {
    auto a = standard_cube(1);
    auto b = standard_cube(2);
    auto u = disjoint_union(a, b);
    CHECK(u.count(0) == a.count(0) + b.count(0));
    CHECK(u.count(1) == a.count(1) + b.count(1));
    CHECK(u.count(2) == b.count(2));
    CHECK(u.faces_valid());
}
