#include "dht/cylinder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "dht/cube_maps.hpp"

namespace dht {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Shared bookkeeping for the cylinder quotient.  Disjoint-union ids:
// B first, then A x {0..m} (level-major), then C.
struct CylGlue {
    const Graph& A;
    const Graph& B;
    const Graph& C;
    int m;
    int nb, na, nc;
    UnionFind uf;
    std::vector<int> cls;     // union id -> vertex of the quotient
    Graph quotient;

    static int union_size(const GraphMap& f, const GraphMap& g, int m) {
        if (!(f.source == g.source))
            throw std::invalid_argument("double_mapping_cylinder: maps must share their source");
        if (m < 0) throw std::invalid_argument("double_mapping_cylinder: m must be >= 0");
        return f.target.size() + f.source.size() * (m + 1) + g.target.size();
    }

    CylGlue(const GraphMap& f, const GraphMap& g, int m_)
        : A(f.source), B(f.target), C(g.target), m(m_),
          nb(B.size()), na(A.size()), nc(C.size()),
          uf(union_size(f, g, m_)) {
        for (int v = 0; v < na; ++v) {
            uf.unite(level_id(v, 0), f.apply(v));
            uf.unite(level_id(v, m), nb + na * (m + 1) + g.apply(v));
        }
        build();
    }

    int level_id(int v, int t) const { return nb + t * na + v; }
    int c_id(int y) const { return nb + na * (m + 1) + y; }

    std::string member_label(int i) const {
        if (i < nb) return "B." + B.label(i);
        if (i < nb + na * (m + 1)) {
            int t = (i - nb) / na, v = (i - nb) % na;
            return "A." + A.label(v) + "@" + std::to_string(t);
        }
        return "C." + C.label(i - nb - na * (m + 1));
    }

    void build() {
        int total = nb + na * (m + 1) + nc;
        std::vector<std::string> rep(total);
        for (int i = 0; i < total; ++i) {
            int r = uf.find(i);
            std::string lab = member_label(i);
            if (rep[r].empty() || lab < rep[r]) rep[r] = lab;
        }
        std::map<std::string, int> order;
        for (int i = 0; i < total; ++i)
            if (uf.find(i) == i) order.emplace(rep[i], 0);
        for (auto& [lab, id] : order) id = quotient.add_vertex(lab);
        cls.resize(total);
        for (int i = 0; i < total; ++i) cls[i] = order.at(rep[uf.find(i)]);

        for (auto [u, v] : B.edges()) quotient.add_edge(cls[u], cls[v]);
        for (auto [u, v] : C.edges()) quotient.add_edge(cls[c_id(u)], cls[c_id(v)]);
        // Edges of A□I_m: horizontal within a level, vertical between
        // consecutive levels.
        for (int t = 0; t <= m; ++t)
            for (auto [u, v] : A.edges())
                quotient.add_edge(cls[level_id(u, t)], cls[level_id(v, t)]);
        for (int t = 0; t < m; ++t)
            for (int v = 0; v < na; ++v)
                quotient.add_edge(cls[level_id(v, t)], cls[level_id(v, t + 1)]);
    }
};

}  // namespace

CylinderResult double_mapping_cylinder(const GraphMap& f, const GraphMap& g, int m) {
    CylGlue glue(f, g, m);

    std::vector<int> ell0(glue.nb), r0(glue.nc);
    for (int x = 0; x < glue.nb; ++x) ell0[x] = glue.cls[x];
    for (int y = 0; y < glue.nc; ++y) r0[y] = glue.cls[glue.c_id(y)];

    BoxProduct box = box_product(f.source, interval(m));
    std::vector<int> quot(box.graph.size());
    for (int i = 0; i < box.graph.size(); ++i)
        quot[i] = glue.cls[glue.level_id(box.pi1.apply(i), box.pi2.apply(i))];

    return CylinderResult{glue.quotient,
                          GraphMap{f.target, glue.quotient, std::move(ell0)},
                          GraphMap{g.target, glue.quotient, std::move(r0)},
                          GraphMap{box.graph, glue.quotient, std::move(quot)}};
}

GraphMap ell_k(const GraphMap& f, const GraphMap& g, int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("ell_k: need 0 <= k <= m");
    // Cyl_0(f, id) is B itself; return the structure map from B so the
    // retraction identity sigma(f) . ell_0 = id_B holds on the nose.
    if (k == 0) return double_mapping_cylinder(f, g, m).ell0;
    CylinderResult src = double_mapping_cylinder(f, identity_map(f.source), k);
    CylGlue tgt(f, g, m);
    // Send B to B and level t to level t; the source's C-side is a copy
    // of A sitting at level k.
    const Graph& A = f.source;
    const Graph& B = f.target;
    std::vector<int> assign(src.graph.size(), -1);
    for (int x = 0; x < B.size(); ++x) assign[src.ell0.apply(x)] = tgt.cls[x];
    for (int v = 0; v < A.size(); ++v)
        for (int t = 0; t <= k; ++t) {
            int s = src.cyl_quotient.apply(v * (k + 1) + t);
            assign[s] = tgt.cls[tgt.level_id(v, t)];
        }
    for (int v = 0; v < A.size(); ++v) assign[src.r0.apply(v)] = tgt.cls[tgt.level_id(v, k)];
    return GraphMap{src.graph, tgt.quotient, std::move(assign)};
}

GraphMap r_k(const GraphMap& f, const GraphMap& g, int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("r_k: need 0 <= k <= m");
    if (k == 0) return double_mapping_cylinder(f, g, m).r0;
    CylinderResult src = double_mapping_cylinder(identity_map(g.source), g, k);
    CylGlue tgt(f, g, m);
    const Graph& A = g.source;
    const Graph& C = g.target;
    std::vector<int> assign(src.graph.size(), -1);
    for (int y = 0; y < C.size(); ++y) assign[src.r0.apply(y)] = tgt.cls[tgt.c_id(y)];
    for (int v = 0; v < A.size(); ++v)
        for (int t = 0; t <= k; ++t) {
            int s = src.cyl_quotient.apply(v * (k + 1) + t);
            assign[s] = tgt.cls[tgt.level_id(v, t + m - k)];
        }
    for (int v = 0; v < A.size(); ++v) assign[src.ell0.apply(v)] = tgt.cls[tgt.level_id(v, m - k)];
    return GraphMap{src.graph, tgt.quotient, std::move(assign)};
}

GraphMap sigma_retraction(const GraphMap& f, int m) {
    CylinderResult src = double_mapping_cylinder(f, identity_map(f.source), m);
    const Graph& A = f.source;
    const Graph& B = f.target;
    std::vector<int> assign(src.graph.size(), -1);
    for (int v = 0; v < A.size(); ++v)
        for (int t = 0; t <= m; ++t)
            assign[src.cyl_quotient.apply(v * (m + 1) + t)] = f.apply(v);
    for (int x = 0; x < B.size(); ++x) assign[src.ell0.apply(x)] = x;
    return GraphMap{src.graph, B, std::move(assign)};
}

namespace {

GraphMap terminal_map(const Graph& g) {
    Graph pt = interval(0);
    return GraphMap{g, pt, std::vector<int>(g.size(), 0)};
}

}  // namespace

Graph suspension(const Graph& g, int m) {
    if (m < 1) throw std::invalid_argument("suspension: m must be >= 1");
    return double_mapping_cylinder(terminal_map(g), terminal_map(g), m).graph;
}

Graph cone(const Graph& g, int m) {
    if (m < 1) throw std::invalid_argument("cone: m must be >= 1");
    return double_mapping_cylinder(identity_map(g), terminal_map(g), m).graph;
}

namespace {

// Subgraph of cube(m, n) on the wall vertices passing `keep`, with the
// wall edge rule: an edge survives iff some coordinate is pinned to the
// same wall on both ends.
Graph wall_subgraph(int m, int n, const std::function<bool(const std::vector<int>&)>& keep) {
    Graph q = cube(m, n);
    CubeLattice lat(m, n);
    std::vector<int> new_id(q.size(), -1);
    Graph b;
    std::vector<std::vector<int>> coords;
    for (long long p = 0; p < lat.points; ++p) {
        auto x = lat.coords(p);
        bool wall = std::any_of(x.begin(), x.end(), [&](int c) { return c == 0 || c == m; });
        if (wall && keep(x)) {
            new_id[p] = b.size();
            b.add_vertex(q.label(static_cast<int>(p)));
            coords.push_back(std::move(x));
        }
    }
    for (long long p = 0; p < lat.points; ++p) {
        if (new_id[p] < 0) continue;
        const auto& x = coords[new_id[p]];
        for (int w : q.neighbors(static_cast<int>(p))) {
            if (w <= p || new_id[w] < 0) continue;
            const auto& y = coords[new_id[w]];
            for (int i = 0; i < n; ++i)
                if ((x[i] == 0 && y[i] == 0) || (x[i] == m && y[i] == m)) {
                    b.add_edge(new_id[p], new_id[w]);
                    break;
                }
        }
    }
    return b;
}

}  // namespace

Graph cube_boundary(int m, int n) {
    if (n == 0) return Graph{};
    return wall_subgraph(m, n, [](const std::vector<int>&) { return true; });
}

Graph open_box(int m, int n) {
    if (n < 1) throw std::invalid_argument("open_box: n must be >= 1");
    return wall_subgraph(m, n, [&](const std::vector<int>& x) {
        if (x[n - 1] != m) return true;
        for (int i = 0; i + 1 < n; ++i)
            if (x[i] == 0 || x[i] == m) return true;
        return false;
    });
}

GraphMap pi_contract(const GraphMap& f, const GraphMap& g, int p, int q1, int q1p, int q2,
                     int q2p) {
    if (p < 0 || q1 < 0 || q1p < 0 || q2 < 0 || q2p < 0)
        throw std::invalid_argument("pi_contract: parameters must be >= 0");
    const int m_src = p + q1 + q1p + q2 + q2p;
    const int m_tgt = p + q1 + q2;
    CylGlue src(f, g, m_src);
    CylGlue tgt(f, g, m_tgt);
    auto pi = [&](int t) {
        if (t <= q1p) return 0;
        if (t >= p + q1 + q1p + q2) return m_tgt;
        return t - q1p;
    };
    std::vector<int> assign(src.quotient.size(), -1);
    for (int x = 0; x < src.nb; ++x) assign[src.cls[x]] = tgt.cls[x];
    for (int y = 0; y < src.nc; ++y) assign[src.cls[src.c_id(y)]] = tgt.cls[tgt.c_id(y)];
    for (int v = 0; v < src.na; ++v)
        for (int t = 0; t <= m_src; ++t)
            assign[src.cls[src.level_id(v, t)]] = tgt.cls[tgt.level_id(v, pi(t))];
    return GraphMap{src.quotient, tgt.quotient, std::move(assign)};
}

SkeletalReport skeletal_pushout_report(const GraphSquare& sq, int n) {
    if (!sq.commutes()) throw std::invalid_argument("is_n_skeletal_pushout: square does not commute");
    const Graph& G = sq.gh.source;
    const Graph& H = sq.gh.target;
    const Graph& K = sq.gk.target;
    const Graph& L = sq.hl.target;

    auto describe = [&](const std::vector<int>& cube) {
        std::string out = "[";
        for (size_t i = 0; i < cube.size(); ++i) {
            if (i) out += ",";
            out += L.label(cube[i]);
        }
        return out + "]";
    };

    for (int k = 0; k <= n; ++k) {
        auto SG = enumerate_cube_maps(G, k, 1);
        auto SH = enumerate_cube_maps(H, k, 1);
        auto SK = enumerate_cube_maps(K, k, 1);
        auto SL = enumerate_cube_maps(L, k, 1);

        std::unordered_map<std::vector<int>, int, VecHash> idxH, idxK, idxL;
        for (size_t i = 0; i < SH.size(); ++i) idxH.emplace(SH[i], static_cast<int>(i));
        for (size_t i = 0; i < SK.size(); ++i) idxK.emplace(SK[i], static_cast<int>(i));
        for (size_t i = 0; i < SL.size(); ++i) idxL.emplace(SL[i], static_cast<int>(i));

        auto post = [](const std::vector<int>& cube, const GraphMap& f) {
            std::vector<int> out(cube.size());
            for (size_t i = 0; i < cube.size(); ++i) out[i] = f.apply(cube[i]);
            return out;
        };

        const int nh = static_cast<int>(SH.size());
        UnionFind uf(nh + static_cast<int>(SK.size()));
        for (const auto& c : SG) {
            int ih = idxH.at(post(c, sq.gh));
            int ik = idxK.at(post(c, sq.gk));
            uf.unite(ih, nh + ik);
        }
        // The canonical map to Graph(Q_1^k, L) must be a bijection.
        std::unordered_map<int, int> image;     // class root -> L-cube
        std::unordered_map<int, int> hit_by;    // L-cube -> class root
        std::unordered_set<int> covered;
        auto record = [&](int root, int lv) -> bool {
            image.emplace(root, lv);
            covered.insert(lv);
            auto [it, fresh] = hit_by.emplace(lv, root);
            return fresh || it->second == root;
        };
        for (size_t i = 0; i < SH.size(); ++i) {
            int root = uf.find(static_cast<int>(i));
            int lv = idxL.at(post(SH[i], sq.hl));
            if (!record(root, lv))
                return SkeletalReport{false, k,
                                      "cube " + describe(SL[lv]) + " of L has two preimage classes"};
        }
        for (size_t i = 0; i < SK.size(); ++i) {
            int root = uf.find(nh + static_cast<int>(i));
            int lv = idxL.at(post(SK[i], sq.kl));
            if (!record(root, lv))
                return SkeletalReport{false, k,
                                      "cube " + describe(SL[lv]) + " of L has two preimage classes"};
        }
        if (covered.size() != SL.size()) {
            for (size_t i = 0; i < SL.size(); ++i)
                if (!covered.count(static_cast<int>(i)))
                    return SkeletalReport{false, k, "cube " + describe(SL[i]) +
                                                        " of L factors through neither leg"};
        }
    }
    return SkeletalReport{};
}

bool is_n_skeletal_pushout(const GraphSquare& sq, int n) {
    return skeletal_pushout_report(sq, n).ok;
}

GraphSquare cover_square(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<char> in_a(g.size(), 0), in_b(g.size(), 0);
    for (int v : a) in_a[v] = 1;
    for (int v : b) in_b[v] = 1;
    std::vector<int> both;
    for (int v = 0; v < g.size(); ++v)
        if (in_a[v] && in_b[v]) both.push_back(v);

    Graph GA = induced_subgraph(g, a);
    Graph GB = induced_subgraph(g, b);
    Graph GI = induced_subgraph(g, both);

    auto embed = [&](const Graph& sub, const Graph& sup) {
        std::vector<int> assign(sub.size());
        for (int v = 0; v < sub.size(); ++v) assign[v] = *sup.index_of(sub.label(v));
        return GraphMap{sub, sup, std::move(assign)};
    };
    return GraphSquare{embed(GI, GA), embed(GI, GB), embed(GA, g), embed(GB, g)};
}

bool distance_criterion(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                        int n) {
    std::vector<char> in_a(g.size(), 0), in_b(g.size(), 0);
    for (int v : a) in_a[v] = 1;
    for (int v : b) in_b[v] = 1;
    for (int v = 0; v < g.size(); ++v)
        if (!in_a[v] && !in_b[v])
            throw std::invalid_argument("distance_criterion: A and B must cover V(G)");
    for (int v = 0; v < g.size(); ++v) {
        if (in_a[v]) continue;
        auto dist = bfs_distances(g, v);
        for (int w = 0; w < g.size(); ++w)
            if (!in_b[w] && dist[w] >= 0 && dist[w] < n + 1) return false;
    }
    return true;
}

}  // namespace dht
