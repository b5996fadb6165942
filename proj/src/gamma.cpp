#include "dht/gamma.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dht {

std::vector<int> SimplicialComplex::face_vector() const {
    std::vector<int> fv;
    for (int d = 0; d <= dim(); ++d) fv.push_back(count(d));
    return fv;
}

SimplicialComplex make_complex(std::vector<std::string> vertex_labels,
                               std::vector<std::vector<int>> facets) {
    SimplicialComplex k;
    k.vertex_labels = std::move(vertex_labels);
    const int nv = static_cast<int>(k.vertex_labels.size());
    std::set<std::vector<int>> closed;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) throw std::invalid_argument("make_complex: empty facet");
        for (int v : f)
            if (v < 0 || v >= nv) throw std::invalid_argument("make_complex: unknown vertex");
        // Downward closure: every nonempty subset.
        int sz = static_cast<int>(f.size());
        for (int bits = 1; bits < (1 << sz); ++bits) {
            std::vector<int> sub;
            for (int i = 0; i < sz; ++i)
                if ((bits >> i) & 1) sub.push_back(f[i]);
            closed.insert(std::move(sub));
        }
    }
    for (const auto& s : closed) {
        int d = static_cast<int>(s.size()) - 1;
        while (k.dim() < d) k.simplices.emplace_back();
        k.simplices[d].push_back(s);
    }
    for (auto& level : k.simplices) std::sort(level.begin(), level.end());
    return k;
}

SimplicialComplex builtin_rp2() {
    std::vector<std::vector<int>> facets = {
        {0, 1, 2}, {0, 2, 3}, {0, 1, 5}, {0, 4, 5}, {0, 3, 4},
        {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5},
    };
    return make_complex({"0", "1", "2", "3", "4", "5"}, std::move(facets));
}

namespace {

std::string simplex_name(const SimplicialComplex& k, const std::vector<int>& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += k.vertex_labels[s[i]];
    }
    return out;
}

}  // namespace

SemiCubicalSet cubify(const SimplicialComplex& k) {
    if (k.dim() < 0) throw std::invalid_argument("cubify: empty complex");
    SemiCubicalSet x;
    // n-cubes: pairs (A, B), B ⊆ A nonempty, |A - B| = n.  Ids per
    // dimension follow the sorted (A, B) order.
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::pair<int, int>> id;  // -> (dim, cube)
    std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> by_dim;

    std::vector<std::vector<int>> all;
    for (int d = 0; d <= k.dim(); ++d)
        for (const auto& s : k.simplices[d]) all.push_back(s);

    for (const auto& a : all) {
        int sz = static_cast<int>(a.size());
        for (int bits = 1; bits < (1 << sz); ++bits) {
            std::vector<int> b;
            for (int i = 0; i < sz; ++i)
                if ((bits >> i) & 1) b.push_back(a[i]);
            int n = sz - static_cast<int>(b.size());
            while (static_cast<int>(by_dim.size()) <= n) by_dim.emplace_back();
            by_dim[n].emplace_back(a, b);
        }
    }
    for (auto& level : by_dim) std::sort(level.begin(), level.end());
    for (int d = 0; d < static_cast<int>(by_dim.size()); ++d)
        for (const auto& ab : by_dim[d]) {
            std::string nm = simplex_name(k, ab.first) + "|" + simplex_name(k, ab.second);
            id[ab] = {d, x.add_cube(d, std::move(nm))};
        }

    for (int d = 1; d < static_cast<int>(by_dim.size()); ++d)
        for (const auto& ab : by_dim[d]) {
            const auto& [a, b] = ab;
            std::vector<int> diff;
            std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
            int cube = id[ab].second;
            for (int i = 1; i <= d; ++i) {
                int xi = diff[i - 1];
                std::vector<int> a0;
                std::copy_if(a.begin(), a.end(), std::back_inserter(a0),
                             [&](int v) { return v != xi; });
                x.set_face(d, cube, i, 0, id.at({a0, b}).second);
                std::vector<int> b1 = b;
                b1.insert(std::lower_bound(b1.begin(), b1.end(), xi), xi);
                x.set_face(d, cube, i, 1, id.at({a, b1}).second);
            }
        }
    x.finalize();
    return x;
}

GammaVertex gamma_canonical(const SemiCubicalSet& x, int dim, int cube, const FSequence& seq) {
    GammaVertex v{dim, cube, reduce(seq)};
    while (v.seq.length() >= 1 && v.seq.weight[0] == 0) {
        // Peel the leading weight-0 class into face operators: members
        // descending so each index stays valid as the cube shrinks;
        // sign - applies the 0-face, + the 1-face.
        std::vector<int> members = v.seq.class_members(1);
        std::sort(members.rbegin(), members.rend());
        for (int j : members) {
            int eps = v.seq.sign[j - 1] > 0 ? 1 : 0;
            v.cube = x.face(v.dim, v.cube, j, eps);
            --v.dim;
        }
        // Re-index the remaining sequence over {1..n - |P1|}.
        FSequence rest;
        rest.m = v.seq.m;
        rest.n = v.seq.n - static_cast<int>(members.size());
        rest.weight.assign(v.seq.weight.begin() + 1, v.seq.weight.end());
        for (int j = 1; j <= v.seq.n; ++j) {
            if (v.seq.cls[j - 1] == 1) continue;
            rest.sign.push_back(v.seq.sign[j - 1]);
            rest.cls.push_back(v.seq.cls[j - 1] - 1);
        }
        v.seq = reduce(rest);
    }
    return v;
}

GammaResult gamma(const SemiCubicalSet& x, int m) {
    // Vertices: one per (cube, interior reduced form); those are
    // exactly the canonical pairs.
    std::vector<FGraph> fgs;
    for (int d = 0; d <= x.dim(); ++d) fgs.push_back(f_graph(m, d));

    GammaResult out;
    std::map<std::tuple<int, int, FSequence>, int> index;
    for (int d = 0; d <= x.dim(); ++d) {
        const FGraph& fg = fgs[d];
        for (int c = 0; c < x.count(d); ++c)
            for (int v = 0; v < fg.graph.size(); ++v) {
                if (fg.boundary[v]) continue;
                const FSequence& s = fg.vertex_seq[v];
                int id = out.graph.add_vertex(x.name(d, c) + ":" + to_string(s));
                out.vertices.push_back(GammaVertex{d, c, s});
                index.emplace(std::make_tuple(d, c, s), id);
            }
    }

    auto vertex_id = [&](const GammaVertex& gv) {
        return index.at(std::make_tuple(gv.dim, gv.cube, gv.seq));
    };

    // Edges: per-cube images of F(m, d)-edges, deduplicated.
    for (int d = 0; d <= x.dim(); ++d) {
        const FGraph& fg = fgs[d];
        auto fedges = fg.graph.edges();
        for (int c = 0; c < x.count(d); ++c)
            for (auto [u, v] : fedges) {
                GammaVertex a = gamma_canonical(x, d, c, fg.vertex_seq[u]);
                GammaVertex b = gamma_canonical(x, d, c, fg.vertex_seq[v]);
                int ia = vertex_id(a), ib = vertex_id(b);
                if (ia != ib) out.graph.add_edge(ia, ib);
            }
    }
    return out;
}

GammaResult gamma_of_complex(const SimplicialComplex& k, int m) {
    return gamma(cubify(k), m);
}

}  // namespace dht
