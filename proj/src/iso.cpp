#include "dht/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dht {

namespace {

// Iterated refinement: color(v) <- (color(v), sorted multiset of
// neighbor colors), relabelled densely, until the partition stabilizes.
std::vector<int> stable_coloring(const Graph& g) {
    std::vector<int> color(g.size(), 0);
    int classes = 1;
    for (int round = 0; round < g.size(); ++round) {
        std::map<std::pair<int, std::vector<int>>, int> relabel;
        std::vector<int> next(g.size());
        for (int v = 0; v < g.size(); ++v) {
            std::vector<int> sig;
            sig.reserve(g.degree(v));
            for (int w : g.neighbors(v)) sig.push_back(color[w]);
            std::sort(sig.begin(), sig.end());
            auto key = std::make_pair(color[v], std::move(sig));
            auto it = relabel.find(key);
            if (it == relabel.end())
                it = relabel.emplace(std::move(key), static_cast<int>(relabel.size())).first;
            next[v] = it->second;
        }
        int nc = static_cast<int>(relabel.size());
        color.swap(next);
        if (nc == classes) break;
        classes = nc;
    }
    return color;
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> color_g, color_h;
    std::vector<int> map_gh;   // g vertex -> h vertex or -1
    std::vector<char> used_h;
    std::vector<int> order;    // g vertices, rarest color class first

    bool extend(size_t k) {
        if (k == order.size()) return true;
        int v = order[k];
        for (int w = 0; w < h.size(); ++w) {
            if (used_h[w] || color_h[w] != color_g[v]) continue;
            bool ok = true;
            // Mapped neighbors of v must land exactly on the mapped
            // neighbors of w; the counts must agree or some later
            // vertex would be forced onto a used image.
            int mapped_g = 0;
            for (int u : g.neighbors(v)) {
                int mu = map_gh[u];
                if (mu < 0) continue;
                ++mapped_g;
                if (!h.adjacent(w, mu)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                int mapped_h = 0;
                for (int x : h.neighbors(w))
                    if (used_h[x]) ++mapped_h;
                if (mapped_g != mapped_h) ok = false;
            }
            if (!ok) continue;
            map_gh[v] = w;
            used_h[w] = 1;
            if (extend(k + 1)) return true;
            map_gh[v] = -1;
            used_h[w] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<GraphMap> graph_isomorphic(const Graph& g, const Graph& h) {
    if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;

    // Color both graphs jointly (on the disjoint union) so the class
    // ids are comparable across the two sides.
    Graph u = disjoint_union(g, h);
    auto cu = stable_coloring(u);
    std::vector<int> color_g(cu.begin(), cu.begin() + g.size());
    std::vector<int> color_h(cu.begin() + g.size(), cu.end());
    {
        std::vector<int> a = color_g, b = color_h;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    std::map<int, int> class_size;
    for (int c : color_g) ++class_size[c];
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto ka = std::make_tuple(class_size[color_g[a]], color_g[a], a);
        auto kb = std::make_tuple(class_size[color_g[b]], color_g[b], b);
        return ka < kb;
    });

    IsoSearch s{g, h, std::move(color_g), std::move(color_h),
                std::vector<int>(g.size(), -1), std::vector<char>(h.size(), 0),
                std::move(order)};
    if (!s.extend(0)) return std::nullopt;
    return GraphMap{g, h, std::move(s.map_gh)};
}

bool is_graph_isomorphism(const GraphMap& f) {
    if (!f.is_valid()) return false;
    if (f.source.size() != f.target.size()) return false;
    std::vector<char> hit(f.target.size(), 0);
    for (int v : f.assignment) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    if (f.source.edge_count() != f.target.edge_count()) return false;
    // Bijective, edge-preserving, equal edge counts: edge-reflecting
    // follows, so the inverse is a graph map too.
    return true;
}

}  // namespace dht
