#include "dht/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace dht {

int Graph::add_vertex(std::string label) {
    auto it = index_.find(label);
    if (it != index_.end())
        throw std::invalid_argument("duplicate vertex label: " + label);
    int id = static_cast<int>(labels_.size());
    index_.emplace(label, id);
    labels_.push_back(std::move(label));
    adj_.emplace_back();
    return id;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= size() || v >= size())
        throw std::out_of_range("edge endpoint out of range");
    if (u == v) return;
    auto& au = adj_[u];
    auto pos = std::lower_bound(au.begin(), au.end(), v);
    if (pos != au.end() && *pos == v) return;
    au.insert(pos, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++n_edges_;
}

void Graph::add_edge(const std::string& a, const std::string& b) {
    auto u = index_of(a), v = index_of(b);
    if (!u || !v) throw std::invalid_argument("unknown vertex label in edge");
    add_edge(*u, *v);
}

std::optional<int> Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Graph::adjacent(int u, int v) const {
    if (u == v) return true;
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(n_edges_);
    for (int u = 0; u < size(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return labels_ == other.labels_ && adj_ == other.adj_;
}

bool GraphMap::is_valid() const {
    if (static_cast<int>(assignment.size()) != source.size()) return false;
    for (int v : assignment)
        if (v < 0 || v >= target.size()) return false;
    for (auto [u, v] : source.edges())
        if (!target.adjacent(assignment[u], assignment[v])) return false;
    return true;
}

GraphMap identity_map(const Graph& g) {
    std::vector<int> id(g.size());
    std::iota(id.begin(), id.end(), 0);
    return GraphMap{g, g, std::move(id)};
}

GraphMap compose(const GraphMap& second, const GraphMap& first) {
    if (!(first.target == second.source))
        throw std::invalid_argument("compose: middle graphs differ");
    std::vector<int> a(first.assignment.size());
    for (size_t i = 0; i < a.size(); ++i) a[i] = second.assignment[first.assignment[i]];
    return GraphMap{first.source, second.target, std::move(a)};
}

bool same_vertex_function(const GraphMap& a, const GraphMap& b) {
    return a.assignment == b.assignment;
}

bool GraphSquare::commutes() const {
    return same_vertex_function(compose(hl, gh), compose(kl, gk));
}

Graph interval(int m) {
    if (m < 0) throw std::invalid_argument("interval: m must be >= 0");
    Graph g;
    for (int i = 0; i <= m; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < m; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int L) {
    if (L < 3) throw std::invalid_argument("cycle: need L >= 3");
    Graph g;
    for (int i = 0; i < L; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i + 1 < L; ++i) g.add_edge(i, i + 1);
    g.add_edge(L - 1, 0);
    return g;
}

BoxProduct box_product(const Graph& g, const Graph& h) {
    Graph p;
    std::vector<int> pi1, pi2;
    for (int v = 0; v < g.size(); ++v)
        for (int w = 0; w < h.size(); ++w) {
            p.add_vertex("(" + g.label(v) + "," + h.label(w) + ")");
            pi1.push_back(v);
            pi2.push_back(w);
        }
    auto id = [&](int v, int w) { return v * h.size() + w; };
    for (int v = 0; v < g.size(); ++v)
        for (int w = 0; w < h.size(); ++w) {
            for (int w2 : h.neighbors(w))
                if (w2 > w) p.add_edge(id(v, w), id(v, w2));
            for (int v2 : g.neighbors(v))
                if (v2 > v) p.add_edge(id(v, w), id(v2, w));
        }
    return BoxProduct{p, GraphMap{p, g, std::move(pi1)}, GraphMap{p, h, std::move(pi2)}};
}

Graph cube(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("cube: m, n must be >= 0");
    Graph g;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= (m + 1);
    std::vector<int> coord(n, 0);
    for (long long p = 0; p < total; ++p) {
        std::string lab = "(";
        for (int i = 0; i < n; ++i) {
            if (i) lab += ",";
            lab += std::to_string(coord[i]);
        }
        lab += ")";
        g.add_vertex(lab);
        for (int i = n - 1; i >= 0; --i) {
            if (++coord[i] <= m) break;
            coord[i] = 0;
        }
    }
    // Row-major index: first coordinate is most significant.
    std::vector<long long> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * (m + 1);
    std::fill(coord.begin(), coord.end(), 0);
    for (long long p = 0; p < total; ++p) {
        for (int i = 0; i < n; ++i)
            if (coord[i] < m) g.add_edge(static_cast<int>(p), static_cast<int>(p + stride[i]));
        for (int i = n - 1; i >= 0; --i) {
            if (++coord[i] <= m) break;
            coord[i] = 0;
        }
    }
    return g;
}

std::vector<int> bfs_distances(const Graph& g, int v) {
    std::vector<int> dist(g.size(), -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::optional<int> distance(const Graph& g, int v, int w) {
    if (v < 0 || w < 0 || v >= g.size() || w >= g.size())
        throw std::out_of_range("distance: unknown vertex");
    int d = bfs_distances(g, v)[w];
    if (d < 0) return std::nullopt;
    return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> classes;
    std::vector<char> seen(g.size(), 0);
    for (int v = 0; v < g.size(); ++v) {
        if (seen[v]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[v] = 1;
        q.push(v);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        classes.push_back(std::move(comp));
    }
    return classes;
}

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

}  // namespace

PushoutResult pushout(const GraphMap& f, const GraphMap& g) {
    if (!(f.source == g.source))
        throw std::invalid_argument("pushout: maps must share their source");
    const Graph& A = f.source;
    const Graph& B = f.target;
    const Graph& C = g.target;
    const int nb = B.size(), nc = C.size();
    UnionFind uf(nb + nc);
    for (int a = 0; a < A.size(); ++a) uf.unite(f.apply(a), nb + g.apply(a));

    auto member_label = [&](int i) {
        return i < nb ? "B." + B.label(i) : "C." + C.label(i - nb);
    };
    // Representative label per class = lexicographically least member.
    std::vector<std::string> rep(nb + nc);
    for (int i = 0; i < nb + nc; ++i) {
        int r = uf.find(i);
        std::string lab = member_label(i);
        if (rep[r].empty() || lab < rep[r]) rep[r] = lab;
    }
    std::map<std::string, int> order;  // class label -> new id (sorted)
    for (int i = 0; i < nb + nc; ++i)
        if (uf.find(i) == i) order.emplace(rep[i], 0);
    Graph q;
    for (auto& [lab, id] : order) id = q.add_vertex(lab);
    std::vector<int> cls(nb + nc);
    for (int i = 0; i < nb + nc; ++i) cls[i] = order.at(rep[uf.find(i)]);

    for (auto [u, v] : B.edges()) q.add_edge(cls[u], cls[v]);
    for (auto [u, v] : C.edges()) q.add_edge(cls[nb + u], cls[nb + v]);

    std::vector<int> fromB(cls.begin(), cls.begin() + nb);
    std::vector<int> fromC(cls.begin() + nb, cls.end());
    return PushoutResult{q, GraphMap{B, q, std::move(fromB)}, GraphMap{C, q, std::move(fromC)}};
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph u;
    for (int v = 0; v < g.size(); ++v) u.add_vertex("L." + g.label(v));
    for (int v = 0; v < h.size(); ++v) u.add_vertex("R." + h.label(v));
    for (auto [a, b] : g.edges()) u.add_edge(a, b);
    for (auto [a, b] : h.edges()) u.add_edge(g.size() + a, g.size() + b);
    return u;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph s;
    std::unordered_map<int, int> new_id;
    for (int v : verts) {
        new_id.emplace(v, s.size());
        s.add_vertex(g.label(v));
    }
    for (int v : verts)
        for (int w : g.neighbors(v)) {
            auto it = new_id.find(w);
            if (it != new_id.end() && v < w) s.add_edge(new_id[v], it->second);
        }
    return s;
}

}  // namespace dht
