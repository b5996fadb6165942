#include "dht/semicube.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "dht/cube_maps.hpp"

#include "json.hpp"

namespace dht {

int SemiCubicalSet::face(int d, int cube, int i, int eps) const {
    if (d < 1 || d > dim() || cube < 0 || cube >= counts_[d] || i < 1 || i > d ||
        (eps != 0 && eps != 1))
        throw std::out_of_range("SemiCubicalSet::face: bad arguments");
    int f = faces_[d][static_cast<size_t>(cube) * 2 * d + 2 * (i - 1) + eps];
    if (f < 0) throw std::logic_error("SemiCubicalSet::face: face not set");
    return f;
}

int SemiCubicalSet::add_cube(int d, std::string name) {
    if (d < 0) throw std::invalid_argument("add_cube: negative dimension");
    while (dim() < d) {
        counts_.push_back(0);
        faces_.emplace_back();
        names_.emplace_back();
    }
    faces_[d].resize(faces_[d].size() + 2 * d, -1);
    names_[d].push_back(std::move(name));
    return counts_[d]++;
}

void SemiCubicalSet::set_face(int d, int cube, int i, int eps, int target) {
    if (d < 1 || d > dim() || cube < 0 || cube >= counts_[d] || i < 1 || i > d ||
        (eps != 0 && eps != 1) || target < 0 || target >= counts_[d - 1])
        throw std::out_of_range("set_face: bad arguments");
    faces_[d][static_cast<size_t>(cube) * 2 * d + 2 * (i - 1) + eps] = target;
}

bool SemiCubicalSet::faces_valid() const {
    for (int d = 1; d <= dim(); ++d)
        for (int c = 0; c < counts_[d]; ++c)
            for (int i = 1; i <= d; ++i)
                for (int eps = 0; eps < 2; ++eps) {
                    int f = faces_[d][static_cast<size_t>(c) * 2 * d + 2 * (i - 1) + eps];
                    if (f < 0 || f >= counts_[d - 1]) return false;
                }
    for (int d = 2; d <= dim(); ++d)
        for (int c = 0; c < counts_[d]; ++c)
            for (int i = 1; i <= d - 1; ++i)
                for (int j = 1; j <= i; ++j)
                    for (int e = 0; e < 2; ++e)
                        for (int e2 = 0; e2 < 2; ++e2)
                            if (face(d - 1, face(d, c, j, e2), i, e) !=
                                face(d - 1, face(d, c, i + 1, e), j, e2))
                                return false;
    return true;
}

void SemiCubicalSet::finalize() {
    if (!faces_valid()) throw std::logic_error("SemiCubicalSet: face identity violated");
}

bool SemiCubicalMap::is_valid() const {
    if (static_cast<int>(level.size()) <= source.dim()) return false;
    for (int d = 0; d <= source.dim(); ++d) {
        if (static_cast<int>(level[d].size()) != source.count(d)) return false;
        for (int c = 0; c < source.count(d); ++c)
            if (level[d][c] < 0 || level[d][c] >= target.count(d)) return false;
    }
    for (int d = 1; d <= source.dim(); ++d)
        for (int c = 0; c < source.count(d); ++c)
            for (int i = 1; i <= d; ++i)
                for (int eps = 0; eps < 2; ++eps)
                    if (level[d - 1][source.face(d, c, i, eps)] !=
                        target.face(d, level[d][c], i, eps))
                        return false;
    return true;
}

SemiCubicalMap identity_semicubical_map(const SemiCubicalSet& x) {
    std::vector<std::vector<int>> lv(x.dim() + 1);
    for (int d = 0; d <= x.dim(); ++d) {
        lv[d].resize(x.count(d));
        std::iota(lv[d].begin(), lv[d].end(), 0);
    }
    return SemiCubicalMap{x, x, std::move(lv)};
}

namespace {

// Pattern encoding for cells of the representable cube: a string over
// {'0','1','*'} of length n; k stars = a k-cube.
std::vector<std::string> patterns_with_stars(int n, int k) {
    std::vector<std::string> out;
    std::string cur(n, '0');
    // Choose star positions, then 0/1 on the rest, lexicographically.
    std::vector<int> pos(k);
    std::function<void(int, int)> choose = [&](int from, int idx) {
        if (idx == k) {
            int frozen = n - k;
            for (int bits = 0; bits < (1 << frozen); ++bits) {
                std::string pat(n, '?');
                for (int i = 0; i < k; ++i) pat[pos[i]] = '*';
                int b = 0;
                for (int i = 0; i < n; ++i)
                    if (pat[i] == '?') pat[i] = ((bits >> b++) & 1) ? '1' : '0';
                out.push_back(pat);
            }
            return;
        }
        for (int p = from; p < n; ++p) {
            pos[idx] = p;
            choose(p + 1, idx + 1);
        }
    };
    choose(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

SemiCubicalSet build_standard(int n, bool with_top) {
    if (n < 0) throw std::invalid_argument("standard_cube: n must be >= 0");
    SemiCubicalSet x;
    std::vector<std::unordered_map<std::string, int>> index(n + 1);
    for (int k = 0; k <= n; ++k) {
        if (k == n && !with_top && n > 0) break;
        for (const auto& pat : patterns_with_stars(n, k))
            index[k].emplace(pat, x.add_cube(k, pat));
    }
    for (int k = 1; k <= n; ++k) {
        for (auto& [pat, id] : index[k]) {
            int star = 0;
            for (int p = 0; p < n; ++p) {
                if (pat[p] != '*') continue;
                ++star;  // this is the star-th free coordinate (1-based)
                for (int eps = 0; eps < 2; ++eps) {
                    std::string sub = pat;
                    sub[p] = eps ? '1' : '0';
                    x.set_face(k, id, star, eps, index[k - 1].at(sub));
                }
            }
        }
    }
    x.finalize();
    return x;
}

}  // namespace

SemiCubicalSet standard_cube(int n) { return build_standard(n, true); }

SemiCubicalSet standard_boundary(int n) { return build_standard(n, false); }

SemiCubicalSet skeleton(const SemiCubicalSet& x, int n) {
    if (n < -1) throw std::invalid_argument("skeleton: n must be >= -1");
    SemiCubicalSet y;
    for (int d = 0; d <= std::min(n, x.dim()); ++d)
        for (int c = 0; c < x.count(d); ++c) y.add_cube(d, x.name(d, c));
    for (int d = 1; d <= std::min(n, x.dim()); ++d)
        for (int c = 0; c < x.count(d); ++c)
            for (int i = 1; i <= d; ++i)
                for (int eps = 0; eps < 2; ++eps) y.set_face(d, c, i, eps, x.face(d, c, i, eps));
    y.finalize();
    return y;
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

SemiCubicalSet pushout_semicubical(const SemiCubicalMap& f, const SemiCubicalMap& g) {
    if (!f.is_valid() || !g.is_valid())
        throw std::invalid_argument("pushout_semicubical: malformed input map");
    const SemiCubicalSet& A = f.source;
    const SemiCubicalSet& B = f.target;
    const SemiCubicalSet& C = g.target;
    int top = std::max(B.dim(), C.dim());

    SemiCubicalSet out;
    std::vector<std::vector<int>> clsB(top + 1), clsC(top + 1);
    for (int d = 0; d <= top; ++d) {
        int nb = B.count(d), nc = C.count(d);
        UnionFind uf(nb + nc);
        if (d <= A.dim())
            for (int a = 0; a < A.count(d); ++a) uf.unite(f.apply(d, a), nb + g.apply(d, a));
        std::vector<int> new_id(nb + nc, -1);
        clsB[d].resize(nb);
        clsC[d].resize(nc);
        for (int i = 0; i < nb + nc; ++i) {
            int r = uf.find(i);
            if (new_id[r] < 0) {
                std::string nm = r < nb ? "B." + B.name(d, r) : "C." + C.name(d, r - nb);
                new_id[r] = out.add_cube(d, nm);
            }
            (i < nb ? clsB[d][i] : clsC[d][i - nb]) = new_id[r];
        }
    }
    for (int d = 1; d <= top; ++d) {
        for (int c = 0; c < B.count(d); ++c)
            for (int i = 1; i <= d; ++i)
                for (int eps = 0; eps < 2; ++eps)
                    out.set_face(d, clsB[d][c], i, eps, clsB[d - 1][B.face(d, c, i, eps)]);
        for (int c = 0; c < C.count(d); ++c)
            for (int i = 1; i <= d; ++i)
                for (int eps = 0; eps < 2; ++eps)
                    out.set_face(d, clsC[d][c], i, eps, clsC[d - 1][C.face(d, c, i, eps)]);
    }
    out.finalize();
    return out;
}

SemiCubicalSet disjoint_union(const SemiCubicalSet& x, const SemiCubicalSet& y) {
    SemiCubicalSet out;
    int top = std::max(x.dim(), y.dim());
    std::vector<std::vector<int>> xid(top + 1), yid(top + 1);
    for (int d = 0; d <= top; ++d) {
        xid[d].resize(x.count(d));
        yid[d].resize(y.count(d));
        for (int c = 0; c < x.count(d); ++c) xid[d][c] = out.add_cube(d, "L." + x.name(d, c));
        for (int c = 0; c < y.count(d); ++c) yid[d][c] = out.add_cube(d, "R." + y.name(d, c));
    }
    for (int d = 1; d <= top; ++d) {
        for (int c = 0; c < x.count(d); ++c)
            for (int i = 1; i <= d; ++i)
                for (int eps = 0; eps < 2; ++eps)
                    out.set_face(d, xid[d][c], i, eps, xid[d - 1][x.face(d, c, i, eps)]);
        for (int c = 0; c < y.count(d); ++c)
            for (int i = 1; i <= d; ++i)
                for (int eps = 0; eps < 2; ++eps)
                    out.set_face(d, yid[d][c], i, eps, yid[d - 1][y.face(d, c, i, eps)]);
    }
    out.finalize();
    return out;
}

SemiCubicalSet nerve_cube_sets(const Graph& g, int max_dim, int m) {
    if (max_dim < 0) throw std::invalid_argument("nerve_cube_sets: max_dim must be >= 0");
    SemiCubicalSet x;
    std::vector<std::vector<std::vector<int>>> cubes(max_dim + 1);
    std::vector<std::unordered_map<std::vector<int>, int, VecHash>> index(max_dim + 1);
    for (int d = 0; d <= max_dim; ++d) {
        cubes[d] = enumerate_cube_maps(g, d, m);
        for (size_t i = 0; i < cubes[d].size(); ++i) {
            std::string nm = "f" + std::to_string(d) + "." + std::to_string(i);
            index[d].emplace(cubes[d][i], x.add_cube(d, std::move(nm)));
        }
    }
    for (int d = 1; d <= max_dim; ++d)
        for (size_t c = 0; c < cubes[d].size(); ++c)
            for (int i = 1; i <= d; ++i)
                for (int eps = 0; eps < 2; ++eps) {
                    auto fv = cube_map_face(cubes[d][c], d, m, i, eps);
                    x.set_face(d, static_cast<int>(c), i, eps, index[d - 1].at(fv));
                }
    x.finalize();
    return x;
}

std::string semicubical_to_json(const SemiCubicalSet& x) {
    nlohmann::json j;
    j["dims"] = x.dim();
    std::vector<int> counts;
    for (int d = 0; d <= x.dim(); ++d) counts.push_back(x.count(d));
    j["cubes"] = counts;
    nlohmann::json faces = nlohmann::json::object();
    for (int d = 1; d <= x.dim(); ++d) {
        nlohmann::json dim_faces = nlohmann::json::array();
        for (int c = 0; c < x.count(d); ++c) {
            nlohmann::json row = nlohmann::json::array();
            for (int i = 1; i <= d; ++i)
                for (int eps = 0; eps < 2; ++eps) row.push_back(x.face(d, c, i, eps));
            dim_faces.push_back(row);
        }
        faces[std::to_string(d)] = dim_faces;
    }
    j["faces"] = faces;
    return j.dump(2);
}

}  // namespace dht
