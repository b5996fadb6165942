#include "dht/cube_maps.hpp"

#include <stdexcept>

namespace dht {

CubeLattice::CubeLattice(int m_, int n_) : m(m_), n(n_), stride(n_, 1) {
    if (m < 0 || n < 0) throw std::invalid_argument("CubeLattice: m, n must be >= 0");
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * (m + 1);
    for (int i = 0; i < n; ++i) points *= (m + 1);
}

std::vector<int> CubeLattice::coords(long long p) const {
    std::vector<int> x(n);
    for (int i = n - 1; i >= 0; --i) {
        x[i] = static_cast<int>(p % (m + 1));
        p /= (m + 1);
    }
    return x;
}

long long CubeLattice::index(const std::vector<int>& x) const {
    long long p = 0;
    for (int i = 0; i < n; ++i) p += x[i] * stride[i];
    return p;
}

namespace {

// Candidate masks over 64-bit words; bit v set = vertex v still allowed.
struct Masks {
    int words;
    std::vector<uint64_t> closed;  // closed neighborhood per vertex

    explicit Masks(const Graph& g) : words((g.size() + 63) / 64), closed(words * (size_t)g.size(), 0) {
        for (int v = 0; v < g.size(); ++v) {
            set(row(v), v);
            for (int w : g.neighbors(v)) set(row(v), w);
        }
    }
    uint64_t* row(int v) { return closed.data() + (size_t)v * words; }
    const uint64_t* row(int v) const { return closed.data() + (size_t)v * words; }
    static void set(uint64_t* r, int v) { r[v >> 6] |= 1ull << (v & 63); }
};

}  // namespace

void for_each_cube_map(const Graph& g, int n, int m,
                       const std::function<void(const std::vector<int>&)>& cb) {
    if (g.size() == 0) return;
    CubeLattice lat(m, n);
    const long long P = lat.points;
    if (n == 0) {
        std::vector<int> a(1);
        for (int v = 0; v < g.size(); ++v) {
            a[0] = v;
            cb(a);
        }
        return;
    }

    // Predecessors of lattice point p: decrement each nonzero coordinate.
    std::vector<std::vector<long long>> preds(P);
    for (long long p = 0; p < P; ++p) {
        auto x = lat.coords(p);
        for (int i = 0; i < n; ++i)
            if (x[i] > 0) preds[p].push_back(p - lat.stride[i]);
    }

    Masks mk(g);
    const int W = mk.words;
    std::vector<uint64_t> cand((size_t)P * W);
    std::vector<int> assign(P, -1);

    // cand for point p = AND of closed neighborhoods of assigned predecessors.
    auto compute_cand = [&](long long p) {
        uint64_t* c = cand.data() + (size_t)p * W;
        if (preds[p].empty()) {
            for (int w = 0; w < W; ++w) c[w] = ~0ull;
            int tail = g.size() & 63;
            if (tail) c[W - 1] = (1ull << tail) - 1;
            return;
        }
        const uint64_t* first = mk.row(assign[preds[p][0]]);
        for (int w = 0; w < W; ++w) c[w] = first[w];
        for (size_t k = 1; k < preds[p].size(); ++k) {
            const uint64_t* r = mk.row(assign[preds[p][k]]);
            for (int w = 0; w < W; ++w) c[w] &= r[w];
        }
    };

    // Iterative backtracking; next[p] = next candidate bit to try at p.
    std::vector<int> next(P, 0);
    long long p = 0;
    compute_cand(0);
    while (p >= 0) {
        uint64_t* c = cand.data() + (size_t)p * W;
        int v = -1;
        int start = next[p];
        for (int w = start >> 6; w < W; ++w) {
            uint64_t bits = c[w];
            if (w == start >> 6) bits &= ~0ull << (start & 63);
            if (bits) {
                v = (w << 6) + __builtin_ctzll(bits);
                break;
            }
        }
        if (v < 0) {
            // Exhausted this point; next[] of the previous point already
            // sits past its last tried candidate.
            next[p] = 0;
            --p;
            continue;
        }
        next[p] = v + 1;
        assign[p] = v;
        if (p + 1 == P) {
            cb(assign);
        } else {
            ++p;
            next[p] = 0;
            compute_cand(p);
        }
    }
}

std::vector<std::vector<int>> enumerate_cube_maps(const Graph& g, int n, int m) {
    std::vector<std::vector<int>> out;
    for_each_cube_map(g, n, m, [&](const std::vector<int>& a) { out.push_back(a); });
    return out;
}

long long count_cube_maps(const Graph& g, int n, int m) {
    long long c = 0;
    for_each_cube_map(g, n, m, [&](const std::vector<int>&) { ++c; });
    return c;
}

bool is_degenerate_cube_map(const std::vector<int>& assign, int n, int m) {
    CubeLattice lat(m, n);
    for (int i = 0; i < n; ++i) {
        bool constant = true;
        for (long long p = 0; p < lat.points && constant; ++p) {
            auto x = lat.coords(p);
            if (x[i] == 0) continue;
            long long base = p - (long long)x[i] * lat.stride[i];
            if (assign[p] != assign[base]) constant = false;
        }
        if (constant) return true;
    }
    return false;
}

std::vector<int> cube_map_face(const std::vector<int>& assign, int n, int m, int i, int eps) {
    if (i < 1 || i > n || (eps != 0 && eps != 1))
        throw std::invalid_argument("cube_map_face: bad face index");
    CubeLattice sub(m, n - 1), lat(m, n);
    std::vector<int> out(sub.points);
    for (long long q = 0; q < sub.points; ++q) {
        auto y = sub.coords(q);
        std::vector<int> x(n);
        for (int j = 0; j < i - 1; ++j) x[j] = y[j];
        x[i - 1] = eps * m;
        for (int j = i; j < n; ++j) x[j] = y[j - 1];
        out[q] = assign[lat.index(x)];
    }
    return out;
}

}  // namespace dht
