#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dht/graph.hpp"

namespace dht {

// Lattice bookkeeping for Q_m^n.  Points are indexed in row-major
// order: the first coordinate is the most significant digit base m+1.
struct CubeLattice {
    int m = 0;
    int n = 0;
    long long points = 1;
    std::vector<long long> stride;  // stride[i] for coordinate i (0-based)

    CubeLattice(int m_, int n_);
    std::vector<int> coords(long long p) const;
    long long index(const std::vector<int>& x) const;
};

// All graph maps Q_m^n -> g as assignment vectors over the row-major
// lattice, each exactly once, in lexicographic order under g's vertex
// order.  Pruned backtracking: lattice points are filled in row-major
// order and a partial assignment is rejected on the first violated
// adjacency.  No symmetry reduction; completeness is load-bearing for
// the homology pipeline.
std::vector<std::vector<int>> enumerate_cube_maps(const Graph& g, int n, int m);

// Streaming variant; cb receives each assignment vector in canonical
// order.  Used where materializing the full list would be wasteful.
void for_each_cube_map(const Graph& g, int n, int m,
                       const std::function<void(const std::vector<int>&)>& cb);

long long count_cube_maps(const Graph& g, int n, int m);

// A map is degenerate iff it is constant along some coordinate
// direction, i.e. factors through a product projection.
bool is_degenerate_cube_map(const std::vector<int>& assign, int n, int m);

// Assignment vector of the (i, eps)-face (coordinate i in 1..n frozen
// to eps*m), over the row-major lattice of Q_m^{n-1}.
std::vector<int> cube_map_face(const std::vector<int>& assign, int n, int m, int i, int eps);

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace dht
