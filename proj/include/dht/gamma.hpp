#pragma once

#include <string>
#include <vector>

#include "dht/fseq.hpp"
#include "dht/graph.hpp"
#include "dht/semicube.hpp"

namespace dht {

// An abstract simplicial complex over a totally ordered vertex set.
// Input as facets; the downward closure is computed on construction.
struct SimplicialComplex {
    std::vector<std::string> vertex_labels;
    // simplices[d] = sorted list of (d+1)-subsets, each ascending.
    std::vector<std::vector<std::vector<int>>> simplices;

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    int count(int d) const {
        return d >= 0 && d <= dim() ? static_cast<int>(simplices[d].size()) : 0;
    }
    std::vector<int> face_vector() const;
};

SimplicialComplex make_complex(std::vector<std::string> vertex_labels,
                               std::vector<std::vector<int>> facets);

// The standard 6-vertex triangulation of the real projective plane
// (antipodal quotient of the icosahedron): face vector (6, 15, 10).
SimplicialComplex builtin_rp2();

// Cubification: n-cubes are nested pairs of nonempty simplices
// B ⊆ A with |A - B| = n; with A - B = {x_1 < ... < x_n}, face (i, 0)
// drops x_i from A, face (i, 1) adds x_i to B.
SemiCubicalSet cubify(const SimplicialComplex& k);

// A vertex of gamma(X, m): a cube of X together with a reduced
// F-sequence, boundary fully peeled (length 0 or w(1) != 0).
struct GammaVertex {
    int dim;
    int cube;
    FSequence seq;
};

struct GammaResult {
    Graph graph;
    std::vector<GammaVertex> vertices;  // aligned with graph vertex ids
};

// The graph of the semicubical set X at cylinder length m: one vertex
// per canonical (cube, F-sequence) pair, with per-cube images of
// F(m, dim)-edges, deduplicated.  Canonicalization peels a leading
// weight-0 class into face operators applied to the cube.
GammaResult gamma(const SemiCubicalSet& x, int m);

// gamma(cubify(K), m); m = n+1 recovers the n-type of K (cubification
// of a complex is nonsingular).
GammaResult gamma_of_complex(const SimplicialComplex& k, int m);

// Canonical form of one (cube, sequence) pair; exposed for the
// confluence tests.
GammaVertex gamma_canonical(const SemiCubicalSet& x, int dim, int cube, const FSequence& seq);

}  // namespace dht
