#pragma once

#include <string>
#include <vector>

#include "dht/graph.hpp"

namespace dht {

// A semicubical set: graded cube sets with face operators only.
// Cubes in dimension d are dense integers 0..count(d)-1; face (i, eps)
// of a d-cube (i in 1..d, eps in 0/1) lives in dimension d-1.
// Construction runs the face-identity validator.
class SemiCubicalSet {
public:
    int dim() const { return static_cast<int>(counts_.size()) - 1; }
    int count(int d) const {
        return d >= 0 && d <= dim() ? counts_[d] : 0;
    }
    int face(int d, int cube, int i, int eps) const;
    const std::string& name(int d, int cube) const { return names_[d][cube]; }

    // Builder interface; finalize() validates the face identity
    //   x.face(j,e').face(i,e) == x.face(i+1,e).face(j,e')  (j <= i)
    // for every cube and throws on violation.
    int add_cube(int d, std::string name);
    void set_face(int d, int cube, int i, int eps, int target);
    void finalize();

    bool faces_valid() const;

private:
    std::vector<int> counts_;
    std::vector<std::vector<int>> faces_;  // faces_[d][cube*2*d + 2*(i-1) + eps]
    std::vector<std::vector<std::string>> names_;
};

// Dimension-wise functions commuting with all face operators.
struct SemiCubicalMap {
    SemiCubicalSet source;
    SemiCubicalSet target;
    std::vector<std::vector<int>> level;  // level[d][cube]

    int apply(int d, int cube) const { return level[d][cube]; }
    bool is_valid() const;
};

SemiCubicalMap identity_semicubical_map(const SemiCubicalSet& x);

// Representable cube: k-cubes are the patterns freezing n-k of the n
// coordinates to 0 or 1; the face (i, eps) freezes the i-th free slot.
SemiCubicalSet standard_cube(int n);
// Same with the top cell omitted.
SemiCubicalSet standard_boundary(int n);

// Truncation: dimensions above n emptied.  n >= -1.
SemiCubicalSet skeleton(const SemiCubicalSet& x, int n);

// Dimension-wise set pushout of B <-f- A -g-> C with induced faces.
// Malformed input maps surface as a face-identity violation.
SemiCubicalSet pushout_semicubical(const SemiCubicalMap& f, const SemiCubicalMap& g);

SemiCubicalSet disjoint_union(const SemiCubicalSet& x, const SemiCubicalSet& y);

// Face-only part of the m-nerve: dimension-k cubes are the graph maps
// Q_m^k -> g in canonical order; face (i, eps) precomposes with the
// coordinate-freezing embedding.
SemiCubicalSet nerve_cube_sets(const Graph& g, int max_dim, int m = 1);

// Debugging dump (dims, counts, face tables); not a stable format.
std::string semicubical_to_json(const SemiCubicalSet& x);

}  // namespace dht
