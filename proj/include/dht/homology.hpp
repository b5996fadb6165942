#pragma once

#include <string>
#include <vector>

#include "dht/graph.hpp"
#include "dht/snf.hpp"

namespace dht {

enum class BoundarySign {
    PerFaceIndex,  // (-1)^i on the i-th pair of faces (the default)
    PerDimension,  // (-1)^k on every face pair of a k-cube
};

// The normalized chain complex of a graph: in dimension k, the free
// Z-module on cube maps Q_m^k -> g that depend on every coordinate,
// with boundary the alternating sum of faces (degenerate faces vanish
// in the quotient).  dd = 0 is asserted at construction.
struct ChainComplex {
    int m = 1;
    int max_dim = 0;
    BoundarySign sign = BoundarySign::PerFaceIndex;
    std::vector<long long> total_cubes;                 // all cube maps per dim
    std::vector<std::vector<std::vector<int>>> basis;   // non-degenerate maps per dim
    std::vector<SparseIntMatrix> boundary;              // boundary[k]: C_k -> C_{k-1}

    long long basis_size(int k) const {
        return k >= 0 && k <= max_dim ? static_cast<long long>(basis[k].size()) : 0;
    }
};

ChainComplex chain_complex(const Graph& g, int max_dim, int m = 1,
                           BoundarySign sign = BoundarySign::PerFaceIndex);

struct HomologyGroup {
    long long rank = 0;
    std::vector<long long> torsion;  // invariant factors > 1, divisibility order

    bool operator==(const HomologyGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
    std::string to_text() const;  // "Z^b (+) Z/d1 (+) ..."
};

// H_k of the complex: rank = nullity(d_k) - rank(d_{k+1}); torsion =
// invariant factors of d_{k+1} exceeding 1.  Requires k+1 <= max_dim.
HomologyGroup homology_of_complex(const ChainComplex& cc, int k);
HomologyGroup homology(const Graph& g, int k, int max_dim);

// Dimension of H_k with coefficients in F_p.
long long homology_mod_p_of_complex(const ChainComplex& cc, int k, long long p);
long long homology_mod_p(const Graph& g, int k, long long p, int max_dim);

// Enumeration-cost estimate |V| * (max closed degree)^(2^k - 1), the
// budget guard exposed by the CLI.
double estimate_cube_count(const Graph& g, int dim);

}  // namespace dht
