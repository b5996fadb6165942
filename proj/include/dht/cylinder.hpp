#pragma once

#include <vector>

#include "dht/graph.hpp"

namespace dht {

// Double mapping cylinder of f: A -> B and g: A -> C of length m:
// the quotient of B ⊔ (A□I_m) ⊔ C by (v,0) ~ f(v), (v,m) ~ g(v).
// For m = 0 this is the pushout of f and g.
//
// Quotient classes are named by their lexicographically least member
// label, where members are written "A.<v>@<t>", "B.<v>", "C.<v>";
// vertices of the result are interned in sorted label order.
struct CylinderResult {
    Graph graph;
    GraphMap ell0;          // B -> graph
    GraphMap r0;            // C -> graph
    GraphMap cyl_quotient;  // A□I_m -> graph
};

CylinderResult double_mapping_cylinder(const GraphMap& f, const GraphMap& g, int m);

// Structure maps of the cylinder:
//   ell_k: Cyl_k(f, id_A) -> Cyl_m(f, g), occupying levels 0..k;
//   r_k:   Cyl_k(id_A, g) -> Cyl_m(f, g) via (x, t) -> (x, t + m - k).
// Require 0 <= k <= m.
GraphMap ell_k(const GraphMap& f, const GraphMap& g, int m, int k);
GraphMap r_k(const GraphMap& f, const GraphMap& g, int m, int k);

// The retraction sigma(f): Cyl_m(f, id_A) -> B, (v,t) -> f(v), v_B -> v_B.
// Satisfies sigma(f) ∘ ell_0(f, id) = id_B exactly.
GraphMap sigma_retraction(const GraphMap& f, int m);

// Cyl_m(!, !) of the terminal map: two apex vertices.  m >= 1.
Graph suspension(const Graph& g, int m);
// Cyl_m(id_G, !): G□I_m with level m collapsed to a point.  m >= 1.
Graph cone(const Graph& g, int m);

// Subgraph of cube(m, n) on vertices with some coordinate equal to 0
// or m.  An edge of the cube survives iff x_i = 0 = y_i or
// x_i = m = y_i for some i (induced in all cases except m = n = 1).
// n = 0 yields the empty graph.
Graph cube_boundary(int m, int n);
// cube_boundary(m, n) minus the open top face {x_n = m, x_i ∉ {0, m}
// for i != n}, induced inside the boundary.  n >= 1.
Graph open_box(int m, int n);

// The contraction Cyl_{p+q1+q1p+q2+q2p}(f,g) -> Cyl_{p+q1+q2}(f,g)
// induced by the endpoint-preserving interval map that collapses the
// first q1p and last q2p edges.
GraphMap pi_contract(const GraphMap& f, const GraphMap& g, int p, int q1, int q1p, int q2,
                     int q2p);

// A square is an n-skeletal pushout iff for every k in {0,...,n} the
// set-level square Graph(Q_1^k, -) is a pushout, i.e. the canonical
// function from the set pushout to Graph(Q_1^k, L) is a bijection.
// Checked by explicit enumeration of cube maps; throws on a
// non-commutative square.
bool is_n_skeletal_pushout(const GraphSquare& sq, int n);

// Same check, reporting the first failure: the offending dimension and
// a witness cube of L (one not hit, or one hit by two distinct classes
// of the set pushout) spelled out as a vertex assignment.
struct SkeletalReport {
    bool ok = true;
    int failed_dim = -1;
    std::string witness;
};

SkeletalReport skeletal_pushout_report(const GraphSquare& sq, int n);

// Sufficient criterion: for induced subgraphs A, B covering G, if
// every v ∉ A and w ∉ B sit at distance >= n+1 then the intersection
// square A∩B -> A, B -> G is an n-skeletal pushout.  Requires
// A ∪ B = V(G).
bool distance_criterion(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                        int n);

// The intersection square of two induced subgraphs covering g.
GraphSquare cover_square(const Graph& g, const std::vector<int>& a, const std::vector<int>& b);

// Note: a pushout of graphs along monomorphisms whose glued 1-skeleton
// has no two distinct 1-cubes sharing a source and target is reported
// to be 1-skeletal; we do not rely on this converse anywhere and only
// check the definition directly.

}  // namespace dht
