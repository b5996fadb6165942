#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dht {

// A finite reflexive graph: a vertex set with a symmetric relation.
// Reflexive pairs are implicit; the stored adjacency holds non-loop
// edges only.  Vertex labels are interned to dense integer ids in
// insertion order, and every canonical order downstream is induced by
// that order.
class Graph {
public:
    Graph() = default;

    int add_vertex(std::string label);
    // Loops (u == v) are silently dropped; the relation is reflexive anyway.
    void add_edge(int u, int v);
    void add_edge(const std::string& a, const std::string& b);

    int size() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return n_edges_; }

    const std::string& label(int v) const { return labels_[v]; }
    std::optional<int> index_of(const std::string& label) const;

    // Sorted list of neighbors distinct from v.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Reflexive relation predicate: adjacent(v, v) is always true.
    bool adjacent(int u, int v) const;

    // All non-loop edges as pairs (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    int n_edges_ = 0;
};

// A relation-preserving vertex function between graphs.
struct GraphMap {
    Graph source;
    Graph target;
    std::vector<int> assignment;  // source id -> target id

    int apply(int v) const { return assignment[v]; }
    // Checks totality and edge preservation.
    bool is_valid() const;
};

GraphMap identity_map(const Graph& g);
GraphMap compose(const GraphMap& second, const GraphMap& first);
bool same_vertex_function(const GraphMap& a, const GraphMap& b);

// A commutative square G -> H, G -> K, H -> L, K -> L.
struct GraphSquare {
    GraphMap gh;  // G -> H
    GraphMap gk;  // G -> K
    GraphMap hl;  // H -> L
    GraphMap kl;  // K -> L

    bool commutes() const;
};

// --- standard families ------------------------------------------------

// Path graph on {0,...,m}.
Graph interval(int m);
// Cycle on {0,...,L-1}; rejects L < 3 (the relation would collapse).
Graph cycle(int L);

struct BoxProduct {
    Graph graph;
    GraphMap pi1;  // projection to the first factor
    GraphMap pi2;
};

// Box product: (v,w) ~ (v',w') iff one coordinate moves along an edge
// and the other stays fixed.
BoxProduct box_product(const Graph& g, const Graph& h);

// n-fold box product of interval(m), built directly on lattice tuples.
// cube(m, 0) is the one-point graph.
Graph cube(int m, int n);

// Shortest-path length; nullopt when v, w lie in different components.
std::optional<int> distance(const Graph& g, int v, int w);
// BFS distances from v; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int v);

// Partition of the vertex set into path components, each class sorted,
// classes ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

struct PushoutResult {
    Graph graph;
    GraphMap from_b;
    GraphMap from_c;
};

// Pushout of B <-f- A -g-> C: quotient of B ⊔ C by f(a) ~ g(a).
// Quotient classes are named by their lexicographically least member
// label, prefixed "B." / "C." to keep the two sides apart.
PushoutResult pushout(const GraphMap& f, const GraphMap& g);

Graph disjoint_union(const Graph& g, const Graph& h);

// Induced subgraph on the given vertex ids (labels preserved, vertex
// order as listed).
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

}  // namespace dht
