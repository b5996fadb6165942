#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dht/graph.hpp"

namespace dht {

// An F-sequence (sign, length, partition, weights) over the ground set
// {1..n} with weights in {0..m}.  Written
//   ((w(1); x^±, ...), ..., (w(k); ...))
// with class members sorted; the order of members inside a class does
// not matter, the order of classes does.
struct FSequence {
    int m = 0;                  // weight bound
    int n = 0;                  // ground set size
    std::vector<int8_t> sign;   // sign[j-1] = -1 or +1
    std::vector<int> cls;       // cls[j-1] in 1..k, surjective
    std::vector<int> weight;    // weight[i-1] in 0..m

    int length() const { return static_cast<int>(weight.size()); }
    // Members of class i (1-based), ascending.
    std::vector<int> class_members(int i) const;
    void validate() const;  // throws std::invalid_argument on malformed data

    bool operator==(const FSequence& o) const {
        return m == o.m && n == o.n && sign == o.sign && cls == o.cls && weight == o.weight;
    }
    bool operator<(const FSequence& o) const;
};

struct FSequenceHash {
    size_t operator()(const FSequence& s) const;
};

// Text form mirroring ((7;1+,3-),(0;2-)); the empty sequence prints as ().
std::string to_string(const FSequence& s);

struct FseqParseError : std::runtime_error {
    size_t pos;
    FseqParseError(const std::string& what, size_t pos_) : std::runtime_error(what), pos(pos_) {}
};

FSequence parse_fseq(const std::string& text, int m);

// FR1: merge the zero-weight class P_i (2 <= i <= k) into P_{i-1}; the
// merged class keeps the weight of P_{i-1}.
FSequence fr1(const FSequence& s, int i);
// FR2: merge P_i..P_k (w(i) = m) into a single all-plus class of
// weight m.
FSequence fr2(const FSequence& s, int i);

bool is_reduced(const FSequence& s);
bool is_expanded(const FSequence& s);

// The unique reduced form: one FR2 at the minimal m-weight index, then
// FR1 on zero-weight classes until none remain.
FSequence reduce(const FSequence& s);

// Every expanded form related to s by F-reductions: per block, all
// orderings of the class members (the first keeping the class weight,
// the rest at weight 0); a trailing weight-m class additionally ranges
// over all sign assignments.  Deterministically sorted.
std::vector<FSequence> expanded_forms(const FSequence& s);
long long count_expanded_forms(const FSequence& s);

// The min/max signature function {1..n} -> {1..k}; invariant under
// FR moves.
std::vector<int> signature(const FSequence& s);

// The graph F(m, n) together with its vertex dictionary.  Vertices are
// the reduced forms (brute-force enumeration of all F-sequences
// followed by reduce + dedupe), labelled by their text form and sorted
// structurally.  Edges come from the expanded-form comparison rule.
struct FGraph {
    Graph graph;
    std::vector<FSequence> vertex_seq;   // reduced form per vertex id
    std::vector<char> boundary;          // reduced form has w(1) = 0

    std::vector<int> boundary_vertices() const;
    std::vector<int> interior_vertices() const;
    int vertex_of(const FSequence& s) const;  // by reduced form
};

FGraph f_graph(int m, int n);

// Induced subgraph of F(m, n) on the boundary vertices.
Graph f_boundary_graph(const FGraph& fg);

// The face map (0; j^eps) · s, a graph map F(m, n-1) -> F(m, n)
// inserting a weight-0 singleton class in front.  1 <= j <= n+1.
FSequence f_face(int j, int eps, const FSequence& s);

// The cone structure map f: ∂F(m,n) □ I_m -> F(m,n) sending
// ((w; P), t) to the reduced form with w(1) set to t; f(-, 0) is the
// boundary inclusion and f(-, m) is constant at (m; 1+, ..., n+).
// Returns the map together with the F(m,n) it lands in.
struct FConeMap {
    FGraph fg;
    Graph boundary;   // induced boundary subgraph
    GraphMap map;     // boundary □ I_m -> fg.graph
};

FConeMap f_cone_map(int m, int n);

// All raw F-sequences for the given (m, n); brute force over ordered
// set partitions x weights x signs.  Exposed for the enumeration
// oracle in tests.
void for_each_f_sequence(int m, int n, const std::function<void(const FSequence&)>& cb);
std::vector<FSequence> all_f_sequences(int m, int n);

}  // namespace dht
