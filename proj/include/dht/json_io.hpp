#pragma once

#include <string>

#include "dht/graph.hpp"

namespace dht {

struct SimplicialComplex;  // gamma.hpp
struct GraphSquare;

// Graph JSON: {"vertices": ["a","b",...], "edges": [["a","b"], ...]}.
// Edges are unordered; loops are rejected; unknown labels in edges are
// an error.  Writing is deterministic: vertices in interning order,
// edges sorted.
Graph graph_from_json(const std::string& text);
Graph graph_from_json_file(const std::string& path);
std::string graph_to_json(const Graph& g);

// Square JSON: {"G":…, "H":…, "K":…, "L":…, "maps": {"GH": {...},
// "GK": {...}, "HL": {...}, "KL": {...}}} with each graph inline and
// each map an object of label -> label assignments.
GraphSquare square_from_json(const std::string& text);
GraphSquare square_from_json_file(const std::string& path);

// Simplicial complex JSON: {"vertices": ["0","1",...], "facets":
// [["0","1","2"], ...]}; the vertex order is the list order.
SimplicialComplex complex_from_json(const std::string& text);
SimplicialComplex complex_from_json_file(const std::string& path);

}  // namespace dht
