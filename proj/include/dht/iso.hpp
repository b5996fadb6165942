#pragma once

#include <optional>

#include "dht/graph.hpp"

namespace dht {

// Exact isomorphism test by backtracking with iterated neighborhood-
// color refinement for pruning.  Best-effort, not a certified
// canonical-form algorithm; intended for instances up to a few
// thousand vertices.  Returns a witness map when the graphs are
// isomorphic.
std::optional<GraphMap> graph_isomorphic(const Graph& g, const Graph& h);

// Checks that an explicitly given map is an isomorphism: bijective,
// edge-preserving and edge-reflecting.
bool is_graph_isomorphism(const GraphMap& f);

}  // namespace dht
