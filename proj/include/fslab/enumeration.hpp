#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fslab/graph.hpp"

namespace fslab {

// Isomorphism-invariant key: the smallest upper-triangle adjacency string
// over all vertex orders compatible with colour refinement. Meant for the
// small graphs (n <= 8) the sweeps run over.
std::string canonical_key(const Graph& g);
Graph graph_from_key(int n, const std::string& key);

// One representative per isomorphism class, including disconnected graphs.
std::vector<Graph> graphs_up_to_isomorphism(int n);

// Calls fn on every labelled graph on n vertices (all edge subsets).
void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& fn);

}  // namespace fslab
