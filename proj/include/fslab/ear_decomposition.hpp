#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "fslab/graph.hpp"

namespace fslab {

struct EarDecomposition {
  std::vector<int> initial_cycle;       // closing edge back to the first vertex is implicit
  std::vector<std::vector<int>> ears;   // open paths, endpoints included
};

// Chain decomposition over a DFS tree (lowest index first). Throws if g is
// not biconnected or if `initial_cycle` is not a simple cycle of g.
EarDecomposition decompose(const Graph& g, const std::optional<std::vector<int>>& initial_cycle = std::nullopt);

bool validate(const EarDecomposition& d, const Graph& g);

struct OneEarForm {
  int n = 0;
  int v = 0;  // 1-based, as in OneEarSpec
  int w = 0;
  std::vector<int> phi;  // canonical vertex -> vertex of g
};
struct NotOneEar {};
struct Hamiltonian {};

using OneEarResult = std::variant<OneEarForm, NotOneEar, Hamiltonian>;

// Throws if g is not biconnected.
OneEarResult one_ear_canonical(const Graph& g);

}  // namespace fslab
