#pragma once

#include <string_view>
#include <vector>

#include "fslab/families.hpp"
#include "fslab/graph.hpp"
#include "fslab/star_search.hpp"

namespace fslab {

// Walk of the star's center over X, one X-edge per friendly swap.
struct SwapSequence {
  int start_vertex = 0;
  std::vector<Step> steps;

  SwapSequence inverse() const;
  SwapSequence& then(const SwapSequence& next);
};

// Each generator needs only the named vertices of its shape, so it works for
// family graphs and for shapes found inside larger graphs alike.

// Moves the center around `cycle` (listed from its start) k(k-1) times.
SwapSequence rotation_sequence(const std::vector<int>& cycle);
SwapSequence rotation_sequence(int n);  // on Cycle(n)

// loop1 starts at hub v, bridge runs v to w (just {v} when the cycles touch),
// loop2 starts at w.
SwapSequence barbell_sequence(const std::vector<int>& loop1, const std::vector<int>& bridge,
                              const std::vector<int>& loop2);
SwapSequence barbell_sequence(const BarbellSpec& spec);

// Three hub-to-hub paths; the six-part block is performed `repeats` times.
// Throws unless repeats is 2 with no unit path or 3 with exactly one.
SwapSequence theta_sequence(const std::vector<std::vector<int>>& paths, int repeats);
SwapSequence theta_sequence(const ThetaSpec& spec, int repeats);
// Unchecked variant, used to show that a single block does not close.
SwapSequence theta_block(const std::vector<std::vector<int>>& paths, int repeats);

// Four hub-to-hub paths, the first of length 1, others nondecreasing.
SwapSequence theta4_sequence(const std::vector<std::vector<int>>& paths);
SwapSequence theta4_sequence(const ThetaSpec& spec);

inline constexpr std::string_view kTheta4Word = "312412132142";

struct TrajectoryReport {
  bool is_closed = false;
  bool is_simple = false;   // closed, at least 3 steps, no configuration repeated
  bool tokens_returned = false;
  int length = 0;
  Graph induced_subgraph;   // vertices of x, edges the center traversed
  std::vector<int> visited_vertices;
  bool uses_whole_graph = false;
};

// Starts from the canonical configuration with the center at start_vertex.
// Throws if a step is not an edge of x at the center's position.
TrajectoryReport simulate(const Graph& x, const SwapSequence& seq);

}  // namespace fslab
