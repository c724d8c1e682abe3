#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fslab/connectivity.hpp"
#include "fslab/families.hpp"
#include "fslab/girth_theory.hpp"
#include "fslab/star_search.hpp"
#include "fslab/trajectories.hpp"

namespace fslab {

struct GirthSweepReport {
  int n = 0;
  std::size_t graphs = 0;
  std::map<std::string, RuleTally> tallies;
  std::vector<SweepMismatch> mismatches;
};

// Over every connected graph on n vertices (3 <= n <= 7, one per
// isomorphism class): search against the explicit oracle, the closed-form
// predictions and bounds against search, and for n <= 5 the girth-4 test
// over all pairs of graphs.
GirthSweepReport verify_girth_sweep(int n, int threads = 1);

// The constructed trajectory for a classified subgraph, if its shape has one.
std::optional<SwapSequence> shape_trajectory(const ShapeClassification& shape);

struct InstanceSearchOptions {
  std::optional<int> depth_cap;
  std::size_t state_cap = kDefaultStateCap;
  int threads = 1;
  std::size_t usage_limit = 200000;
  bool exhaustive_usage = false;  // enumerate shortest cycles through every root
};

struct SearchRecord {
  std::string spec;
  int n = 0;
  std::string shape;
  std::optional<int> formula_bound;
  bool formula_exact = false;
  GirthReport search;
  std::optional<int> trajectory_length;
  bool full_usage = false;
  bool usage_complete = false;
  std::optional<bool> all_cycles_full;  // only with exhaustive_usage
  bool proven_minimal = false;
  bool candidate_counterexample = false;
};

SearchRecord evaluate_instance(const FamilySpec& spec, const InstanceSearchOptions& options = {});

}  // namespace fslab
