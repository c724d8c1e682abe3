#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fslab/graph.hpp"

namespace fslab {

enum class ConnectivityRule {
  CycleIff,               // X a cycle: connected iff the complement of Y is a forest with coprime tree sizes
  BiconnectedSufficient,  // X biconnected and the same forest condition: connected
  StarBiconnected,        // Y a star, X biconnected: 1 or 2 components, 6 for the theta(2,3,3) exception
  StarCycle,              // Y a star, X a cycle: (n-2)! components
  None,
};
std::string to_string(ConnectivityRule rule);

struct ConnectivityVerdict {
  bool applicable = false;
  std::optional<bool> predicted_connected;
  std::optional<std::uint64_t> predicted_components;
  ConnectivityRule rule = ConnectivityRule::None;
};

// The complement of y is a forest whose tree sizes have gcd 1.
bool forest_condition(const Graph& y);
bool is_cycle_graph(const Graph& g);
bool is_theta0(const Graph& g);

ConnectivityVerdict predict_cycle_connectivity(const Graph& y);
ConnectivityVerdict predict_biconnected_connectivity(const Graph& x, const Graph& y);
// Components of FS(x, Star_n). Throws if x is not biconnected.
ConnectivityVerdict predict_star_components(const Graph& x);

struct RuleTally {
  std::uint64_t instances = 0;
  std::uint64_t mismatches = 0;
};

struct SweepMismatch {
  std::string rule;
  std::string x;
  std::string y;
  std::string detail;
};

struct ConnectivitySweepOptions {
  bool exhaustive = false;       // n = 7: every biconnected class instead of a sample
  int sample_size = 50;
  std::uint64_t seed = 20240607;
  int threads = 1;
};

struct ConnectivitySweepReport {
  int n = 0;
  std::size_t x_graphs = 0;
  std::size_t y_graphs = 0;
  std::map<std::string, RuleTally> tallies;
  std::vector<SweepMismatch> mismatches;
};

// Biconnected X (isomorphism classes) against every Y whose complement is a
// forest (isomorphism classes), each verdict checked on the explicit graph.
ConnectivitySweepReport verify_connectivity_sweep(int n, const ConnectivitySweepOptions& options = {});

// The biconnected graphs a sweep at size n covers.
std::vector<Graph> sweep_x_graphs(int n, const ConnectivitySweepOptions& options);
// Complements of all forests on n vertices, one per isomorphism class.
std::vector<Graph> forest_complements(int n);

}  // namespace fslab
