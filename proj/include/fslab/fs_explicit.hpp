#pragma once

#include <cstdint>
#include <vector>

#include "fslab/graph.hpp"

namespace fslab {

// mapping[x] is the Y-vertex sitting on X-vertex x.
using Configuration = std::vector<int>;

std::uint64_t factorial(int n);
std::uint64_t rank_permutation(const Configuration& sigma);
Configuration unrank_permutation(std::uint64_t rank, int n);
int permutation_sign(const Configuration& sigma);  // +1 or -1

// FS(X, Y) over all n! configurations, vertices indexed by lexicographic rank.
class FsGraph {
 public:
  int n() const { return n_; }
  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::span<const std::uint32_t> neighbors(std::size_t v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

 private:
  friend FsGraph build(const Graph& x, const Graph& y, int n_limit);
  int n_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<std::uint32_t> targets_;
};

inline constexpr int kDefaultExplicitLimit = 8;

// Throws on size mismatch or n above n_limit.
FsGraph build(const Graph& x, const Graph& y, int n_limit = kDefaultExplicitLimit);

// Component label per vertex, labels in order of first vertex.
std::vector<std::uint32_t> component_labels(const FsGraph& fs);
// Component sizes, ascending.
std::vector<std::uint64_t> component_sizes(const FsGraph& fs);
// Exact girth over all roots, or kInfinity.
int girth_explicit(const FsGraph& fs);
// Every edge joins permutations of opposite sign.
bool bipartite_sign_check(const FsGraph& fs);

// Compares the component sizes of FS(x, y) with the sizes predicted from the
// components of x over every ordered set partition of V(y). Requires n <= 7.
bool verify_decomposition(const Graph& x, const Graph& y);

struct Exchange {
  bool reachable = false;
  std::vector<Configuration> path;  // sigma ... sigma o (a b)
};

// Whether sigma and sigma o (a b) share a component of FS(x, y).
Exchange exchangeability_oracle(const Graph& x, const Graph& y, const Configuration& sigma, int a, int b);

}  // namespace fslab
