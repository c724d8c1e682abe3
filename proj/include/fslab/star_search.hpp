#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fslab/fs_explicit.hpp"
#include "fslab/graph.hpp"

namespace fslab {

// Configuration of FS(X, Star_n) packed at 4 bits per X-vertex. The star's
// center is token n - 1; its position is cached.
class PackedConfig {
 public:
  static constexpr int kMaxVertices = 16;

  PackedConfig() = default;
  static PackedConfig from_configuration(const Configuration& sigma);
  // Center at `center`, remaining tokens in increasing vertex order.
  static PackedConfig canonical_root(int n, int center);
  static PackedConfig from_bits(std::uint64_t bits, int n);

  Configuration unpack(int n) const;
  int token_at(int v) const { return static_cast<int>(bits_ >> (4 * v) & 0xF); }
  int center() const { return center_; }
  std::uint64_t bits() const { return bits_; }

  // Moves the center token to X-vertex v, which must be adjacent in X.
  PackedConfig moved_to(int v) const;

  bool operator==(const PackedConfig& o) const { return bits_ == o.bits_; }

 private:
  std::uint64_t bits_ = 0;
  int center_ = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A step moves the center token from `first` to `second` along an X-edge.
using Step = std::pair<int, int>;

std::vector<PackedConfig> neighbors(const Graph& x, const PackedConfig& c);

struct Reachability {
  bool reachable = false;
  std::vector<Step> path;
};

inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 24;

// Throws BudgetExceeded when more than `state_cap` states are stored.
Reachability reachable(const Graph& x, const Configuration& from, const Configuration& to,
                       std::size_t state_cap = kDefaultStateCap);

struct StarSearchOptions {
  std::optional<int> depth_cap;     // cycles up to 2 * depth_cap are searched
  std::optional<int> upper_bound;   // a length known to be attained
  int threads = 1;
  std::size_t state_cap = kDefaultStateCap;  // per root
  bool acyclic_shortcut = true;
};

struct GirthReport {
  enum class Status { Exact, Infinite, UnknownAbove };
  Status status = Status::Infinite;
  int value = kInfinity;        // Exact only
  int lower_bound = 0;          // UnknownAbove: no cycle of length <= lower_bound
  std::optional<int> upper_bound;
  int root = -1;                // center position of the witness root
  std::vector<Step> witness;    // closed walk of the center, Exact from search only
  std::uint64_t states = 0;
};

GirthReport girth_star(const Graph& x, const StarSearchOptions& options = {});

struct CycleUsage {
  std::size_t cycles = 0;   // shortest cycles through the root, both directions
  bool any_full = false;    // some cycle moves the center over every edge of x
  bool all_full = true;
  bool complete = true;     // false if the limit stopped the enumeration
};

// Enumerates the cycles of length `length` through the canonical root with
// the center at `root` and records whether they use all of x.
CycleUsage shortest_cycle_usage(const Graph& x, int root, int length, std::size_t limit,
                                std::size_t state_cap = kDefaultStateCap);

}  // namespace fslab
