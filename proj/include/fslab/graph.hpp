#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fslab {

// Unordered vertex pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  // Throws std::invalid_argument on loops, duplicates or bad indices.
  void add_edge(int u, int v);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  // Sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> matrix_;
};

inline constexpr int kInfinity = -1;

Graph complement(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_biconnected(const Graph& g);
bool is_acyclic(const Graph& g);

// Length of a shortest cycle, or kInfinity for forests.
int girth(const Graph& g);

struct ForestProfile {
  bool is_forest = false;
  std::vector<int> tree_sizes;  // ascending; empty unless is_forest
  std::optional<int> gcd_of_sizes;
};
ForestProfile forest_profile(const Graph& g);

bool has_two_disjoint_edges(const Graph& g);
bool has_triangle(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_hamiltonian(const Graph& g);

// Subgraph keeping the vertex set and only the given edges.
Graph edge_subgraph(int n, std::span<const Edge> edges);

// Vertex-induced subgraph, relabelled by position in `vertices`.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// new_label[v] gives the image of v.
Graph relabel(const Graph& g, std::span<const int> new_label);

// Every simple cycle of length <= max_length as a vertex sequence starting
// at its smallest vertex. Stops after `limit` cycles. `complete` is true iff
// the list holds every simple cycle of g.
struct CycleList {
  std::vector<std::vector<int>> cycles;
  bool complete = true;
};
CycleList simple_cycles(const Graph& g, int max_length, std::size_t limit);

// Max number of internally vertex-disjoint u-w paths (a direct edge counts).
int local_connectivity(const Graph& g, int u, int w);

// True iff g has a K4 minor (equivalently, is not series-parallel).
bool has_k4_minor(const Graph& g);

struct MultiEdge {
  int u = 0;
  int v = 0;
  int length = 1;
  std::vector<int> path;  // original vertices from u's image to v's image
};

struct Multigraph {
  int vertex_count = 0;
  std::vector<int> original;  // core vertex -> vertex of the source graph
  std::vector<MultiEdge> edges;
};

// Suppresses degree-2 vertices. Throws if g is disconnected or has a vertex
// of degree below 2.
Multigraph topological_core(const Graph& g);

std::string to_json_string(const Graph& g);
Graph graph_from_json_string(const std::string& text);
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace fslab
