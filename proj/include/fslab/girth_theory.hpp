#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fslab/families.hpp"
#include "fslab/graph.hpp"

namespace fslab {

// Girth of FS(X, Star_n) as given by a closed-form rule.
struct GirthPrediction {
  enum class Kind { Exact, UpperBound };
  int value = kInfinity;
  Kind kind = Kind::UpperBound;
  std::string rule;
  bool preconditions_met = false;
  std::optional<int> competing_bound;  // the k(k-1) bound of the shortest cycle
};

enum class ShapeKind { Cycle, Barbell, Theta, TildeTheta, Theta4, Theta5, K4Subdivision, K33Subdivision, Other };
std::string to_string(ShapeKind kind);

struct ShapeClassification {
  ShapeKind shape = ShapeKind::Other;
  // cycle: {k}; barbell: {m1, m2, d} with m1 <= m2; theta kinds: sorted
  // lengths; subdivisions: canonical lengths.
  std::vector<int> parameters;
  // Girth attained only by the whole graph, by a proven formula.
  bool proven_minimal = false;
  // Not ruled out from having that property.
  bool possibly_minimal = false;
  // Named vertices in the input graph's labels. Barbell: cycles[0] and
  // cycles[1] start at their hubs and paths[0] joins them. Theta kinds:
  // hub-to-hub paths by increasing length.
  Landmarks layout;
};

// True iff FS(x, y) has girth 4.
bool girth_is_four(const Graph& x, const Graph& y);

// g(g - 1) for the shortest cycle of x; nullopt for forests.
std::optional<int> quad_bound(const Graph& x);

// Exact k(k-1) for connected graphs with exactly one cycle, else nullopt.
std::optional<GirthPrediction> unicyclic_girth(const Graph& x);
GirthPrediction barbell_girth(const BarbellSpec& spec);
// Three path lengths, any order, at most one equal to 1.
GirthPrediction theta_girth(std::vector<int> lengths);
// Four path lengths, exactly one equal to 1.
GirthPrediction theta4_girth(std::vector<int> lengths);

// Throws if x is disconnected. Graphs with a vertex of degree < 2 are Other.
ShapeClassification classify(const Graph& x);

// The closed-form rule for a classified shape, if the shape has one.
std::optional<GirthPrediction> shape_formula(const ShapeClassification& c);

struct PredictionBudget {
  int max_cycle_length = 20;
  std::size_t max_cycles = 20000;
  std::size_t max_pairs = 100000;
};

struct SubgraphCandidate {
  std::vector<Edge> edges;  // in the labels of the input graph
  ShapeClassification shape;
  GirthPrediction prediction;
};

struct PredictedGirth {
  GirthPrediction prediction;
  int best_candidate = -1;
  std::vector<SubgraphCandidate> candidates;
  bool enumeration_complete = true;
};

// Minimum of the formula values over the cycle, barbell and theta subgraphs
// of x (and x itself). Exact only when every subgraph that could matter has a
// proven formula and the enumeration finished.
PredictedGirth predicted_girth(const Graph& x, const PredictionBudget& budget = {});

struct SubgraphWitness {
  ShapeKind shape = ShapeKind::Other;
  std::vector<int> vertices;
  std::vector<Edge> edges;
};

// A barbell or theta subgraph whenever some component of x has two cycles.
std::optional<SubgraphWitness> find_barbell_or_theta(const Graph& x);

}  // namespace fslab
