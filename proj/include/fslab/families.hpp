#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fslab/graph.hpp"

namespace fslab {

struct PathSpec { int n; };
struct CycleSpec { int n; };
struct StarSpec { int n; };  // center is vertex n-1
struct CompleteSpec { int n; };
struct CompleteBipartiteSpec { int left, right; };
struct Theta0Spec {};
// Parameters use the 1-based convention of the canonical one-ear form.
struct OneEarSpec { int n, v, w; };
struct BarbellSpec { int m1, m2, d; };
struct ThetaSpec { std::vector<int> lengths; };
struct K4SubdivisionSpec { std::vector<int> lengths; };   // six, K4 edges in lexicographic order
struct K33SubdivisionSpec { std::vector<int> lengths; };  // nine, (i, 3 + j) for i, j in 0..2

using FamilySpec = std::variant<PathSpec, CycleSpec, StarSpec, CompleteSpec, CompleteBipartiteSpec,
                                Theta0Spec, OneEarSpec, BarbellSpec, ThetaSpec, K4SubdivisionSpec,
                                K33SubdivisionSpec>;

// Named vertices of a generated graph. Cycles are listed starting at their
// hub; paths run hub to hub and include both endpoints.
struct Landmarks {
  std::vector<int> hubs;
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> paths;
};

struct FamilyGraph {
  Graph graph;
  Landmarks landmarks;
};

// Throws std::invalid_argument when the parameters are out of range.
void validate_spec(const FamilySpec& spec);
FamilyGraph make(const FamilySpec& spec);
int spec_vertex_count(const FamilySpec& spec);

// Grammar: cycle:5, path:4, star:6, complete:4, kbip:2,3, theta0,
// onear:8,3,6, barbell:6,6,0, theta:4,4,4, k4s:<6 lengths>, k33s:<9 lengths>.
FamilySpec parse_spec(const std::string& text);
std::string format_spec(const FamilySpec& spec);

enum class Shape { Cycle, Barbell, Theta3, Theta4, Theta5, K4Subdivision, K33Subdivision };
Shape parse_shape(const std::string& text);

// Every instance with at most `vertex_budget` vertices, once each up to the
// symmetries of the shape, by nondecreasing vertex count then parameters.
std::vector<FamilySpec> enumerate_instances(Shape shape, int vertex_budget);

// Lexicographically smallest relabelling of subdivision lengths under the
// automorphisms of K4 or K3,3.
std::vector<int> canonical_k4_lengths(const std::vector<int>& lengths);
std::vector<int> canonical_k33_lengths(const std::vector<int>& lengths);

}  // namespace fslab
