#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "fslab/enumeration.hpp"
#include "fslab/families.hpp"
#include "fslab/graph.hpp"

using namespace fslab;

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> pairs) {
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

Graph spec(const std::string& s) { return make(parse_spec(s)).graph; }

// Brute force: both vertices on one simple cycle.
bool on_common_cycle(const CycleList& cycles, int a, int b) {
  for (const auto& c : cycles.cycles)
    if (std::count(c.begin(), c.end(), a) && std::count(c.begin(), c.end(), b)) return true;
  return false;
}

}  // namespace

TEST_CASE("add_edge rejects loops, duplicates and bad indices") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("complement") {
  CHECK(complement(spec("complete:4")).edge_count() == 0);
  const Graph c = complement(spec("star:4"));
  CHECK(c == from_edges(4, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(c.degree(3) == 0);
  for (int n = 1; n <= 5; ++n)
    for_each_labelled_graph(n, [&](const Graph& g) {
      CHECK(complement(complement(g)) == g);
      CHECK(g.edge_count() + complement(g).edge_count() == n * (n - 1) / 2);
    });
}

TEST_CASE("connected components") {
  const auto two = connected_components(from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].size() == 3);
  CHECK(two[1].size() == 3);
  CHECK(connected_components(spec("path:5")).size() == 1);
  CHECK(connected_components(Graph(4)).size() == 4);
}

TEST_CASE("biconnectivity") {
  CHECK(is_biconnected(spec("complete:3")));
  CHECK_FALSE(is_biconnected(spec("path:3")));
  CHECK(is_biconnected(spec("theta0")));
  CHECK_FALSE(is_biconnected(spec("barbell:3,3,0")));
  CHECK_FALSE(is_biconnected(from_edges(2, {{0, 1}})));
}

TEST_CASE("biconnected iff every pair lies on a common cycle, n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : graphs_up_to_isomorphism(n)) {
      const CycleList cycles = simple_cycles(g, n, 1u << 20);
      REQUIRE(cycles.complete);
      bool on_cycles = true;
      for (int a = 0; a < n && on_cycles; ++a)
        for (int b = a + 1; b < n && on_cycles; ++b) on_cycles = on_common_cycle(cycles, a, b);
      CHECK_MESSAGE(is_biconnected(g) == on_cycles, to_json_string(g));
    }
  }
}

TEST_CASE("girth and forest profile") {
  CHECK(girth(spec("cycle:5")) == 5);
  CHECK(girth(spec("path:6")) == kInfinity);
  CHECK(girth(spec("theta:2,3,3")) == 5);

  const ForestProfile empty = forest_profile(Graph(5));
  CHECK(empty.is_forest);
  CHECK(empty.tree_sizes == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(empty.gcd_of_sizes == 1);

  const ForestProfile two_three = forest_profile(from_edges(5, {{0, 1}, {2, 3}, {3, 4}}));
  CHECK(two_three.tree_sizes == std::vector<int>{2, 3});
  CHECK(two_three.gcd_of_sizes == 1);

  const ForestProfile cyc = forest_profile(spec("cycle:4"));
  CHECK_FALSE(cyc.is_forest);
  CHECK_FALSE(cyc.gcd_of_sizes.has_value());

  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : graphs_up_to_isomorphism(n)) CHECK((girth(g) == kInfinity) == forest_profile(g).is_forest);
}

TEST_CASE("girth agrees with the shortest enumerated cycle") {
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : graphs_up_to_isomorphism(n)) {
      const CycleList cycles = simple_cycles(g, n, 1u << 20);
      int shortest = kInfinity;
      for (const auto& c : cycles.cycles)
        if (shortest == kInfinity || static_cast<int>(c.size()) < shortest) shortest = static_cast<int>(c.size());
      CHECK(girth(g) == shortest);
    }
}

TEST_CASE("small predicates") {
  CHECK_FALSE(has_two_disjoint_edges(spec("star:5")));
  CHECK(has_two_disjoint_edges(spec("path:4")));
  CHECK(has_triangle(spec("complete:4")));
  CHECK_FALSE(is_bipartite(spec("complete:4")));
  CHECK(is_bipartite(spec("kbip:3,3")));
  CHECK(is_hamiltonian(spec("theta:1,2,2")));
  CHECK_FALSE(is_hamiltonian(spec("theta0")));
  CHECK(is_acyclic(spec("star:6")));
}

TEST_CASE("simple cycles of K4") {
  const CycleList all = simple_cycles(spec("complete:4"), 4, 100);
  CHECK(all.complete);
  CHECK(all.cycles.size() == 7);  // 4 triangles and 3 quadrilaterals
  const CycleList capped = simple_cycles(spec("complete:4"), 3, 100);
  CHECK(capped.cycles.size() == 4);
  CHECK_FALSE(capped.complete);  // the quadrilaterals were cut
  const CycleList limited = simple_cycles(spec("complete:4"), 4, 2);
  CHECK_FALSE(limited.complete);
}

TEST_CASE("local connectivity and K4 minors") {
  CHECK(local_connectivity(spec("complete:5"), 0, 1) == 4);
  CHECK(local_connectivity(spec("cycle:6"), 0, 3) == 2);
  CHECK(has_k4_minor(spec("complete:4")));
  CHECK(has_k4_minor(spec("k4s:1,2,1,3,1,2")));
  CHECK_FALSE(has_k4_minor(spec("theta:2,2,2,2,2")));
  CHECK_FALSE(has_k4_minor(spec("barbell:4,5,2")));
}

TEST_CASE("topological core") {
  const Multigraph loop = topological_core(spec("cycle:7"));
  CHECK(loop.vertex_count == 1);
  REQUIRE(loop.edges.size() == 1);
  CHECK(loop.edges[0].length == 7);

  const Multigraph theta = topological_core(spec("theta:2,2,3"));
  CHECK(theta.vertex_count == 2);
  std::vector<int> lengths;
  for (const auto& e : theta.edges) lengths.push_back(e.length);
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<int>{2, 2, 3});

  const Multigraph k4 = topological_core(spec("k4s:2,2,2,2,2,2"));
  CHECK(k4.vertex_count == 4);
  CHECK(k4.edges.size() == 6);
  for (const auto& e : k4.edges) CHECK(e.length == 2);

  CHECK_THROWS(topological_core(spec("path:4")));
  CHECK_THROWS(topological_core(from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));

  for (const std::string s : {"barbell:4,5,2", "theta:1,3,4,4", "k33s:1,1,1,1,2,1,1,1,3", "theta0"}) {
    const Graph g = spec(s);
    const Multigraph core = topological_core(g);
    int total = 0;
    for (const auto& e : core.edges) {
      total += e.length;
      CHECK(static_cast<int>(e.path.size()) == e.length + 1);
    }
    CHECK(total == g.edge_count());
  }
}

TEST_CASE("JSON and DOT") {
  const Graph g = from_edges(4, {{2, 3}, {0, 1}, {1, 2}});
  CHECK(to_json_string(g) == R"({"n":4,"edges":[[0,1],[1,2],[2,3]]})");
  CHECK(graph_from_json_string(to_json_string(g)) == g);
  CHECK(graph_from_json_string(R"({"n": 3, "edges": [[2, 0]]})").has_edge(0, 2));
  CHECK_THROWS(graph_from_json_string(R"({"n": 2, "edges": [[0, 2]]})"));
  const std::string dot = to_dot(spec("cycle:5"));
  CHECK(dot.find("graph G") == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') >= 10);
}

TEST_CASE("isomorphism classes") {
  const std::map<int, std::size_t> expected{{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}};
  for (auto [n, count] : expected) CHECK(graphs_up_to_isomorphism(n).size() == count);
  CHECK(graphs_up_to_isomorphism(7).size() == 1044);

  const Graph g = spec("theta0");
  std::vector<int> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  std::swap(perm[1], perm[4]);
  CHECK(canonical_key(relabel(g, perm)) == canonical_key(g));
  CHECK(canonical_key(g) != canonical_key(spec("theta:1,3,4")));
  CHECK(canonical_key(graph_from_key(7, canonical_key(g))) == canonical_key(g));
}
