#include <doctest.h>

#include <algorithm>
#include <set>

#include "fslab/ear_decomposition.hpp"
#include "fslab/families.hpp"

using namespace fslab;

namespace {

std::vector<std::string> formatted(Shape shape, int budget) {
  std::vector<std::string> out;
  for (const auto& s : enumerate_instances(shape, budget)) out.push_back(format_spec(s));
  return out;
}

}  // namespace

TEST_CASE("vertex and edge counts") {
  for (int n = 3; n <= 9; ++n) {
    CHECK(make(PathSpec{n}).graph.edge_count() == n - 1);
    CHECK(make(CycleSpec{n}).graph.edge_count() == n);
    CHECK(make(StarSpec{n}).graph.edge_count() == n - 1);
    CHECK(make(CompleteSpec{n}).graph.edge_count() == n * (n - 1) / 2);
  }
  CHECK(make(StarSpec{5}).graph.degree(4) == 4);
  CHECK(make(CompleteBipartiteSpec{2, 3}).graph.edge_count() == 6);

  for (const auto& lengths : std::vector<std::vector<int>>{{2, 3, 3}, {1, 2, 2}, {4, 4, 4}, {1, 2, 3, 4}, {2, 2, 2, 2, 2}}) {
    const Graph g = make(ThetaSpec{lengths}).graph;
    int inner = 0, total = 0;
    for (int l : lengths) inner += l - 1, total += l;
    CHECK(g.vertex_count() == 2 + inner);
    CHECK(g.edge_count() == total);
  }

  const Graph cycle = make(CycleSpec{5}).graph;
  CHECK(cycle.vertex_count() == 5);
  CHECK(girth(cycle) == 5);

  const Graph b = make(BarbellSpec{3, 3, 0}).graph;
  CHECK(b.vertex_count() == 5);
  CHECK(b.edge_count() == 6);
  CHECK(make(BarbellSpec{6, 6, 1}).graph.vertex_count() == 12);
  CHECK(make(BarbellSpec{4, 5, 3}).graph.vertex_count() == 11);

  const Graph t0 = make(Theta0Spec{}).graph;
  CHECK(t0.vertex_count() == 7);
  CHECK(t0.edge_count() == 8);
  CHECK(girth(t0) == 5);
}

TEST_CASE("one-ear canonical graph") {
  const Graph g = make(OneEarSpec{8, 3, 6}).graph;
  std::vector<Edge> expected;
  for (int i = 0; i <= 6; ++i) expected.emplace_back(i, i + 1);
  expected.emplace_back(0, 5);
  expected.emplace_back(7, 2);
  std::sort(expected.begin(), expected.end());
  CHECK(g.edges() == expected);

  for (int n = 4; n <= 12; ++n)
    for (int v = 2; v <= n / 2; ++v)
      for (int w = n / 2 + 1; w <= n - 1; ++w) {
        if (v + (n + 1 - w) >= n) continue;
        const Graph x = make(OneEarSpec{n, v, w}).graph;
        CHECK(is_biconnected(x));
        CHECK_FALSE(is_hamiltonian(x));
        CHECK(x.edge_count() - x.vertex_count() == 1);
      }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(make(ThetaSpec{{1, 1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make(ThetaSpec{{3}}), std::invalid_argument);
  CHECK_THROWS_AS(make(BarbellSpec{2, 3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make(BarbellSpec{3, 3, -1}), std::invalid_argument);
  CHECK_THROWS_AS(make(OneEarSpec{8, 5, 6}), std::invalid_argument);
  CHECK_THROWS_AS(make(CycleSpec{2}), std::invalid_argument);
  CHECK_THROWS_AS(make(K4SubdivisionSpec{{1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("theta:1,1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("dodecahedron"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("cycle:x"), std::invalid_argument);
}

TEST_CASE("spec strings round-trip") {
  for (const std::string s : {"cycle:5", "barbell:6,6,0", "theta:4,4,4", "theta0", "onear:8,3,6", "k4s:1,1,2,2,2,2",
                              "k33s:1,1,1,1,1,1,1,1,2", "path:4", "star:6", "complete:4", "kbip:2,3"})
    CHECK(format_spec(parse_spec(s)) == s);
}

TEST_CASE("theta core lengths match the requested lengths") {
  for (const auto& lengths : std::vector<std::vector<int>>{{2, 3, 3}, {1, 5, 2}, {3, 1, 2, 2}, {2, 2, 2, 2, 4}}) {
    const Multigraph core = topological_core(make(ThetaSpec{lengths}).graph);
    std::multiset<int> got, want(lengths.begin(), lengths.end());
    for (const auto& e : core.edges) got.insert(e.length);
    CHECK(got == want);
  }
}

TEST_CASE("landmarks trace real paths") {
  for (const std::string s : {"barbell:6,6,1", "barbell:3,4,0", "theta:1,3,4", "theta:2,2,2,2", "onear:8,3,6", "cycle:6"}) {
    const FamilyGraph fg = make(parse_spec(s));
    for (const auto& path : fg.landmarks.paths)
      for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK_MESSAGE(fg.graph.has_edge(path[i], path[i + 1]), s);
    for (const auto& cycle : fg.landmarks.cycles) {
      REQUIRE(cycle.size() >= 3);
      for (std::size_t i = 0; i < cycle.size(); ++i)
        CHECK_MESSAGE(fg.graph.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]), s);
    }
  }
  const FamilyGraph theta = make(ThetaSpec{{2, 3, 4}});
  REQUIRE(theta.landmarks.hubs.size() == 2);
  std::set<int> covered;
  for (const auto& p : theta.landmarks.paths) covered.insert(p.begin(), p.end());
  CHECK(covered.size() == static_cast<std::size_t>(theta.graph.vertex_count()));
}

TEST_CASE("instance enumeration") {
  CHECK(formatted(Shape::Theta3, 5) == std::vector<std::string>{"theta:1,2,2", "theta:1,2,3", "theta:2,2,2"});
  CHECK(formatted(Shape::Barbell, 5) == std::vector<std::string>{"barbell:3,3,0"});
  CHECK(formatted(Shape::K4Subdivision, 4) == std::vector<std::string>{"k4s:1,1,1,1,1,1"});
  CHECK(formatted(Shape::Cycle, 5) == std::vector<std::string>{"cycle:3", "cycle:4", "cycle:5"});
  CHECK(formatted(Shape::Theta5, 7) == std::vector<std::string>{"theta:1,2,2,2,2", "theta:1,2,2,2,3", "theta:2,2,2,2,2"});
}

TEST_CASE("enumerated instances are distinct and within budget") {
  for (Shape shape : {Shape::Barbell, Shape::Theta3, Shape::Theta4, Shape::K4Subdivision, Shape::K33Subdivision}) {
    const auto specs = enumerate_instances(shape, 10);
    std::set<std::string> seen;
    int last = 0;
    for (const auto& s : specs) {
      const int n = spec_vertex_count(s);
      CHECK(n <= 10);
      CHECK(n >= last);
      last = n;
      CHECK(seen.insert(format_spec(s)).second);
    }
    CHECK_FALSE(specs.empty());
  }
}

TEST_CASE("subdivision lengths up to symmetry") {
  // Brute-force check: enumerated K4 subdivisions with at most 7 vertices
  // have pairwise non-isomorphic graphs and cover every length assignment.
  const auto specs = enumerate_instances(Shape::K4Subdivision, 7);
  std::set<std::vector<int>> canon;
  for (const auto& s : specs) canon.insert(std::get<K4SubdivisionSpec>(s).lengths);
  std::vector<int> l(6);
  for (l[0] = 1; l[0] <= 4; ++l[0])
    for (l[1] = 1; l[1] <= 4; ++l[1])
      for (l[2] = 1; l[2] <= 4; ++l[2])
        for (l[3] = 1; l[3] <= 4; ++l[3])
          for (l[4] = 1; l[4] <= 4; ++l[4])
            for (l[5] = 1; l[5] <= 4; ++l[5]) {
              int extra = 0;
              for (int x : l) extra += x - 1;
              if (4 + extra > 7) continue;
              CHECK(canon.count(canonical_k4_lengths(l)) == 1);
            }
  CHECK(canonical_k33_lengths({2, 1, 1, 1, 1, 1, 1, 1, 1}) == canonical_k33_lengths({1, 1, 1, 1, 1, 1, 1, 1, 2}));
}
