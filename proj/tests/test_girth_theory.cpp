#include <doctest.h>

#include <set>

#include "fslab/enumeration.hpp"
#include "fslab/families.hpp"
#include "fslab/fs_explicit.hpp"
#include "fslab/girth_theory.hpp"
#include "fslab/star_search.hpp"

using namespace fslab;

namespace {

Graph spec(const std::string& s) { return make(parse_spec(s)).graph; }

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> pairs) {
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

int search_value(const Graph& x) {
  const GirthReport r = girth_star(x);
  REQUIRE(r.status != GirthReport::Status::UnknownAbove);
  return r.status == GirthReport::Status::Infinite ? kInfinity : r.value;
}

bool exact(const GirthPrediction& p) { return p.kind == GirthPrediction::Kind::Exact; }

}  // namespace

TEST_CASE("girth four") {
  CHECK(girth_is_four(spec("path:4"), spec("path:4")));
  CHECK(girth_is_four(spec("complete:3"), spec("complete:3")));
  CHECK_FALSE(girth_is_four(spec("star:4"), spec("complete:4")));
  for (int n = 3; n <= 8; ++n) {
    const Graph star = make(StarSpec{n}).graph;
    for (const Graph& x : graphs_up_to_isomorphism(n)) CHECK_FALSE(girth_is_four(x, star));
  }
}

TEST_CASE("girth four against the explicit oracle, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    const auto classes = graphs_up_to_isomorphism(n);
    for (const Graph& x : classes)
      for (const Graph& y : classes) CHECK((girth_explicit(build(x, y)) == 4) == girth_is_four(x, y));
  }
}

TEST_CASE("unicyclic formula") {
  const auto c6 = unicyclic_girth(spec("cycle:6"));
  REQUIRE(c6);
  CHECK(c6->value == 30);
  CHECK(exact(*c6));
  const auto tail = unicyclic_girth(from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}}));
  REQUIRE(tail);
  CHECK(tail->value == 6);
  CHECK_FALSE(unicyclic_girth(spec("theta:2,2,2")));
  CHECK_FALSE(unicyclic_girth(spec("path:5")));
}

TEST_CASE("barbell formula") {
  const auto a = barbell_girth({6, 6, 0});
  CHECK(a.value == 24);
  CHECK(exact(a));
  const auto b = barbell_girth({6, 6, 1});
  CHECK(b.value == 28);
  CHECK(exact(b));
  const auto c = barbell_girth({3, 3, 0});
  CHECK(c.value == 12);
  CHECK_FALSE(exact(c));
  CHECK(c.competing_bound == 6);
}

TEST_CASE("theta formulas") {
  const auto a = theta_girth({4, 4, 4});
  CHECK(a.value == 48);
  CHECK(exact(a));
  const auto b = theta_girth({12, 1, 12});
  CHECK(b.value == 150);
  CHECK(exact(b));
  const auto c = theta_girth({2, 2, 2});
  CHECK(c.value == 24);
  CHECK_FALSE(exact(c));
  CHECK_THROWS(theta_girth({1, 1, 3}));

  const auto d = theta4_girth({1, 8, 8, 8});
  CHECK(d.value == 68);
  CHECK(exact(d));
  const auto e = theta4_girth({1, 2, 2, 2});
  CHECK(e.value == 20);
  CHECK_FALSE(exact(e));
  const auto f = theta4_girth({1, 9, 9, 9});
  CHECK(f.value == 76);
  CHECK(exact(f));
  CHECK_THROWS(theta4_girth({1, 1, 2, 3}));
  CHECK_THROWS(theta4_girth({2, 2, 2, 2}));
}

TEST_CASE("predictions are even and exact ones need their preconditions") {
  for (int m1 = 3; m1 <= 8; ++m1)
    for (int m2 = m1; m2 <= 8; ++m2)
      for (int d = 0; d <= 3; ++d) {
        const auto p = barbell_girth({m1, m2, d});
        CHECK(p.value % 2 == 0);
        if (exact(p)) CHECK(p.preconditions_met);
      }
  for (int a = 1; a <= 6; ++a)
    for (int b = std::max(a, 2); b <= 6; ++b)
      for (int c = b; c <= 6; ++c) {
        const auto p = theta_girth({a, b, c});
        CHECK(p.value % 2 == 0);
        if (exact(p)) CHECK(p.preconditions_met);
      }
}

TEST_CASE("exact formulas agree with search") {
  for (const std::string s : {"barbell:6,6,0", "theta:4,4,4", "cycle:6"}) {
    const auto c = classify(spec(s));
    const auto p = shape_formula(c);
    REQUIRE(p);
    CHECK(exact(*p));
    CHECK(p->value == search_value(spec(s)));
  }
}

TEST_CASE("unicyclic graphs on at most 8 vertices") {
  for (int n = 3; n <= 8; ++n)
    for (const Graph& x : graphs_up_to_isomorphism(n)) {
      if (!is_connected(x) || x.edge_count() != n) continue;
      const auto p = unicyclic_girth(x);
      REQUIRE(p);
      const int k = girth(x);
      CHECK(p->value == k * (k - 1));
      CHECK(search_value(x) == p->value);
    }
}

TEST_CASE("bounds never undercut search") {
  for (const std::string s : {"theta:2,2,2", "theta:2,2,3", "theta:2,3,3", "barbell:3,3,0", "barbell:3,4,2", "theta:1,2,2,2",
                              "theta:1,2,3,3", "theta:2,2,2,2", "k4s:1,1,1,1,1,1", "k4s:1,1,2,2,1,1"}) {
    const Graph x = spec(s);
    const int g = search_value(x);
    const auto pred = predicted_girth(x);
    CHECK_MESSAGE(pred.prediction.value >= g, s);
    if (exact(pred.prediction)) CHECK_MESSAGE(pred.prediction.value == g, s);
    if (const auto f = shape_formula(classify(x))) CHECK_MESSAGE(f->value >= g, s);
    const auto q = quad_bound(x);
    REQUIRE(q);
    CHECK(*q >= g);
  }
}

TEST_CASE("classification round-trips family specs") {
  auto check = [](const std::string& s, ShapeKind kind, std::vector<int> params) {
    const ShapeClassification c = classify(spec(s));
    CHECK_MESSAGE(c.shape == kind, s);
    CHECK_MESSAGE(c.parameters == params, s);
    if (c.proven_minimal) CHECK(c.possibly_minimal);
  };
  check("cycle:9", ShapeKind::Cycle, {9});
  check("barbell:6,6,1", ShapeKind::Barbell, {6, 6, 1});
  check("barbell:5,3,0", ShapeKind::Barbell, {3, 5, 0});
  check("theta:4,4,4", ShapeKind::Theta, {4, 4, 4});
  check("theta:12,1,12", ShapeKind::TildeTheta, {1, 12, 12});
  check("theta:1,8,8,8", ShapeKind::Theta4, {1, 8, 8, 8});
  check("theta:2,2,2,2,2", ShapeKind::Theta5, {2, 2, 2, 2, 2});
  check("theta:1,3,3,3,3,3", ShapeKind::Other, classify(spec("theta:1,3,3,3,3,3")).parameters);
  check("k4s:1,1,1,1,1,1", ShapeKind::K4Subdivision, {1, 1, 1, 1, 1, 1});
  check("k33s:1,1,1,1,1,1,1,1,1", ShapeKind::K33Subdivision, {1, 1, 1, 1, 1, 1, 1, 1, 1});

  for (const auto shape : {Shape::Barbell, Shape::Theta3, Shape::Theta4, Shape::Theta5, Shape::K4Subdivision, Shape::K33Subdivision})
    for (const auto& s : enumerate_instances(shape, 11)) {
      const ShapeClassification c = classify(make(s).graph);
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BarbellSpec>) {
              CHECK(c.parameters == std::vector<int>{std::min(v.m1, v.m2), std::max(v.m1, v.m2), v.d});
            } else if constexpr (std::is_same_v<T, ThetaSpec>) {
              std::vector<int> sorted = v.lengths;
              std::sort(sorted.begin(), sorted.end());
              CHECK(c.parameters == sorted);
            } else if constexpr (std::is_same_v<T, K4SubdivisionSpec>) {
              CHECK(c.parameters == canonical_k4_lengths(v.lengths));
            } else if constexpr (std::is_same_v<T, K33SubdivisionSpec>) {
              CHECK(c.parameters == canonical_k33_lengths(v.lengths));
            }
          },
          s);
    }
}

TEST_CASE("minimality flags") {
  CHECK(classify(spec("cycle:9")).proven_minimal);
  CHECK(classify(spec("barbell:6,6,1")).proven_minimal);
  CHECK_FALSE(classify(spec("barbell:3,3,0")).possibly_minimal);
  CHECK(classify(spec("theta:1,8,8,8")).proven_minimal);
  const auto t5 = classify(spec("theta:2,2,2,2,2"));
  CHECK_FALSE(t5.proven_minimal);
  CHECK(t5.possibly_minimal);
  CHECK_FALSE(classify(spec("theta:1,3,3,3,3,3")).possibly_minimal);
  CHECK_FALSE(classify(spec("path:5")).possibly_minimal);
}

TEST_CASE("predicted girth") {
  const auto c7 = predicted_girth(spec("cycle:7"));
  CHECK(c7.prediction.value == 42);
  CHECK(exact(c7.prediction));

  // Barbell(6,6,0) with a chord making a triangle in the first cycle.
  Graph chord = spec("barbell:6,6,0");
  chord.add_edge(0, 2);
  const auto tri = predicted_girth(chord);
  CHECK(tri.prediction.value == 6);
  CHECK(exact(tri.prediction));

  const auto t = predicted_girth(spec("theta:4,4,4"));
  CHECK(t.prediction.value == 48);
  CHECK(exact(t.prediction));
}

TEST_CASE("proven-minimal shapes beat every proper subgraph") {
  for (const std::string s : {"barbell:6,6,0", "barbell:7,7,1", "theta:4,4,4", "theta:1,12,12", "cycle:8"}) {
    const Graph x = spec(s);
    REQUIRE(classify(x).proven_minimal);
    const auto pred = predicted_girth(x);
    REQUIRE(pred.best_candidate >= 0);
    const auto& best = pred.candidates[pred.best_candidate];
    CHECK(static_cast<int>(best.edges.size()) == x.edge_count());
    for (const auto& cand : pred.candidates)
      if (static_cast<int>(cand.edges.size()) < x.edge_count()) CHECK_MESSAGE(cand.prediction.value > pred.prediction.value, s);
  }
}

TEST_CASE("barbell or theta witnesses") {
  auto valid = [](const Graph& x, const SubgraphWitness& w) {
    for (const Edge& e : w.edges)
      if (!x.has_edge(e.u, e.v)) return false;
    const Graph sub = edge_subgraph(x.vertex_count(), w.edges);
    std::vector<int> used;
    for (int v = 0; v < x.vertex_count(); ++v)
      if (sub.degree(v) > 0) used.push_back(v);
    const Graph compact = induced_subgraph(sub, used);
    const ShapeKind kind = classify(compact).shape;
    if (w.shape == ShapeKind::Barbell) return kind == ShapeKind::Barbell;
    return kind == ShapeKind::Theta || kind == ShapeKind::TildeTheta;
  };
  const auto k4 = find_barbell_or_theta(spec("complete:4"));
  REQUIRE(k4);
  CHECK(k4->shape != ShapeKind::Barbell);
  CHECK(valid(spec("complete:4"), *k4));

  const auto b = find_barbell_or_theta(spec("barbell:3,3,2"));
  REQUIRE(b);
  CHECK(b->shape == ShapeKind::Barbell);
  CHECK(b->edges.size() == 8);

  CHECK_FALSE(find_barbell_or_theta(spec("cycle:8")));
  CHECK_FALSE(find_barbell_or_theta(spec("path:8")));

  for (int n = 4; n <= 7; ++n)
    for (const Graph& x : graphs_up_to_isomorphism(n)) {
      const auto w = find_barbell_or_theta(x);
      bool two_in_one = false;
      for (const auto& comp : connected_components(x)) {
        const Graph sub = induced_subgraph(x, comp);
        if (sub.edge_count() - sub.vertex_count() + 1 >= 2) two_in_one = true;
      }
      CHECK(w.has_value() == two_in_one);
      if (w) CHECK_MESSAGE(valid(x, *w), to_json_string(x));
    }
}
