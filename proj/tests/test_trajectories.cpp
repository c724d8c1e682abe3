#include <doctest.h>

#include "fslab/families.hpp"
#include "fslab/star_search.hpp"
#include "fslab/trajectories.hpp"

using namespace fslab;

namespace {

Graph spec(const std::string& s) { return make(parse_spec(s)).graph; }

void check_full_simple(const Graph& x, const SwapSequence& seq, int expected_length) {
  const TrajectoryReport r = simulate(x, seq);
  CHECK(r.is_closed);
  CHECK(r.is_simple);
  CHECK(r.tokens_returned);
  CHECK(r.length == expected_length);
  CHECK(r.uses_whole_graph);
  CHECK(r.induced_subgraph == x);
}

}  // namespace

TEST_CASE("rotation around a cycle") {
  CHECK(rotation_sequence(3).steps.size() == 6);
  CHECK(rotation_sequence(5).steps.size() == 20);
  for (int n = 3; n <= 9; ++n) check_full_simple(make(CycleSpec{n}).graph, rotation_sequence(n), n * (n - 1));
}

TEST_CASE("barbell trajectories") {
  for (const BarbellSpec s : {BarbellSpec{6, 6, 1}, BarbellSpec{3, 3, 0}, BarbellSpec{6, 6, 0}, BarbellSpec{3, 5, 2}, BarbellSpec{4, 7, 3}}) {
    check_full_simple(make(s).graph, barbell_sequence(s), 2 * (s.m1 + s.m2 + 2 * s.d));
  }
}

TEST_CASE("theta trajectories") {
  check_full_simple(spec("theta:4,4,4"), theta_sequence(ThetaSpec{{4, 4, 4}}, 2), 48);
  check_full_simple(spec("theta:1,12,12"), theta_sequence(ThetaSpec{{1, 12, 12}}, 3), 150);
  CHECK_THROWS(theta_sequence(ThetaSpec{{4, 4, 4}}, 3));
  CHECK_THROWS(theta_sequence(ThetaSpec{{1, 4, 4}}, 2));

  const FamilyGraph fg = make(ThetaSpec{{4, 4, 4}});
  const TrajectoryReport once = simulate(fg.graph, theta_block(fg.landmarks.paths, 1));
  CHECK_FALSE(once.is_closed);
  CHECK_FALSE(once.is_simple);
}

TEST_CASE("theta4 trajectories") {
  check_full_simple(spec("theta:1,8,8,8"), theta4_sequence(ThetaSpec{{1, 8, 8, 8}}), 68);
  check_full_simple(spec("theta:1,2,3,4"), theta4_sequence(ThetaSpec{{1, 2, 3, 4}}), 26);
  int counts[5] = {};
  for (char c : kTheta4Word) ++counts[c - '0'];
  CHECK(counts[1] == 4);
  CHECK(counts[2] == 4);
  CHECK(counts[3] == 2);
  CHECK(counts[4] == 2);
  CHECK(kTheta4Word.size() == 12);
}

TEST_CASE("sequence algebra") {
  const SwapSequence s = rotation_sequence(4);
  const SwapSequence inv = s.inverse();
  REQUIRE(inv.steps.size() == s.steps.size());
  CHECK(inv.steps.front().first == s.steps.back().second);
  CHECK(inv.start_vertex == s.start_vertex);
  SwapSequence both = s;
  both.then(inv);
  const TrajectoryReport r = simulate(make(CycleSpec{4}).graph, both);
  CHECK(r.is_closed);
  CHECK_FALSE(r.is_simple);
}

TEST_CASE("out and back is not a cycle") {
  const Graph c5 = spec("cycle:5");
  const TrajectoryReport r = simulate(c5, SwapSequence{0, {{0, 1}, {1, 0}}});
  CHECK(r.is_closed);
  CHECK_FALSE(r.is_simple);
  CHECK(r.length == 2);
  CHECK_FALSE(r.uses_whole_graph);
}

TEST_CASE("simulate rejects steps away from the center") {
  const Graph c5 = spec("cycle:5");
  CHECK_THROWS(simulate(c5, SwapSequence{0, {{1, 2}}}));
  CHECK_THROWS(simulate(c5, SwapSequence{0, {{0, 2}}}));
}

TEST_CASE("trajectories against search up to 11 vertices") {
  // Equal when the exactness condition holds, never shorter otherwise.
  struct Case {
    FamilySpec spec;
    SwapSequence seq;
    bool exact;
  };
  const std::vector<Case> cases{
      {BarbellSpec{6, 6, 0}, barbell_sequence(BarbellSpec{6, 6, 0}), true},
      {BarbellSpec{3, 3, 0}, barbell_sequence(BarbellSpec{3, 3, 0}), false},
      {BarbellSpec{4, 5, 1}, barbell_sequence(BarbellSpec{4, 5, 1}), false},
      {ThetaSpec{{2, 2, 2}}, theta_sequence(ThetaSpec{{2, 2, 2}}, 2), false},
      {ThetaSpec{{3, 3, 3}}, theta_sequence(ThetaSpec{{3, 3, 3}}, 2), false},
      {ThetaSpec{{1, 4, 5}}, theta_sequence(ThetaSpec{{1, 4, 5}}, 3), false},
      {ThetaSpec{{1, 2, 3, 4}}, theta4_sequence(ThetaSpec{{1, 2, 3, 4}}), false},
      {CycleSpec{7}, rotation_sequence(7), true},
  };
  for (const auto& c : cases) {
    const Graph x = make(c.spec).graph;
    const TrajectoryReport r = simulate(x, c.seq);
    const GirthReport g = girth_star(x);
    REQUIRE(g.status == GirthReport::Status::Exact);
    CHECK_MESSAGE(r.length >= g.value, format_spec(c.spec));
    if (c.exact) CHECK_MESSAGE(r.length == g.value, format_spec(c.spec));
  }
}
