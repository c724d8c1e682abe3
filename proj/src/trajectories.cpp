#include "fslab/trajectories.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace fslab {
namespace {

SwapSequence walk(const std::vector<int>& vertices) {
  SwapSequence s;
  s.start_vertex = vertices.front();
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) s.steps.emplace_back(vertices[i], vertices[i + 1]);
  return s;
}

SwapSequence loop(const std::vector<int>& cycle) {
  std::vector<int> closed = cycle;
  closed.push_back(cycle.front());
  return walk(closed);
}

std::vector<std::vector<int>> sorted_paths(const FamilyGraph& fg) {
  auto paths = fg.landmarks.paths;
  std::stable_sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return paths;
}

}  // namespace

SwapSequence SwapSequence::inverse() const {
  SwapSequence s;
  s.start_vertex = steps.empty() ? start_vertex : steps.back().second;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) s.steps.emplace_back(it->second, it->first);
  return s;
}

SwapSequence& SwapSequence::then(const SwapSequence& next) {
  if (steps.empty() && next.steps.empty()) return *this;
  steps.insert(steps.end(), next.steps.begin(), next.steps.end());
  return *this;
}

SwapSequence rotation_sequence(const std::vector<int>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) throw std::invalid_argument("rotation needs a cycle of length >= 3");
  SwapSequence s;
  s.start_vertex = cycle.front();
  const SwapSequence lap = loop(cycle);
  for (int i = 0; i < k - 1; ++i) s.then(lap);
  return s;
}

SwapSequence rotation_sequence(int n) { return rotation_sequence(make(CycleSpec{n}).landmarks.cycles.front()); }

SwapSequence barbell_sequence(const std::vector<int>& loop1, const std::vector<int>& bridge,
                              const std::vector<int>& loop2) {
  const SwapSequence s1 = loop(loop1), s2 = walk(bridge), s3 = loop(loop2);
  SwapSequence s;
  s.start_vertex = loop1.front();
  s.then(s1).then(s2).then(s3).then(s2.inverse()).then(s1.inverse()).then(s2).then(s3.inverse()).then(s2.inverse());
  return s;
}

SwapSequence barbell_sequence(const BarbellSpec& spec) {
  const auto fg = make(spec);
  return barbell_sequence(fg.landmarks.cycles[0], fg.landmarks.paths[0], fg.landmarks.cycles[1]);
}

SwapSequence theta_block(const std::vector<std::vector<int>>& paths, int repeats) {
  if (paths.size() != 3) throw std::invalid_argument("theta sequence needs three paths");
  const SwapSequence p1 = walk(paths[0]), p2 = walk(paths[1]), p3 = walk(paths[2]);
  SwapSequence block;
  block.start_vertex = paths[0].front();
  block.then(p1).then(p2.inverse()).then(p3).then(p1.inverse()).then(p2).then(p3.inverse());
  SwapSequence s;
  s.start_vertex = block.start_vertex;
  for (int i = 0; i < repeats; ++i) s.then(block);
  return s;
}

SwapSequence theta_sequence(const std::vector<std::vector<int>>& paths, int repeats) {
  if (paths.size() != 3) throw std::invalid_argument("theta sequence needs three paths");
  const auto units = std::count_if(paths.begin(), paths.end(), [](const auto& p) { return p.size() == 2; });
  if (units > 1) throw std::invalid_argument("theta sequence allows at most one unit path");
  if ((units == 0 && repeats != 2) || (units == 1 && repeats != 3))
    throw std::invalid_argument("theta sequence repeats twice without a unit path, three times with one");
  return theta_block(paths, repeats);
}

SwapSequence theta_sequence(const ThetaSpec& spec, int repeats) { return theta_sequence(sorted_paths(make(spec)), repeats); }

SwapSequence theta4_sequence(const std::vector<std::vector<int>>& paths) {
  if (paths.size() != 4 || paths[0].size() != 2) throw std::invalid_argument("theta4 sequence needs four paths, the first an edge");
  if (paths[1].size() < 3) throw std::invalid_argument("theta4 sequence allows only one unit path");
  SwapSequence s;
  s.start_vertex = paths[0].front();
  for (std::size_t i = 0; i < kTheta4Word.size(); ++i) {
    const SwapSequence part = walk(paths[kTheta4Word[i] - '1']);
    s.then(i % 2 == 0 ? part : part.inverse());
  }
  return s;
}

SwapSequence theta4_sequence(const ThetaSpec& spec) { return theta4_sequence(sorted_paths(make(spec))); }

TrajectoryReport simulate(const Graph& x, const SwapSequence& seq) {
  const int n = x.vertex_count();
  if (seq.start_vertex < 0 || seq.start_vertex >= n) throw std::invalid_argument("start vertex out of range");
  std::string config(n, '\0');
  for (int v = 0; v < n; ++v)
    config[v] = static_cast<char>(v == seq.start_vertex ? n - 1 : (v < seq.start_vertex ? v : v - 1));
  const std::string initial = config;

  TrajectoryReport report;
  report.length = static_cast<int>(seq.steps.size());
  report.induced_subgraph = Graph(n);
  std::set<int> visited{seq.start_vertex};
  std::unordered_set<std::string> seen{config};
  bool repeated = false;
  int center = seq.start_vertex;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto [a, b] = seq.steps[i];
    int to;
    if (a == center) to = b;
    else if (b == center) to = a;
    else throw std::invalid_argument("step " + std::to_string(i) + " is not at the center's position");
    if (!x.has_edge(center, to)) throw std::invalid_argument("step " + std::to_string(i) + " is not an edge");
    std::swap(config[center], config[to]);
    if (!report.induced_subgraph.has_edge(center, to)) report.induced_subgraph.add_edge(center, to);
    center = to;
    visited.insert(center);
    // The final configuration may legitimately equal the first.
    if (i + 1 < seq.steps.size() && !seen.insert(config).second) repeated = true;
  }
  report.is_closed = config == initial;
  report.is_simple = report.is_closed && !repeated && report.length >= 3;
  report.tokens_returned = true;
  for (int v = 0; v < n; ++v)
    if (config[v] != initial[v] && initial[v] != static_cast<char>(n - 1)) report.tokens_returned = false;
  report.visited_vertices.assign(visited.begin(), visited.end());
  report.uses_whole_graph = static_cast<int>(visited.size()) == n && report.induced_subgraph.edge_count() == x.edge_count();
  return report;
}

}  // namespace fslab
