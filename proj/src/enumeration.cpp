#include "fslab/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fslab {
namespace {

std::vector<int> refined_colours(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int w : g.neighbors(v)) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    const auto classes = [](const std::vector<int>& c) { return std::set<int>(c.begin(), c.end()).size(); };
    const bool stable = classes(next) == classes(colour);
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

std::string key_for_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::string key;
  key.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) key.push_back(g.has_edge(order[i], order[j]) ? '1' : '0');
  return key;
}

}  // namespace

std::string canonical_key(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  const auto colour = refined_colours(g);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return std::pair(colour[a], a) < std::pair(colour[b], b); });
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    cells.push_back({i, j});
    i = j;
  }
  std::string best;
  // Odometer over the permutations of each cell.
  std::function<void(std::size_t)> walk = [&](std::size_t c) {
    if (c == cells.size()) {
      auto key = key_for_order(g, order);
      if (best.empty() || key < best) best = std::move(key);
      return;
    }
    auto first = order.begin() + cells[c].first, last = order.begin() + cells[c].second;
    std::sort(first, last);
    do walk(c + 1);
    while (std::next_permutation(first, last));
  };
  walk(0);
  return best;
}

Graph graph_from_key(int n, const std::string& key) {
  if (static_cast<int>(key.size()) != n * (n - 1) / 2) throw std::invalid_argument("key length mismatch");
  Graph g(n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (key[k++] == '1') g.add_edge(i, j);
  return g;
}

std::vector<Graph> graphs_up_to_isomorphism(int n) {
  std::set<std::string> level{std::string()};
  for (int m = 1; m <= n; ++m) {
    std::set<std::string> next;
    for (const auto& key : level) {
      const Graph base = graph_from_key(m - 1, key);
      for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        Graph g(m);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for (int v = 0; v < m - 1; ++v)
          if (mask >> v & 1u) g.add_edge(v, m - 1);
        next.insert(canonical_key(g));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& key : level) out.push_back(graph_from_key(n, key));
  return out;
}

void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& fn) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  if (slots.size() >= 31) throw std::invalid_argument("too many labelled graphs to iterate");
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1ul) g.add_edge(slots[i].u, slots[i].v);
    fn(g);
  }
}

}  // namespace fslab
