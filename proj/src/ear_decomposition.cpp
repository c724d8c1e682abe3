#include "fslab/ear_decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fslab/families.hpp"

namespace fslab {
namespace {

bool is_cycle_of(const Graph& g, const std::vector<int>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) return false;
  std::set<int> seen;
  for (int v : cycle) {
    if (v < 0 || v >= g.vertex_count() || !seen.insert(v).second) return false;
  }
  for (int i = 0; i < k; ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % k])) return false;
  return true;
}

}  // namespace

EarDecomposition decompose(const Graph& g, const std::optional<std::vector<int>>& initial_cycle) {
  if (!is_biconnected(g)) throw std::invalid_argument("ear decomposition needs a biconnected graph");
  if (initial_cycle && !is_cycle_of(g, *initial_cycle)) throw std::invalid_argument("initial cycle is not a cycle of the graph");
  const int n = g.vertex_count();

  // Preferred first child per vertex, so the DFS runs along the given cycle.
  std::vector<int> preferred(n, -1);
  const int root = initial_cycle ? (*initial_cycle)[0] : 0;
  if (initial_cycle)
    for (std::size_t i = 0; i + 1 < initial_cycle->size(); ++i) preferred[(*initial_cycle)[i]] = (*initial_cycle)[i + 1];

  std::vector<int> parent(n, -1), order_index(n, -1), order;
  std::vector<std::vector<int>> children_order(n);
  // Iterative DFS keeping an explicit neighbour cursor.
  struct Frame {
    int v;
    std::vector<int> nbrs;
    std::size_t next = 0;
  };
  auto neighbour_order = [&](int v) {
    std::vector<int> nb = g.neighbors(v);
    if (preferred[v] >= 0) {
      std::stable_partition(nb.begin(), nb.end(), [&](int w) { return w == preferred[v]; });
    }
    return nb;
  };
  std::vector<Frame> stack;
  order_index[root] = 0;
  order.push_back(root);
  stack.push_back({root, neighbour_order(root)});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == f.nbrs.size()) {
      stack.pop_back();
      continue;
    }
    int w = f.nbrs[f.next++];
    if (order_index[w] >= 0) continue;
    parent[w] = f.v;
    order_index[w] = static_cast<int>(order.size());
    order.push_back(w);
    stack.push_back({w, neighbour_order(w)});
  }

  // Back edges leave each vertex toward descendants; for the root with a
  // given cycle the closing edge must come first.
  std::vector<char> visited(n, 0);
  std::vector<std::vector<int>> chains;
  for (int v : order) {
    std::vector<int> back;
    for (int w : g.neighbors(v))
      if (parent[w] != v && parent[v] != w && order_index[w] > order_index[v]) back.push_back(w);
    std::sort(back.begin(), back.end(), [&](int a, int b) { return order_index[a] < order_index[b]; });
    if (initial_cycle && v == root) {
      const int closing = initial_cycle->back();
      std::stable_partition(back.begin(), back.end(), [&](int w) { return w == closing; });
    }
    for (int w : back) {
      visited[v] = 1;
      std::vector<int> chain{v};
      int cur = w;
      while (!visited[cur]) {
        visited[cur] = 1;
        chain.push_back(cur);
        cur = parent[cur];
      }
      chain.push_back(cur);
      chains.push_back(std::move(chain));
    }
  }

  EarDecomposition d;
  if (chains.empty()) throw std::invalid_argument("graph has no cycle");
  d.initial_cycle.assign(chains[0].begin(), chains[0].end() - 1);
  if (initial_cycle) {
    // The first chain walks the given cycle backwards; restore its direction.
    std::reverse(d.initial_cycle.begin() + 1, d.initial_cycle.end());
  }
  d.ears.assign(chains.begin() + 1, chains.end());
  return d;
}

bool validate(const EarDecomposition& d, const Graph& g) {
  if (!is_cycle_of(g, d.initial_cycle)) return false;
  std::set<Edge> used;
  std::set<int> covered;
  auto take = [&](int a, int b) { return g.has_edge(a, b) && used.insert(Edge(a, b)).second; };
  const auto& c = d.initial_cycle;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!take(c[i], c[(i + 1) % c.size()])) return false;
    covered.insert(c[i]);
  }
  for (const auto& ear : d.ears) {
    if (ear.size() < 2 || ear.front() == ear.back()) return false;
    if (!covered.count(ear.front()) || !covered.count(ear.back())) return false;
    std::set<int> inner;
    for (std::size_t i = 1; i + 1 < ear.size(); ++i)
      if (covered.count(ear[i]) || !inner.insert(ear[i]).second) return false;
    for (std::size_t i = 0; i + 1 < ear.size(); ++i)
      if (!take(ear[i], ear[i + 1])) return false;
    covered.insert(inner.begin(), inner.end());
  }
  return static_cast<int>(used.size()) == g.edge_count() && static_cast<int>(covered.size()) == g.vertex_count();
}

OneEarResult one_ear_canonical(const Graph& g) {
  if (!is_biconnected(g)) throw std::invalid_argument("one-ear form needs a biconnected graph");
  if (g.edge_count() - g.vertex_count() != 1) return NotOneEar{};
  if (is_hamiltonian(g)) return Hamiltonian{};

  // One extra edge over a cycle: two hubs joined by three paths.
  const Multigraph core = topological_core(g);
  std::vector<std::vector<int>> paths;
  for (const MultiEdge& e : core.edges) {
    std::vector<int> p = e.path;
    if (p.front() != core.original[0]) std::reverse(p.begin(), p.end());
    paths.push_back(std::move(p));
  }
  std::stable_sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const auto& arc = paths[0];
  const auto& ear = paths[1];
  const auto& longer = paths[2];
  const int k = static_cast<int>(arc.size()) - 1;
  const int m = static_cast<int>(ear.size()) - 1;
  const int l = static_cast<int>(longer.size()) - 1;

  OneEarForm form;
  form.n = g.vertex_count();
  form.v = k;
  form.w = form.n - m + 1;
  form.phi.assign(form.n, -1);
  const int hv = form.v - 1, hw = form.w - 1;
  for (int j = 0; j < k; ++j) form.phi[hv - j] = arc[j];
  form.phi[hw] = arc[k];
  for (int j = 1; j < m; ++j) form.phi[form.n - j] = ear[j];
  for (int j = 1; j < l; ++j) form.phi[hv + j] = longer[j];
  validate_spec(OneEarSpec{form.n, form.v, form.w});
  return form;
}

}  // namespace fslab
