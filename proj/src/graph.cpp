#include "fslab/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fslab {

Graph::Graph(int n) : n_(n), adj_(n), matrix_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
  matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
  matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
  edges_.emplace_back(u, v);
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && matrix_ == other.matrix_;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_biconnected(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;
  // Tarjan low-link: a cut vertex exists iff some articulation test fires.
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  bool cut = false;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= disc[v]) cut = true;
    }
    if (parent < 0 && children > 1) cut = true;
  };
  dfs(0, -1);
  return !cut;
}

bool is_acyclic(const Graph& g) {
  return g.edge_count() + static_cast<int>(connected_components(g).size()) == g.vertex_count();
}

int girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = kInfinity;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (best != kInfinity && 2 * dist[v] + 1 >= best) break;
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          int len = dist[v] + dist[w] + 1;
          if (best == kInfinity || len < best) best = len;
        }
      }
    }
  }
  return best;
}

ForestProfile forest_profile(const Graph& g) {
  ForestProfile p;
  p.is_forest = is_acyclic(g);
  if (!p.is_forest) return p;
  for (const auto& c : connected_components(g)) p.tree_sizes.push_back(static_cast<int>(c.size()));
  std::sort(p.tree_sizes.begin(), p.tree_sizes.end());
  if (!p.tree_sizes.empty()) {
    int d = 0;
    for (int s : p.tree_sizes) d = std::gcd(d, s);
    p.gcd_of_sizes = d;
  }
  return p;
}

bool has_two_disjoint_edges(const Graph& g) {
  const auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].u != es[j].u && es[i].u != es[j].v && es[i].v != es[j].u && es[i].v != es[j].v)
        return true;
  return false;
}

bool has_triangle(const Graph& g) {
  for (const Edge& e : g.edges())
    for (int w : g.neighbors(e.u))
      if (w != e.v && g.has_edge(w, e.v)) return true;
  return false;
}

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_hamiltonian(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return false;
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::function<bool(int, int)> extend = [&](int v, int depth) {
    if (depth == n) return g.has_edge(v, 0);
    for (int w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      if (extend(w, depth + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return extend(0, 1);
}

Graph edge_subgraph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  Graph out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

Graph relabel(const Graph& g, std::span<const int> new_label) {
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(new_label[e.u], new_label[e.v]);
  return out;
}

CycleList simple_cycles(const Graph& g, int max_length, std::size_t limit) {
  CycleList out;
  const int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  bool stopped = false;       // hit the limit
  bool longer_exist = false;  // some cycle exceeds max_length
  // A pruned branch only matters if it could still close into a cycle.
  auto closes_beyond_cap = [&](int start, int from) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (w == start && v != path.back()) return true;
        if (w < start || on_path[w] || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  };
  std::function<void(int, int)> dfs = [&](int start, int v) {
    if (stopped) return;
    for (int w : g.neighbors(v)) {
      if (w < start) continue;
      if (w == start) {
        // Each cycle is seen in two directions; keep the one whose second
        // vertex is smaller than its last.
        if (path.size() >= 3 && path[1] < path.back()) {
          if (out.cycles.size() >= limit) {
            stopped = true;
            return;
          }
          out.cycles.push_back(path);
        }
        continue;
      }
      if (on_path[w]) continue;
      if (static_cast<int>(path.size()) >= max_length) {
        if (!longer_exist && closes_beyond_cap(start, w)) longer_exist = true;
        continue;
      }
      on_path[w] = 1;
      path.push_back(w);
      dfs(start, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < n && !stopped; ++s) {
    on_path[s] = 1;
    path = {s};
    dfs(s, s);
    on_path[s] = 0;
  }
  out.complete = !stopped && !longer_exist;
  return out;
}

int local_connectivity(const Graph& g, int u, int w) {
  // Unit vertex capacities via splitting: in(v) = 2v, out(v) = 2v + 1.
  const int n = g.vertex_count();
  const int big = n + 1;
  std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == u || v == w) ? big : 1;
  for (const Edge& e : g.edges()) {
    cap[2 * e.u + 1][2 * e.v] = 1;
    cap[2 * e.v + 1][2 * e.u] = 1;
  }
  const int source = 2 * u + 1;
  const int sink = 2 * w;
  int flow = 0;
  while (true) {
    std::vector<int> prev(2 * n, -1);
    prev[source] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && prev[sink] < 0) {
      int a = q.front();
      q.pop();
      for (int b = 0; b < 2 * n; ++b)
        if (cap[a][b] > 0 && prev[b] < 0) {
          prev[b] = a;
          q.push(b);
        }
    }
    if (prev[sink] < 0) return flow;
    for (int b = sink; b != source; b = prev[b]) {
      --cap[prev[b]][b];
      ++cap[b][prev[b]];
    }
    ++flow;
  }
}

bool has_k4_minor(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<char> alive(n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || adj[v].size() > 2) continue;
      std::vector<int> nb(adj[v].begin(), adj[v].end());
      for (int w : nb) adj[w].erase(v);
      if (nb.size() == 2) {
        adj[nb[0]].insert(nb[1]);
        adj[nb[1]].insert(nb[0]);
      }
      adj[v].clear();
      alive[v] = 0;
      changed = true;
    }
  }
  return std::any_of(alive.begin(), alive.end(), [](char a) { return a != 0; });
}

Multigraph topological_core(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0 || !is_connected(g)) throw std::invalid_argument("topological_core needs a connected graph");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) throw std::invalid_argument("topological_core needs minimum degree 2");

  Multigraph core;
  std::vector<int> index(n, -1);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) {
      index[v] = core.vertex_count++;
      core.original.push_back(v);
    }

  if (core.vertex_count == 0) {
    core.vertex_count = 1;
    core.original = {0};
    MultiEdge loop{0, 0, n, {0}};
    int prev = 0, cur = g.neighbors(0)[0];
    while (cur != 0) {
      loop.path.push_back(cur);
      const auto& nb = g.neighbors(cur);
      int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    loop.path.push_back(0);
    core.edges.push_back(std::move(loop));
    return core;
  }

  std::set<Edge> used;
  for (int b : core.original) {
    for (int first : g.neighbors(b)) {
      if (used.count(Edge(b, first))) continue;
      std::vector<int> path{b};
      int prev = b, cur = first;
      used.insert(Edge(b, first));
      while (index[cur] < 0) {
        path.push_back(cur);
        const auto& nb = g.neighbors(cur);
        int next = nb[0] == prev ? nb[1] : nb[0];
        used.insert(Edge(cur, next));
        prev = cur;
        cur = next;
      }
      path.push_back(cur);
      core.edges.push_back(MultiEdge{index[b], index[cur], static_cast<int>(path.size()) - 1, std::move(path)});
    }
  }
  return core;
}

std::string to_json_string(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j.dump();
}

Graph graph_from_json_string(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (!j.contains("n") || !j.contains("edges")) throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fslab
