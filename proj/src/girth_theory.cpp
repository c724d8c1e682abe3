#include "fslab/girth_theory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace fslab {
namespace {

GirthPrediction exact_or_bound(int value, int threshold, const std::string& rule) {
  GirthPrediction p;
  p.value = value;
  p.rule = rule;
  p.preconditions_met = value < threshold;
  p.kind = p.preconditions_met ? GirthPrediction::Kind::Exact : GirthPrediction::Kind::UpperBound;
  return p;
}

GirthPrediction cycle_prediction(int k) {
  GirthPrediction p;
  p.value = k * (k - 1);
  p.kind = GirthPrediction::Kind::Exact;
  p.rule = "unicyclic";
  p.preconditions_met = true;
  p.competing_bound = p.value;
  return p;
}

std::vector<int> path_from(const MultiEdge& e, int start) {
  std::vector<int> p = e.path;
  if (p.front() != start) std::reverse(p.begin(), p.end());
  return p;
}

// Cycle as a vertex list without the repeated endpoint.
std::vector<int> open_loop(const MultiEdge& e) { return {e.path.begin(), e.path.end() - 1}; }

std::vector<Edge> cycle_edges(const std::vector<int>& cycle) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) out.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  return out;
}

std::vector<Edge> path_edges(const std::vector<int>& path) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.emplace_back(path[i], path[i + 1]);
  return out;
}

// Classifies the subgraph formed by `edges`, reporting landmarks in the
// original labels.
ShapeClassification classify_edges(const std::vector<Edge>& edges) {
  std::vector<int> vertices;
  for (const Edge& e : edges) {
    vertices.push_back(e.u);
    vertices.push_back(e.v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::map<int, int> local;
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(vertices.size()));
  for (const Edge& e : edges)
    if (!h.has_edge(local[e.u], local[e.v])) h.add_edge(local[e.u], local[e.v]);
  ShapeClassification c = classify(h);
  auto lift = [&](std::vector<int>& vs) {
    for (int& v : vs) v = vertices[v];
  };
  lift(c.layout.hubs);
  for (auto& cyc : c.layout.cycles) lift(cyc);
  for (auto& p : c.layout.paths) lift(p);
  return c;
}

std::vector<Edge> merge_edges(std::vector<Edge> a, const std::vector<Edge>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Shortest path from `from` to `to` whose inner vertices avoid both sets.
std::vector<int> connecting_path(const Graph& g, const std::vector<char>& from, const std::vector<char>& to) {
  const int n = g.vertex_count();
  std::vector<int> prev(n, -2);
  std::queue<int> q;
  for (int v = 0; v < n; ++v)
    if (from[v]) {
      prev[v] = -1;
      q.push(v);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (prev[w] != -2) continue;
      if (from[w]) continue;
      prev[w] = v;
      if (to[w]) {
        std::vector<int> path;
        for (int c = w; c != -1; c = prev[c]) path.push_back(c);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push(w);
    }
  }
  return {};
}

// Any cycle among the given vertices of g, via DFS back edges.
std::vector<int> any_cycle(const Graph& g, const std::vector<int>& within) {
  const int n = g.vertex_count();
  std::vector<char> allowed(n, 0);
  for (int v : within) allowed[v] = 1;
  std::vector<int> state(n, 0), parent(n, -1);
  std::vector<int> found;
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : g.neighbors(v)) {
      if (!allowed[w] || w == parent[v]) continue;
      if (state[w] == 1) {
        for (int c = v; c != w; c = parent[c]) found.push_back(c);
        found.push_back(w);
        return true;
      }
      if (state[w] == 0) {
        parent[w] = v;
        if (dfs(w)) return true;
      }
    }
    state[v] = 2;
    return false;
  };
  for (int v : within)
    if (state[v] == 0 && dfs(v)) return found;
  return {};
}

}  // namespace

std::string to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Cycle: return "cycle";
    case ShapeKind::Barbell: return "barbell";
    case ShapeKind::Theta: return "theta";
    case ShapeKind::TildeTheta: return "tilde_theta";
    case ShapeKind::Theta4: return "theta4";
    case ShapeKind::Theta5: return "theta5";
    case ShapeKind::K4Subdivision: return "k4_subdivision";
    case ShapeKind::K33Subdivision: return "k33_subdivision";
    case ShapeKind::Other: return "other";
  }
  return "other";
}

bool girth_is_four(const Graph& x, const Graph& y) {
  return (has_two_disjoint_edges(x) && has_two_disjoint_edges(y)) || (has_triangle(x) && has_triangle(y));
}

std::optional<int> quad_bound(const Graph& x) {
  const int g = girth(x);
  if (g == kInfinity) return std::nullopt;
  return g * (g - 1);
}

std::optional<GirthPrediction> unicyclic_girth(const Graph& x) {
  if (!is_connected(x) || x.edge_count() != x.vertex_count()) return std::nullopt;
  return cycle_prediction(girth(x));
}

GirthPrediction barbell_girth(const BarbellSpec& spec) {
  validate_spec(spec);
  const int quad = std::min(spec.m1 * (spec.m1 - 1), spec.m2 * (spec.m2 - 1));
  GirthPrediction p = exact_or_bound(2 * (spec.m1 + spec.m2 + 2 * spec.d), quad, "barbell");
  p.competing_bound = quad;
  return p;
}

GirthPrediction theta_girth(std::vector<int> lengths) {
  if (lengths.size() != 3) throw std::invalid_argument("theta formula needs three lengths");
  validate_spec(ThetaSpec{lengths});
  std::sort(lengths.begin(), lengths.end());
  const int c1 = lengths[0] + lengths[1], c2 = lengths[1] + lengths[2], c = lengths[0] + lengths[2];
  const int sum = c1 + c2 + c;
  const int quad = std::min({c1 * (c1 - 1), c2 * (c2 - 1), c * (c - 1)});
  const bool unit = lengths[0] == 1;
  GirthPrediction p = exact_or_bound((unit ? 3 : 2) * sum, quad, unit ? "tilde_theta" : "theta");
  p.competing_bound = quad;
  return p;
}

GirthPrediction theta4_girth(std::vector<int> lengths) {
  if (lengths.size() != 4) throw std::invalid_argument("theta4 formula needs four lengths");
  std::sort(lengths.begin(), lengths.end());
  if (lengths[0] != 1 || lengths[1] < 2) throw std::invalid_argument("theta4 formula needs exactly one unit length");
  const int p2 = lengths[1], p3 = lengths[2], p4 = lengths[3];
  const int threshold = std::min({p2 * (p2 + 1), 4 * (p2 + p3 + p4), 6 * (1 + p2 + p3)});
  GirthPrediction p = exact_or_bound(4 + 4 * p2 + 2 * (p3 + p4), threshold, "theta4_word");
  p.competing_bound = p2 * (p2 + 1);
  return p;
}

ShapeClassification classify(const Graph& x) {
  if (!is_connected(x)) throw std::invalid_argument("classify needs a connected graph");
  ShapeClassification c;
  for (int v = 0; v < x.vertex_count(); ++v)
    if (x.degree(v) < 2) return c;
  const Multigraph core = topological_core(x);
  std::vector<const MultiEdge*> loops, links;
  for (const auto& e : core.edges) (e.u == e.v ? loops : links).push_back(&e);

  if (core.vertex_count == 1 && loops.size() == 1) {
    c.shape = ShapeKind::Cycle;
    c.parameters = {loops[0]->length};
    c.layout.hubs = {core.original[0]};
    c.layout.cycles = {open_loop(*loops[0])};
  } else if ((core.vertex_count == 1 && loops.size() == 2) ||
             (core.vertex_count == 2 && loops.size() == 2 && links.size() == 1 && loops[0]->u != loops[1]->u)) {
    c.shape = ShapeKind::Barbell;
    const MultiEdge* a = loops[0];
    const MultiEdge* b = loops[1];
    if (a->length > b->length) std::swap(a, b);
    const int hub_a = core.original[a->u], hub_b = core.original[b->u];
    const int d = links.empty() ? 0 : links[0]->length;
    c.parameters = {a->length, b->length, d};
    c.layout.hubs = {hub_a, hub_b};
    c.layout.cycles = {open_loop(*a), open_loop(*b)};
    c.layout.paths = {links.empty() ? std::vector<int>{hub_a} : path_from(*links[0], hub_a)};
  } else if (core.vertex_count == 2 && loops.empty()) {
    std::vector<std::vector<int>> paths;
    for (const auto* e : links) paths.push_back(path_from(*e, core.original[0]));
    std::stable_sort(paths.begin(), paths.end(), [](const auto& p, const auto& q) { return p.size() < q.size(); });
    for (const auto& p : paths) c.parameters.push_back(static_cast<int>(p.size()) - 1);
    const std::size_t k = paths.size();
    if (k == 3) c.shape = c.parameters[0] == 1 ? ShapeKind::TildeTheta : ShapeKind::Theta;
    else if (k == 4) c.shape = ShapeKind::Theta4;
    else if (k == 5) c.shape = ShapeKind::Theta5;
    c.layout.hubs = {core.original[0], core.original[1]};
    c.layout.paths = std::move(paths);
  } else if (loops.empty() && (core.vertex_count == 4 || core.vertex_count == 6)) {
    std::set<std::pair<int, int>> pairs;
    for (const auto* e : links) pairs.insert({std::min(e->u, e->v), std::max(e->u, e->v)});
    const bool simple = pairs.size() == links.size();
    if (core.vertex_count == 4 && links.size() == 6 && simple) {
      c.shape = ShapeKind::K4Subdivision;
      std::map<std::pair<int, int>, int> length;
      for (const auto* e : links) length[{std::min(e->u, e->v), std::max(e->u, e->v)}] = e->length;
      std::vector<int> lengths;
      for (const auto& [key, l] : length) lengths.push_back(l);
      c.parameters = canonical_k4_lengths(lengths);
    } else if (core.vertex_count == 6 && links.size() == 9 && simple) {
      Graph shell(6);
      for (const auto& [a, b] : pairs) shell.add_edge(a, b);
      if (is_bipartite(shell)) {
        // Order the sides so pair (i, j) maps onto slot 3 i + j.
        std::vector<int> side(6, -1);
        side[0] = 0;
        for (int w : shell.neighbors(0)) side[w] = 1;
        for (int v = 0; v < 6; ++v)
          if (side[v] < 0) side[v] = 0;
        std::vector<int> left, right;
        for (int v = 0; v < 6; ++v) (side[v] == 0 ? left : right).push_back(v);
        if (left.size() == 3) {
          std::vector<int> lengths(9);
          for (const auto* e : links) {
            int a = e->u, b = e->v;
            if (side[a] == 1) std::swap(a, b);
            const int i = static_cast<int>(std::find(left.begin(), left.end(), a) - left.begin());
            const int j = static_cast<int>(std::find(right.begin(), right.end(), b) - right.begin());
            lengths[3 * i + j] = e->length;
          }
          c.shape = ShapeKind::K33Subdivision;
          c.parameters = canonical_k33_lengths(lengths);
        }
      }
    }
    if (c.shape != ShapeKind::Other) {
      for (int v : core.original) c.layout.hubs.push_back(v);
      for (const auto* e : links) c.layout.paths.push_back(e->path);
    }
  }

  const auto formula = shape_formula(c);
  c.proven_minimal = formula && formula->kind == GirthPrediction::Kind::Exact;
  c.possibly_minimal = c.proven_minimal || c.shape == ShapeKind::Theta4 || c.shape == ShapeKind::Theta5 ||
                       c.shape == ShapeKind::K4Subdivision || c.shape == ShapeKind::K33Subdivision;
  return c;
}

std::optional<GirthPrediction> shape_formula(const ShapeClassification& c) {
  switch (c.shape) {
    case ShapeKind::Cycle: return cycle_prediction(c.parameters[0]);
    case ShapeKind::Barbell: return barbell_girth(BarbellSpec{c.parameters[0], c.parameters[1], c.parameters[2]});
    case ShapeKind::Theta:
    case ShapeKind::TildeTheta: return theta_girth(c.parameters);
    case ShapeKind::Theta4:
      if (c.parameters[0] == 1) return theta4_girth(c.parameters);
      return std::nullopt;
    default: return std::nullopt;
  }
}

PredictedGirth predicted_girth(const Graph& x, const PredictionBudget& budget) {
  if (!is_connected(x)) throw std::invalid_argument("predicted girth needs a connected graph");
  PredictedGirth out;
  if (is_acyclic(x)) {
    out.prediction.kind = GirthPrediction::Kind::Exact;
    out.prediction.rule = "acyclic";
    out.prediction.preconditions_met = true;
    return out;
  }
  const int n = x.vertex_count();
  // With at most two independent cycles there are at most three cycles in
  // all, so the length cap is dropped.
  const int cyclomatic = x.edge_count() - n + 1;
  const auto cycles = simple_cycles(x, cyclomatic <= 2 ? n : budget.max_cycle_length, budget.max_cycles);
  out.enumeration_complete = cycles.complete;
  bool has_triangle_cycle = false;
  std::vector<std::vector<Edge>> edge_sets;
  std::vector<std::vector<char>> members;
  for (const auto& cyc : cycles.cycles) {
    SubgraphCandidate cand;
    cand.edges = cycle_edges(cyc);
    std::sort(cand.edges.begin(), cand.edges.end());
    cand.shape.shape = ShapeKind::Cycle;
    cand.shape.parameters = {static_cast<int>(cyc.size())};
    cand.shape.proven_minimal = cand.shape.possibly_minimal = true;
    cand.shape.layout.hubs = {cyc.front()};
    cand.shape.layout.cycles = {cyc};
    cand.prediction = cycle_prediction(static_cast<int>(cyc.size()));
    has_triangle_cycle = has_triangle_cycle || cyc.size() == 3;
    edge_sets.push_back(cand.edges);
    std::vector<char> in(n, 0);
    for (int v : cyc) in[v] = 1;
    members.push_back(std::move(in));
    out.candidates.push_back(std::move(cand));
  }

  // A triangle already gives the smallest value any star graph allows.
  if (!has_triangle_cycle) {
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < edge_sets.size() && out.enumeration_complete; ++i) {
      for (std::size_t j = i + 1; j < edge_sets.size(); ++j) {
        if (++pairs > budget.max_pairs) {
          out.enumeration_complete = false;
          break;
        }
        int shared = 0;
        for (int v = 0; v < n; ++v) shared += members[i][v] && members[j][v];
        std::vector<Edge> edges = merge_edges(edge_sets[i], edge_sets[j]);
        if (shared == 0) {
          const auto bridge = connecting_path(x, members[i], members[j]);
          if (bridge.empty()) continue;
          edges = merge_edges(edges, path_edges(bridge));
        }
        ShapeClassification shape = classify_edges(edges);
        if (shape.shape != ShapeKind::Barbell && shape.shape != ShapeKind::Theta && shape.shape != ShapeKind::TildeTheta)
          continue;
        out.candidates.push_back({std::move(edges), shape, *shape_formula(shape)});
      }
    }
  }

  // x itself. A theta4 with a unit path is the one shape with four hub
  // paths that carries a formula, and it only ever appears this way.
  bool whole_theta4 = false;
  if (const ShapeClassification shape = classify(x); shape.shape != ShapeKind::Cycle) {
    if (const auto formula = shape_formula(shape)) {
      whole_theta4 = shape.shape == ShapeKind::Theta4 && shape.proven_minimal;
      out.candidates.push_back({x.edges(), shape, *formula});
    }
  }

  int best = -1;
  for (std::size_t i = 0; i < out.candidates.size(); ++i) {
    const auto& p = out.candidates[i].prediction;
    if (best < 0) {
      best = static_cast<int>(i);
      continue;
    }
    const auto& q = out.candidates[best].prediction;
    const bool exact = p.kind == GirthPrediction::Kind::Exact, best_exact = q.kind == GirthPrediction::Kind::Exact;
    if (p.value < q.value || (p.value == q.value && exact && !best_exact)) best = static_cast<int>(i);
  }
  out.best_candidate = best;
  out.prediction = out.candidates[best].prediction;
  out.prediction.competing_bound = quad_bound(x);

  bool exact = out.prediction.value == 6;
  if (!exact && out.enumeration_complete && !has_k4_minor(x)) {
    exact = true;
    for (int u = 0; u < n && exact; ++u)
      for (int w = u + 1; w < n && exact; ++w)
        if (x.degree(u) >= 4 && x.degree(w) >= 4 && local_connectivity(x, u, w) >= 4 && !whole_theta4) exact = false;
  }
  out.prediction.kind = exact ? GirthPrediction::Kind::Exact : GirthPrediction::Kind::UpperBound;
  out.prediction.preconditions_met = exact;
  return out;
}

std::optional<SubgraphWitness> find_barbell_or_theta(const Graph& x) {
  const int n = x.vertex_count();
  std::vector<int> component;
  for (const auto& comp : connected_components(x)) {
    int edges = 0;
    for (int v : comp) edges += x.degree(v);
    if (edges / 2 - static_cast<int>(comp.size()) + 1 >= 2) {
      component = comp;
      break;
    }
  }
  if (component.empty()) return std::nullopt;

  const std::vector<int> c1 = any_cycle(x, component);
  std::vector<char> on_c1(n, 0);
  for (int v : c1) on_c1[v] = 1;
  std::set<Edge> c1_edges;
  for (const Edge& e : cycle_edges(c1)) c1_edges.insert(e);

  auto finish = [&](std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    SubgraphWitness w;
    w.edges = edges;
    for (const Edge& e : edges) {
      w.vertices.push_back(e.u);
      w.vertices.push_back(e.v);
    }
    std::sort(w.vertices.begin(), w.vertices.end());
    w.vertices.erase(std::unique(w.vertices.begin(), w.vertices.end()), w.vertices.end());
    w.shape = classify_edges(edges).shape;
    return w;
  };

  // An ear on c1 gives a theta.
  for (int u : c1) {
    for (int y : x.neighbors(u)) {
      if (c1_edges.count(Edge(u, y))) continue;
      std::vector<Edge> edges(c1_edges.begin(), c1_edges.end());
      if (on_c1[y]) {
        edges.emplace_back(u, y);
        return finish(edges);
      }
      std::vector<int> prev(n, -2);
      prev[y] = u;
      std::queue<int> q;
      q.push(y);
      while (!q.empty()) {
        int z = q.front();
        q.pop();
        for (int t : x.neighbors(z)) {
          if (t == u || prev[t] != -2) continue;
          if (on_c1[t]) {
            edges.emplace_back(z, t);
            for (int c = z; c != u; c = prev[c]) edges.emplace_back(c, prev[c]);
            return finish(edges);
          }
          prev[t] = z;
          q.push(t);
        }
      }
    }
  }

  // No ear: the second cycle hangs off c1 and meets it in at most one vertex.
  Graph rest(n);
  for (const Edge& e : x.edges())
    if (!c1_edges.count(e)) rest.add_edge(e.u, e.v);
  const std::vector<int> c2 = any_cycle(rest, component);
  std::vector<char> on_c2(n, 0);
  for (int v : c2) on_c2[v] = 1;
  std::vector<Edge> edges(c1_edges.begin(), c1_edges.end());
  for (const Edge& e : cycle_edges(c2)) edges.push_back(e);
  bool touching = false;
  for (int v : c2) touching = touching || on_c1[v];
  if (!touching) edges = merge_edges(edges, path_edges(connecting_path(x, on_c1, on_c2)));
  return finish(edges);
}

}  // namespace fslab
