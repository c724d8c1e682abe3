#include "fslab/connectivity.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "fslab/enumeration.hpp"
#include "fslab/families.hpp"
#include "fslab/fs_explicit.hpp"
#include "fslab/girth_theory.hpp"

namespace fslab {

std::string to_string(ConnectivityRule rule) {
  switch (rule) {
    case ConnectivityRule::CycleIff: return "cycle_iff";
    case ConnectivityRule::BiconnectedSufficient: return "biconnected_sufficient";
    case ConnectivityRule::StarBiconnected: return "star_biconnected";
    case ConnectivityRule::StarCycle: return "star_cycle";
    case ConnectivityRule::None: return "none";
  }
  return "none";
}

bool forest_condition(const Graph& y) {
  const ForestProfile p = forest_profile(complement(y));
  return p.is_forest && p.gcd_of_sizes == 1;
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_theta0(const Graph& g) {
  if (g.vertex_count() != 7 || g.edge_count() != 8 || !is_connected(g)) return false;
  const ShapeClassification c = classify(g);
  return c.shape == ShapeKind::Theta && c.parameters == std::vector<int>{2, 3, 3};
}

ConnectivityVerdict predict_cycle_connectivity(const Graph& y) {
  ConnectivityVerdict v;
  v.applicable = true;
  v.rule = ConnectivityRule::CycleIff;
  v.predicted_connected = forest_condition(y);
  return v;
}

ConnectivityVerdict predict_biconnected_connectivity(const Graph& x, const Graph& y) {
  if (is_cycle_graph(x)) return predict_cycle_connectivity(y);
  ConnectivityVerdict v;
  if (is_biconnected(x) && forest_condition(y)) {
    v.applicable = true;
    v.rule = ConnectivityRule::BiconnectedSufficient;
    v.predicted_connected = true;
  }
  return v;
}

ConnectivityVerdict predict_star_components(const Graph& x) {
  if (!is_biconnected(x)) throw std::invalid_argument("star component count needs a biconnected graph");
  ConnectivityVerdict v;
  v.applicable = true;
  if (is_cycle_graph(x)) {
    v.rule = ConnectivityRule::StarCycle;
    v.predicted_components = factorial(x.vertex_count() - 2);
  } else {
    v.rule = ConnectivityRule::StarBiconnected;
    v.predicted_components = is_theta0(x) ? 6 : (is_bipartite(x) ? 2 : 1);
  }
  v.predicted_connected = *v.predicted_components == 1;
  return v;
}

std::vector<Graph> forest_complements(int n) {
  std::vector<Graph> out;
  for (const Graph& f : graphs_up_to_isomorphism(n))
    if (is_acyclic(f)) out.push_back(complement(f));
  return out;
}

std::vector<Graph> sweep_x_graphs(int n, const ConnectivitySweepOptions& options) {
  std::vector<Graph> out;
  std::set<std::string> keys;
  auto add = [&](const Graph& g) {
    if (keys.insert(canonical_key(g)).second) out.push_back(g);
  };
  if (n <= 6) {
    for_each_labelled_graph(n, [&](const Graph& g) {
      if (is_biconnected(g)) add(g);
    });
    return out;
  }
  std::vector<Graph> pool;
  for (const Graph& g : graphs_up_to_isomorphism(n))
    if (is_biconnected(g)) pool.push_back(g);
  if (options.exhaustive) return pool;
  add(make(CycleSpec{n}).graph);
  if (n == 7) add(make(Theta0Spec{}).graph);
  std::mt19937_64 rng(options.seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  for (std::size_t i = 0; i < pool.size() && static_cast<int>(i) < options.sample_size; ++i) add(pool[i]);
  return out;
}

ConnectivitySweepReport verify_connectivity_sweep(int n, const ConnectivitySweepOptions& options) {
  if (n < 3 || n > 7) throw std::invalid_argument("connectivity sweep supports 3 <= n <= 7");
  ConnectivitySweepReport report;
  report.n = n;
  const auto xs = sweep_x_graphs(n, options);
  const auto ys = forest_complements(n);
  const Graph star = make(StarSpec{n}).graph;
  report.x_graphs = xs.size();
  report.y_graphs = ys.size();

  struct Partial {
    std::map<std::string, RuleTally> tallies;
    std::vector<SweepMismatch> mismatches;
  };
  std::vector<Partial> partial(xs.size());
  auto check_x = [&](std::size_t i) {
    const Graph& x = xs[i];
    Partial& p = partial[i];
    for (const Graph& y : ys) {
      const auto verdict = predict_biconnected_connectivity(x, y);
      if (!verdict.applicable) continue;
      const bool connected = component_sizes(build(x, y)).size() == 1;
      auto& t = p.tallies[to_string(verdict.rule)];
      ++t.instances;
      if (connected != *verdict.predicted_connected) {
        ++t.mismatches;
        p.mismatches.push_back({to_string(verdict.rule), to_json_string(x), to_json_string(y),
                                connected ? "connected, predicted disconnected" : "disconnected, predicted connected"});
      }
    }
    const auto verdict = predict_star_components(x);
    const auto sizes = component_sizes(build(x, star));
    auto& t = p.tallies[to_string(verdict.rule)];
    ++t.instances;
    bool ok = sizes.size() == *verdict.predicted_components;
    if (ok && verdict.rule == ConnectivityRule::StarCycle)
      ok = std::all_of(sizes.begin(), sizes.end(), [&](std::uint64_t s) { return s == static_cast<std::uint64_t>(n * (n - 1)); });
    if (!ok) {
      ++t.mismatches;
      p.mismatches.push_back({to_string(verdict.rule), to_json_string(x), to_json_string(star),
                              std::to_string(sizes.size()) + " components, predicted " + std::to_string(*verdict.predicted_components)});
    }
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < xs.size(); i = next++) check_x(i);
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& p : partial) {
    for (const auto& [rule, t] : p.tallies) {
      report.tallies[rule].instances += t.instances;
      report.tallies[rule].mismatches += t.mismatches;
    }
    report.mismatches.insert(report.mismatches.end(), p.mismatches.begin(), p.mismatches.end());
  }
  return report;
}

}  // namespace fslab
