#include "fslab/sweeps.hpp"

#include <atomic>
#include <thread>

#include "fslab/enumeration.hpp"
#include "fslab/fs_explicit.hpp"

namespace fslab {
namespace {

struct Partial {
  std::map<std::string, RuleTally> tallies;
  std::vector<SweepMismatch> mismatches;

  void record(const std::string& rule, bool ok, const Graph& x, const Graph& y, const std::string& detail) {
    auto& t = tallies[rule];
    ++t.instances;
    if (ok) return;
    ++t.mismatches;
    mismatches.push_back({rule, to_json_string(x), to_json_string(y), detail});
  }
};

std::string girth_text(int g) { return g == kInfinity ? "inf" : std::to_string(g); }

template <class Fn>
void run_sharded(std::size_t count, int threads, Fn fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

GirthSweepReport verify_girth_sweep(int n, int threads) {
  if (n < 3 || n > 7) throw std::invalid_argument("girth sweep supports 3 <= n <= 7");
  GirthSweepReport report;
  report.n = n;
  const auto all = graphs_up_to_isomorphism(n);
  std::vector<Graph> connected;
  for (const Graph& g : all)
    if (is_connected(g)) connected.push_back(g);
  report.graphs = connected.size();
  const Graph star = make(StarSpec{n}).graph;

  std::vector<Partial> partial(connected.size());
  run_sharded(connected.size(), threads, [&](std::size_t i) {
    const Graph& x = connected[i];
    Partial& p = partial[i];
    StarSearchOptions opts;
    opts.acyclic_shortcut = false;
    const GirthReport searched = girth_star(x, opts);
    const int found = searched.status == GirthReport::Status::Exact ? searched.value : kInfinity;
    const int oracle = girth_explicit(build(x, star));
    p.record("search_vs_explicit", searched.status != GirthReport::Status::UnknownAbove && found == oracle, x, star,
             "search " + girth_text(found) + ", explicit " + girth_text(oracle));
    p.record("infinite_iff_acyclic", (found == kInfinity) == is_acyclic(x), x, star, "search " + girth_text(found));
    if (found == kInfinity) return;
    p.record("even", found % 2 == 0, x, star, girth_text(found));
    p.record("quad_bound", found <= *quad_bound(x), x, star, "search " + girth_text(found));
    p.record("not_four", !girth_is_four(x, star) && found != 4, x, star, girth_text(found));
    if (const auto uni = unicyclic_girth(x)) p.record("unicyclic", uni->value == found, x, star, "formula " + girth_text(uni->value));
    const auto pred = predicted_girth(x).prediction;
    if (pred.kind == GirthPrediction::Kind::Exact)
      p.record("prediction_exact", pred.value == found, x, star, "predicted " + girth_text(pred.value) + ", search " + girth_text(found));
    else
      p.record("prediction_bound", pred.value >= found, x, star, "bound " + girth_text(pred.value) + ", search " + girth_text(found));
  });

  if (n <= 5) {
    partial.emplace_back();
    Partial& p = partial.back();
    for (const Graph& x : all)
      for (const Graph& y : all) {
        const bool four = girth_explicit(build(x, y)) == 4;
        p.record("girth_four_pairs", four == girth_is_four(x, y), x, y, four ? "girth 4 not predicted" : "girth 4 predicted");
      }
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

std::optional<SwapSequence> shape_trajectory(const ShapeClassification& shape) {
  const Landmarks& l = shape.layout;
  switch (shape.shape) {
    case ShapeKind::Cycle: return rotation_sequence(l.cycles[0]);
    case ShapeKind::Barbell: return barbell_sequence(l.cycles[0], l.paths[0], l.cycles[1]);
    case ShapeKind::Theta: return theta_sequence(l.paths, 2);
    case ShapeKind::TildeTheta: return theta_sequence(l.paths, 3);
    case ShapeKind::Theta4:
      if (shape.parameters[0] == 1) return theta4_sequence(l.paths);
      return std::nullopt;
    default: return std::nullopt;
  }
}

SearchRecord evaluate_instance(const FamilySpec& spec, const InstanceSearchOptions& options) {
  const Graph x = make(spec).graph;
  SearchRecord rec;
  rec.spec = format_spec(spec);
  rec.n = x.vertex_count();
  const ShapeClassification shape = classify(x);
  rec.shape = to_string(shape.shape);
  rec.proven_minimal = shape.proven_minimal;

  const PredictedGirth predicted = predicted_girth(x);
  rec.formula_bound = predicted.prediction.value;
  rec.formula_exact = predicted.prediction.kind == GirthPrediction::Kind::Exact;

  StarSearchOptions search;
  search.depth_cap = options.depth_cap;
  search.state_cap = options.state_cap;
  search.threads = options.threads;
  // Only a simulated, simple closed walk is trusted as an upper bound.
  if (predicted.best_candidate >= 0) {
    if (const auto seq = shape_trajectory(predicted.candidates[predicted.best_candidate].shape)) {
      const TrajectoryReport t = simulate(x, *seq);
      if (t.is_simple) {
        rec.trajectory_length = t.length;
        search.upper_bound = t.length;
      }
    }
  }
  rec.search = girth_star(x, search);

  if (rec.search.status == GirthReport::Status::Exact) {
    const int g = rec.search.value;
    const int roots = options.exhaustive_usage ? x.vertex_count() : 1;
    rec.usage_complete = true;
    bool all_full = true;
    for (int r = 0; r < roots; ++r) {
      const CycleUsage u = shortest_cycle_usage(x, r, g, options.usage_limit, options.state_cap);
      rec.full_usage = rec.full_usage || u.any_full;
      rec.usage_complete = rec.usage_complete && u.complete;
      if (u.cycles > 0) all_full = all_full && u.all_full;
    }
    if (options.exhaustive_usage && rec.usage_complete) rec.all_cycles_full = all_full;
  }
  const bool minimal_evidence = rec.all_cycles_full.value_or(rec.full_usage);
  rec.candidate_counterexample = minimal_evidence && !rec.proven_minimal;
  return rec;
}

}  // namespace fslab
