// Command-line front end. JSON on stdout, diagnostics on stderr.
//
// Exit codes: 0 ok, 1 mismatch found, 2 usage error, 3 budget exceeded.

#include <condition_variable>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fslab/connectivity.hpp"
#include "fslab/ear_decomposition.hpp"
#include "fslab/families.hpp"
#include "fslab/fs_explicit.hpp"
#include "fslab/girth_theory.hpp"
#include "fslab/star_search.hpp"
#include "fslab/sweeps.hpp"
#include "fslab/trajectories.hpp"

using json = nlohmann::ordered_json;
using namespace fslab;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

constexpr int kExportLimit = 6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int thread_cap(int requested) {
  int threads = requested > 0 ? requested : 1;
  if (const char* env = std::getenv("FSLAB_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) threads = requested > 0 ? std::min(requested, cap) : cap;
  }
  return threads;
}

// A family spec string, or a path to a graph JSON file.
Graph load_graph(const std::string& text) {
  try {
    return make(parse_spec(text)).graph;
  } catch (const std::invalid_argument& spec_error) {
    if (!std::filesystem::exists(text)) throw UsageError(std::string("not a family spec or file: ") + spec_error.what());
  }
  std::ifstream in(text);
  std::stringstream buf;
  buf << in.rdbuf();
  return graph_from_json_string(buf.str());
}

json graph_json(const Graph& g) { return json::parse(to_json_string(g)); }

json girth_value(int g) { return g == kInfinity ? json("inf") : json(g); }

json steps_json(const std::vector<Step>& steps) {
  json out = json::array();
  for (const auto& [a, b] : steps) out.push_back({a, b});
  return out;
}

json landmarks_json(const Landmarks& l) {
  return json{{"hubs", l.hubs}, {"cycles", l.cycles}, {"paths", l.paths}};
}

json prediction_json(const GirthPrediction& p) {
  json out{{"girth", girth_value(p.value)},
           {"kind", p.kind == GirthPrediction::Kind::Exact ? "exact" : "upper_bound"},
           {"rule", p.rule},
           {"preconditions_met", p.preconditions_met}};
  out["competing_bound"] = p.competing_bound ? json(*p.competing_bound) : json(nullptr);
  return out;
}

json search_result_json(const GirthReport& r) {
  switch (r.status) {
    case GirthReport::Status::Exact: return r.value;
    case GirthReport::Status::Infinite: return "inf";
    case GirthReport::Status::UnknownAbove: return "unknown_above_" + std::to_string(r.lower_bound);
  }
  return nullptr;
}

json tallies_json(const std::map<std::string, RuleTally>& tallies) {
  json out = json::object();
  for (const auto& [rule, t] : tallies) out[rule] = {{"instances", t.instances}, {"mismatches", t.mismatches}};
  return out;
}

json mismatches_json(const std::vector<SweepMismatch>& ms) {
  json out = json::array();
  for (const auto& m : ms)
    out.push_back({{"rule", m.rule}, {"x", json::parse(m.x)}, {"y", json::parse(m.y)}, {"detail", m.detail}});
  return out;
}

json record_json(const SearchRecord& r) {
  json out{{"spec", r.spec}, {"n", r.n}, {"shape", r.shape}};
  out["formula_bound"] = r.formula_bound ? json(*r.formula_bound) : json(nullptr);
  out["formula_exact"] = r.formula_exact;
  out["search_result"] = search_result_json(r.search);
  out["search_upper_bound"] = r.search.upper_bound ? json(*r.search.upper_bound) : json(nullptr);
  out["trajectory_length"] = r.trajectory_length ? json(*r.trajectory_length) : json(nullptr);
  out["full_usage"] = r.full_usage;
  out["usage_complete"] = r.usage_complete;
  out["all_cycles_full"] = r.all_cycles_full ? json(*r.all_cycles_full) : json(nullptr);
  out["proven_minimal"] = r.proven_minimal;
  out["candidate_counterexample"] = r.candidate_counterexample;
  out["states"] = r.search.states;
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

int cmd_families(const std::string& spec, const std::string& shape, int budget) {
  if (!spec.empty()) {
    const FamilySpec parsed = parse_spec(spec);
    const FamilyGraph fg = make(parsed);
    emit({{"spec", format_spec(parsed)}, {"graph", graph_json(fg.graph)}, {"landmarks", landmarks_json(fg.landmarks)}});
    return kOk;
  }
  if (shape.empty()) throw UsageError("families needs --spec or --shape");
  json specs = json::array();
  for (const auto& s : enumerate_instances(parse_shape(shape), budget)) specs.push_back(format_spec(s));
  emit({{"shape", shape}, {"budget", budget}, {"instances", specs}});
  return kOk;
}

int cmd_fs_stats(const std::string& xs, const std::string& ys) {
  const Graph x = load_graph(xs), y = load_graph(ys);
  const FsGraph fs = build(x, y);
  emit({{"components", component_sizes(fs)}, {"girth", girth_value(girth_explicit(fs))}, {"bipartite_check", bipartite_sign_check(fs)}});
  return kOk;
}

int cmd_verify(const std::string& kind, int n, bool exhaustive, int threads) {
  if (n < 3 || n > 7) throw UsageError("verify needs 3 <= n <= 7");
  if (kind == "connectivity") {
    ConnectivitySweepOptions opts;
    opts.exhaustive = exhaustive;
    opts.threads = threads;
    const auto r = verify_connectivity_sweep(n, opts);
    emit({{"kind", kind}, {"n", n}, {"x_graphs", r.x_graphs}, {"y_graphs", r.y_graphs}, {"checks", tallies_json(r.tallies)},
          {"mismatches", mismatches_json(r.mismatches)}});
    return r.mismatches.empty() ? kOk : kMismatch;
  }
  if (kind == "girth") {
    const auto r = verify_girth_sweep(n, threads);
    emit({{"kind", kind}, {"n", n}, {"graphs", r.graphs}, {"checks", tallies_json(r.tallies)}, {"mismatches", mismatches_json(r.mismatches)}});
    return r.mismatches.empty() ? kOk : kMismatch;
  }
  throw UsageError("verify kind must be connectivity or girth");
}

int cmd_girth(const std::string& xs, std::optional<int> depth_cap, int threads, const std::string& method) {
  const Graph x = load_graph(xs);
  if (method == "formula") {
    const PredictedGirth p = predicted_girth(x);
    json out = prediction_json(p.prediction);
    out["method"] = "formula";
    if (is_connected(x)) {
      const ShapeClassification c = classify(x);
      out["shape"] = to_string(c.shape);
      out["parameters"] = c.parameters;
      out["proven_minimal"] = c.proven_minimal;
      out["possibly_minimal"] = c.possibly_minimal;
    }
    emit(out);
    return kOk;
  }
  if (method != "search") throw UsageError("method must be search or formula");
  StarSearchOptions opts;
  opts.depth_cap = depth_cap;
  opts.threads = threads;
  const GirthReport r = girth_star(x, opts);
  json out{{"girth", search_result_json(r)}, {"witness", steps_json(r.witness)}, {"method", "search"}, {"root", r.root}, {"states", r.states}};
  if (r.upper_bound) out["upper_bound"] = *r.upper_bound;
  emit(out);
  return r.status == GirthReport::Status::UnknownAbove ? kBudget : kOk;
}

int cmd_trajectory(const std::string& spec) {
  const Graph x = make(parse_spec(spec)).graph;
  const ShapeClassification shape = classify(x);
  const auto seq = shape_trajectory(shape);
  if (!seq) throw UsageError("no trajectory construction for shape " + to_string(shape.shape));
  const TrajectoryReport r = simulate(x, *seq);
  emit({{"spec", spec},
        {"shape", to_string(shape.shape)},
        {"start_vertex", seq->start_vertex},
        {"steps", steps_json(seq->steps)},
        {"report",
         {{"is_closed", r.is_closed},
          {"is_simple", r.is_simple},
          {"tokens_returned", r.tokens_returned},
          {"length", r.length},
          {"uses_whole_graph", r.uses_whole_graph},
          {"induced_subgraph", graph_json(r.induced_subgraph)}}}});
  return r.is_simple ? kOk : kMismatch;
}

int cmd_ears(const std::string& source) {
  const Graph g = load_graph(source);
  const EarDecomposition d = decompose(g);
  emit({{"p0", d.initial_cycle}, {"ears", d.ears}});
  return validate(d, g) ? kOk : kMismatch;
}

int cmd_search(const std::string& shapes_text, int budget, double time_budget, const std::string& log_path,
               const InstanceSearchOptions& options, int threads) {
  std::vector<FamilySpec> todo;
  std::set<std::string> done;
  if (!log_path.empty() && std::filesystem::exists(log_path)) {
    std::ifstream in(log_path);
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) done.insert(json::parse(line).at("spec").get<std::string>());
  }
  std::stringstream list(shapes_text);
  for (std::string item; std::getline(list, item, ',');) {
    const Shape shape = parse_shape(item);
    if (shape == Shape::Cycle || shape == Shape::Barbell || shape == Shape::Theta3)
      throw UsageError("search shapes are theta4, theta5, k4s and k33s");
    for (const auto& s : enumerate_instances(shape, budget))
      if (!done.count(format_spec(s))) todo.push_back(s);
  }
  std::cerr << "search: " << todo.size() << " instances, " << done.size() << " already logged\n";

  std::ofstream log;
  if (!log_path.empty()) log.open(log_path, std::ios::app);
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(time_budget);

  // Workers evaluate out of order; the writer emits records in order.
  std::vector<std::optional<json>> results(todo.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_time{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      json rec;
      if (time_budget > 0 && std::chrono::steady_clock::now() > deadline) {
        out_of_time = true;
        rec = {{"spec", format_spec(todo[i])}, {"skipped", "time_budget"}};
      } else {
        try {
          rec = record_json(evaluate_instance(todo[i], options));
        } catch (const BudgetExceeded& e) {
          rec = {{"spec", format_spec(todo[i])}, {"error", e.what()}};
        }
      }
      std::lock_guard lock(mu);
      results[i] = std::move(rec);
      ready.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
  for (std::size_t i = 0; i < todo.size(); ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return results[i].has_value(); });
    const json rec = *results[i];
    lock.unlock();
    std::cout << rec.dump() << std::endl;
    if (log.is_open() && !rec.contains("skipped")) log << rec.dump() << std::endl;
  }
  for (auto& t : pool) t.join();
  return out_of_time ? kBudget : kOk;
}

int cmd_export(const std::string& xs, const std::string& ys, const std::string& format, const std::string& out_path) {
  if (format != "json" && format != "dot") throw UsageError("format must be json or dot");
  const Graph x = load_graph(xs);
  std::string text;
  if (ys.empty()) {
    text = format == "json" ? to_json_string(x) + "\n" : to_dot(x);
  } else {
    const Graph y = load_graph(ys);
    if (x.vertex_count() > kExportLimit) throw BudgetExceeded("explicit export limited to n <= 6");
    const FsGraph fs = build(x, y);
    Graph flat(static_cast<int>(fs.vertex_count()));
    for (std::size_t v = 0; v < fs.vertex_count(); ++v)
      for (auto w : fs.neighbors(v))
        if (v < w) flat.add_edge(static_cast<int>(v), static_cast<int>(w));
    text = format == "json" ? to_json_string(flat) + "\n" : to_dot(flat, "FS");
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream(out_path) << text;
    emit({{"written", out_path}});
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Friends-and-strangers graph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (capped by FSLAB_THREADS)");

  std::string spec, shape, xs, ys, kind, method = "search", format = "json", out_path, log_path, shapes;
  int budget = 8, n = 0;
  std::optional<int> depth_cap;
  bool exhaustive = false;
  double time_budget = 0;
  InstanceSearchOptions search_options;

  auto* families = app.add_subcommand("families", "generate a family graph or enumerate a shape");
  families->add_option("--spec", spec);
  families->add_option("--shape", shape);
  families->add_option("--budget", budget);

  auto* fs_stats = app.add_subcommand("fs-stats", "components and girth of an explicit FS(X, Y)");
  fs_stats->add_option("--x", xs)->required();
  fs_stats->add_option("--y", ys)->required();

  auto* verify = app.add_subcommand("verify", "check closed-form predictions against brute force");
  verify->add_option("kind", kind)->required();
  verify->add_option("--n", n)->required();
  verify->add_flag("--exhaustive", exhaustive);

  auto* girth_cmd = app.add_subcommand("girth", "girth of FS(X, Star_n)");
  girth_cmd->add_option("--x", xs)->required();
  girth_cmd->add_option("--depth-cap", depth_cap);
  girth_cmd->add_option("--method", method);

  auto* trajectory = app.add_subcommand("trajectory", "simulate the constructed cycle of a family");
  trajectory->add_option("--family", spec)->required();

  auto* ears = app.add_subcommand("ears", "open ear decomposition");
  ears->add_option("graph", xs)->required();

  auto* search = app.add_subcommand("search", "girth survey over theta4, theta5, k4s and k33s instances");
  search->add_option("--shapes", shapes)->required();
  search->add_option("--budget", budget);
  search->add_option("--time-budget", time_budget, "seconds; 0 means unlimited");
  search->add_option("--log", log_path);
  search->add_option("--depth-cap", depth_cap);
  search->add_option("--state-cap", search_options.state_cap);
  search->add_flag("--exhaustive", search_options.exhaustive_usage);

  auto* export_cmd = app.add_subcommand("export", "write a graph or an explicit FS graph");
  export_cmd->add_option("--x", xs)->required();
  export_cmd->add_option("--y", ys);
  export_cmd->add_option("--format", format);
  export_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const int workers = thread_cap(threads);
  try {
    if (*families) return cmd_families(spec, shape, budget);
    if (*fs_stats) return cmd_fs_stats(xs, ys);
    if (*verify) return cmd_verify(kind, n, exhaustive, workers);
    if (*girth_cmd) return cmd_girth(xs, depth_cap, workers, method);
    if (*trajectory) return cmd_trajectory(spec);
    if (*ears) return cmd_ears(xs);
    if (*search) {
      search_options.depth_cap = depth_cap;
      return cmd_search(shapes, budget, time_budget, log_path, search_options, workers);
    }
    if (*export_cmd) return cmd_export(xs, ys, format, out_path);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
