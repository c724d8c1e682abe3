#include "fslab/star_search.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <thread>

namespace fslab {
namespace {

constexpr int kUnbounded = INT_MAX;

// Open-addressed map from packed state to its index in BFS order. Capacity
// is a power of two and doubles at half load.
class StateIndex {
 public:
  StateIndex() { rehash(1024); }

  // Returns {index, inserted}.
  std::pair<std::uint32_t, bool> insert(std::uint64_t key, std::uint32_t value) {
    if (2 * (size_ + 1) > keys_.size()) rehash(2 * keys_.size());
    std::size_t slot = mix(key) & mask_;
    while (keys_[slot] != kEmpty) {
      if (keys_[slot] == key) return {values_[slot], false};
      slot = (slot + 1) & mask_;
    }
    keys_[slot] = key;
    values_[slot] = value;
    ++size_;
    return {value, true};
  }

  std::optional<std::uint32_t> find(std::uint64_t key) const {
    std::size_t slot = mix(key) & mask_;
    while (keys_[slot] != kEmpty) {
      if (keys_[slot] == key) return values_[slot];
      slot = (slot + 1) & mask_;
    }
    return std::nullopt;
  }

 private:
  // A valid packing never has every nibble equal to 15.
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  void rehash(std::size_t capacity) {
    std::vector<std::uint64_t> old_keys(capacity, kEmpty);
    std::vector<std::uint32_t> old_values(capacity);
    old_keys.swap(keys_);
    old_values.swap(values_);
    mask_ = capacity - 1;
    size_ = 0;
    for (std::size_t i = 0; i < old_keys.size(); ++i)
      if (old_keys[i] != kEmpty) insert(old_keys[i], old_values[i]);
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> values_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

void check_size(const Graph& x) {
  if (x.vertex_count() < 2 || x.vertex_count() > PackedConfig::kMaxVertices)
    throw std::invalid_argument("star search supports 2 <= n <= 16");
}

struct RootOutcome {
  int found = kUnbounded;
  int proven = kUnbounded;  // every cycle through the root of length <= proven was seen
  bool budget_hit = false;
  std::vector<int> centers;  // closed walk of the center for `found`
  std::uint64_t states = 0;
};

RootOutcome search_root(const Graph& x, int root_center, int depth_cap, std::size_t state_cap,
                        std::atomic<int>& shared_best) {
  const int n = x.vertex_count();
  RootOutcome out;
  std::vector<PackedConfig> states{PackedConfig::canonical_root(n, root_center)};
  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint16_t> level{0};
  StateIndex index;
  index.insert(states[0].bits(), 0);
  std::uint32_t best_u = 0, best_w = 0;

  std::size_t head = 0;
  for (; head < states.size(); ++head) {
    const int L = level[head];
    const int limit = std::min(shared_best.load(std::memory_order_relaxed), out.found);
    if (limit != kUnbounded && 2 * L + 2 > limit) break;
    if (L >= depth_cap) break;
    if (states.size() > state_cap) {
      out.budget_hit = true;
      break;
    }
    const PackedConfig cur = states[head];
    for (int v : x.neighbors(cur.center())) {
      const PackedConfig next = cur.moved_to(v);
      auto [j, inserted] = index.insert(next.bits(), static_cast<std::uint32_t>(states.size()));
      if (inserted) {
        states.push_back(next);
        parent.push_back(static_cast<std::uint32_t>(head));
        level.push_back(static_cast<std::uint16_t>(L + 1));
      } else if (j != parent[head]) {
        const int cand = L + level[j] + 1;
        if (cand < out.found) {
          out.found = cand;
          best_u = static_cast<std::uint32_t>(head);
          best_w = j;
          int seen = shared_best.load(std::memory_order_relaxed);
          while (cand < seen && !shared_best.compare_exchange_weak(seen, cand)) {
          }
        }
      }
    }
  }
  if (head < states.size()) out.proven = 2 * level[head];
  out.states = states.size();

  if (out.found != kUnbounded) {
    auto trace = [&](std::uint32_t s) {
      std::vector<int> centers;
      for (;; s = parent[s]) {
        centers.push_back(states[s].center());
        if (s == 0) break;
      }
      std::reverse(centers.begin(), centers.end());
      return centers;
    };
    out.centers = trace(best_u);
    auto back = trace(best_w);
    out.centers.insert(out.centers.end(), back.rbegin(), back.rend());
  }
  return out;
}

}  // namespace

PackedConfig PackedConfig::from_configuration(const Configuration& sigma) {
  const int n = static_cast<int>(sigma.size());
  if (n > kMaxVertices) throw std::invalid_argument("packed configurations hold at most 16 vertices");
  PackedConfig c;
  for (int v = 0; v < n; ++v) {
    c.bits_ |= static_cast<std::uint64_t>(sigma[v]) << (4 * v);
    if (sigma[v] == n - 1) c.center_ = v;
  }
  return c;
}

PackedConfig PackedConfig::canonical_root(int n, int center) {
  Configuration sigma(n);
  for (int v = 0; v < n; ++v) sigma[v] = v == center ? n - 1 : (v < center ? v : v - 1);
  return from_configuration(sigma);
}

PackedConfig PackedConfig::from_bits(std::uint64_t bits, int n) {
  PackedConfig c;
  c.bits_ = bits;
  for (int v = 0; v < n; ++v)
    if (c.token_at(v) == n - 1) c.center_ = v;
  return c;
}

Configuration PackedConfig::unpack(int n) const {
  Configuration sigma(n);
  for (int v = 0; v < n; ++v) sigma[v] = token_at(v);
  return sigma;
}

PackedConfig PackedConfig::moved_to(int v) const {
  const std::uint64_t center_token = bits_ >> (4 * center_) & 0xF;
  const std::uint64_t other = bits_ >> (4 * v) & 0xF;
  PackedConfig c;
  c.bits_ = bits_ & ~(std::uint64_t{0xF} << (4 * center_)) & ~(std::uint64_t{0xF} << (4 * v));
  c.bits_ |= other << (4 * center_) | center_token << (4 * v);
  c.center_ = v;
  return c;
}

std::vector<PackedConfig> neighbors(const Graph& x, const PackedConfig& c) {
  std::vector<PackedConfig> out;
  for (int v : x.neighbors(c.center())) out.push_back(c.moved_to(v));
  return out;
}

Reachability reachable(const Graph& x, const Configuration& from, const Configuration& to, std::size_t state_cap) {
  check_size(x);
  const PackedConfig start = PackedConfig::from_configuration(from);
  const PackedConfig goal = PackedConfig::from_configuration(to);
  Reachability out;
  if (start == goal) {
    out.reachable = true;
    return out;
  }
  std::vector<PackedConfig> states{start};
  std::vector<std::uint32_t> parent{0};
  StateIndex index;
  index.insert(start.bits(), 0);
  for (std::size_t head = 0; head < states.size(); ++head) {
    if (states.size() > state_cap) throw BudgetExceeded("reachability search exceeded its state budget");
    for (int v : x.neighbors(states[head].center())) {
      const PackedConfig next = states[head].moved_to(v);
      auto [j, inserted] = index.insert(next.bits(), static_cast<std::uint32_t>(states.size()));
      if (!inserted) continue;
      states.push_back(next);
      parent.push_back(static_cast<std::uint32_t>(head));
      if (next == goal) {
        std::vector<int> centers;
        for (std::uint32_t s = j;; s = parent[s]) {
          centers.push_back(states[s].center());
          if (s == 0) break;
        }
        std::reverse(centers.begin(), centers.end());
        for (std::size_t i = 0; i + 1 < centers.size(); ++i) out.path.emplace_back(centers[i], centers[i + 1]);
        out.reachable = true;
        return out;
      }
    }
  }
  return out;
}

GirthReport girth_star(const Graph& x, const StarSearchOptions& options) {
  check_size(x);
  GirthReport report;
  if (options.acyclic_shortcut && is_acyclic(x)) return report;

  const int n = x.vertex_count();
  const int depth_cap = options.depth_cap.value_or(kUnbounded);
  std::atomic<int> shared_best{options.upper_bound.value_or(kUnbounded)};
  std::vector<RootOutcome> outcomes(n);
  std::atomic<int> next_root{0};
  auto worker = [&] {
    for (int r = next_root++; r < n; r = next_root++)
      outcomes[r] = search_root(x, r, depth_cap, options.state_cap, shared_best);
  };
  const int threads = std::clamp(options.threads, 1, n);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int best = kUnbounded, proven = kUnbounded, best_root = -1;
  for (int r = 0; r < n; ++r) {
    report.states += outcomes[r].states;
    proven = std::min(proven, outcomes[r].proven);
    if (outcomes[r].found < best) {
      best = outcomes[r].found;
      best_root = r;
    }
  }

  if (best != kUnbounded && best <= proven) {
    report.status = GirthReport::Status::Exact;
    report.value = best;
    report.root = best_root;
    const auto& c = outcomes[best_root].centers;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) report.witness.emplace_back(c[i], c[i + 1]);
    return report;
  }
  if (options.upper_bound && proven >= *options.upper_bound) {
    report.status = GirthReport::Status::Exact;
    report.value = *options.upper_bound;
    return report;
  }
  if (best == kUnbounded && proven == kUnbounded) return report;
  report.status = GirthReport::Status::UnknownAbove;
  report.lower_bound = proven;
  if (best != kUnbounded) report.upper_bound = best;
  if (options.upper_bound && (!report.upper_bound || *options.upper_bound < *report.upper_bound))
    report.upper_bound = options.upper_bound;
  return report;
}

CycleUsage shortest_cycle_usage(const Graph& x, int root, int length, std::size_t limit, std::size_t state_cap) {
  check_size(x);
  const int n = x.vertex_count();
  const int radius = length / 2;
  const PackedConfig start = PackedConfig::canonical_root(n, root);

  std::vector<PackedConfig> states{start};
  std::vector<std::uint16_t> level{0};
  StateIndex index;
  index.insert(start.bits(), 0);
  for (std::size_t head = 0; head < states.size() && level[head] < radius; ++head) {
    if (states.size() > state_cap) throw BudgetExceeded("cycle enumeration exceeded its state budget");
    for (int v : x.neighbors(states[head].center())) {
      const PackedConfig next = states[head].moved_to(v);
      if (index.insert(next.bits(), static_cast<std::uint32_t>(states.size())).second) {
        states.push_back(next);
        level.push_back(static_cast<std::uint16_t>(level[head] + 1));
      }
    }
  }

  std::vector<int> edge_id(static_cast<std::size_t>(n) * n, -1);
  const auto edges = x.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edge_id[edges[i].u * n + edges[i].v] = static_cast<int>(i);
    edge_id[edges[i].v * n + edges[i].u] = static_cast<int>(i);
  }
  std::vector<int> uses(edges.size(), 0);
  int distinct_used = 0;

  CycleUsage usage;
  std::vector<std::uint64_t> path{start.bits()};
  auto dfs = [&](auto& self, const PackedConfig& cur, int steps) -> void {
    if (!usage.complete) return;
    for (int v : x.neighbors(cur.center())) {
      const PackedConfig next = cur.moved_to(v);
      const int e = edge_id[cur.center() * n + v];
      if (steps + 1 == length) {
        if (next == start) {
          if (usage.cycles >= limit) {
            usage.complete = false;
            return;
          }
          ++usage.cycles;
          const bool full = distinct_used + (uses[e] == 0 ? 1 : 0) == static_cast<int>(edges.size());
          usage.any_full = usage.any_full || full;
          usage.all_full = usage.all_full && full;
        }
        continue;
      }
      if (next == start) continue;
      auto found = index.find(next.bits());
      if (!found || level[*found] > length - steps - 1) continue;
      if (std::find(path.begin(), path.end(), next.bits()) != path.end()) continue;
      if (uses[e]++ == 0) ++distinct_used;
      path.push_back(next.bits());
      self(self, next, steps + 1);
      path.pop_back();
      if (--uses[e] == 0) --distinct_used;
    }
  };
  dfs(dfs, start, 0);
  if (usage.cycles == 0) usage.all_full = false;
  return usage;
}

}  // namespace fslab
