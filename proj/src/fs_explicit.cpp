#include "fslab/fs_explicit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace fslab {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank_permutation(const Configuration& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::uint64_t rank = 0;
  unsigned used = 0;
  for (int i = 0; i < n; ++i) {
    const unsigned below = static_cast<unsigned>(__builtin_popcount(used & ((1u << sigma[i]) - 1)));
    rank += (static_cast<std::uint64_t>(sigma[i]) - below) * factorial(n - 1 - i);
    used |= 1u << sigma[i];
  }
  return rank;
}

Configuration unrank_permutation(std::uint64_t rank, int n) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  Configuration sigma(n);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    sigma[i] = pool[idx];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return sigma;
}

int permutation_sign(const Configuration& sigma) {
  int inversions = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

FsGraph build(const Graph& x, const Graph& y, int n_limit) {
  const int n = x.vertex_count();
  if (y.vertex_count() != n) throw std::invalid_argument("X and Y must have the same number of vertices");
  if (n > n_limit) throw std::invalid_argument("explicit friends-and-strangers graph limited to n <= " + std::to_string(n_limit));
  const std::uint64_t total = factorial(n);
  const auto xe = x.edges();
  FsGraph fs;
  fs.n_ = n;
  fs.offsets_.reserve(total + 1);
  Configuration sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  for (std::uint64_t r = 0; r < total; ++r) {
    for (const Edge& e : xe) {
      if (!y.has_edge(sigma[e.u], sigma[e.v])) continue;
      std::swap(sigma[e.u], sigma[e.v]);
      fs.targets_.push_back(static_cast<std::uint32_t>(rank_permutation(sigma)));
      std::swap(sigma[e.u], sigma[e.v]);
    }
    fs.offsets_.push_back(fs.targets_.size());
    std::next_permutation(sigma.begin(), sigma.end());
  }
  return fs;
}

std::vector<std::uint32_t> component_labels(const FsGraph& fs) {
  const std::size_t total = fs.vertex_count();
  constexpr std::uint32_t kUnset = ~0u;
  std::vector<std::uint32_t> label(total, kUnset);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> stack;
  for (std::size_t s = 0; s < total; ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(static_cast<std::uint32_t>(s));
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : fs.neighbors(v))
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

std::vector<std::uint64_t> component_sizes(const FsGraph& fs) {
  const auto label = component_labels(fs);
  std::vector<std::uint64_t> sizes;
  for (auto l : label) {
    if (l >= sizes.size()) sizes.resize(l + 1, 0);
    ++sizes[l];
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

int girth_explicit(const FsGraph& fs) {
  const std::size_t total = fs.vertex_count();
  int best = kInfinity;
  std::vector<int> level(total, -1);
  std::vector<std::uint32_t> parent(total), touched;
  for (std::size_t s = 0; s < total; ++s) {
    for (auto t : touched) level[t] = -1;
    touched.assign(1, static_cast<std::uint32_t>(s));
    level[s] = 0;
    parent[s] = static_cast<std::uint32_t>(s);
    for (std::size_t head = 0; head < touched.size(); ++head) {
      const auto v = touched[head];
      if (best != kInfinity && 2 * level[v] + 1 >= best) break;
      for (auto w : fs.neighbors(v)) {
        if (level[w] < 0) {
          level[w] = level[v] + 1;
          parent[w] = v;
          touched.push_back(w);
        } else if (parent[v] != w) {
          const int len = level[v] + level[w] + 1;
          if (best == kInfinity || len < best) best = len;
        }
      }
    }
  }
  return best;
}

bool bipartite_sign_check(const FsGraph& fs) {
  std::vector<int> sign(fs.vertex_count());
  for (std::size_t v = 0; v < fs.vertex_count(); ++v) sign[v] = permutation_sign(unrank_permutation(v, fs.n()));
  for (std::size_t v = 0; v < fs.vertex_count(); ++v)
    for (auto w : fs.neighbors(v))
      if (sign[v] == sign[w]) return false;
  return true;
}

bool verify_decomposition(const Graph& x, const Graph& y) {
  const int n = x.vertex_count();
  if (n > 7) throw std::invalid_argument("decomposition check limited to n <= 7");
  const auto direct = component_sizes(build(x, y));
  const auto parts = connected_components(x);
  const int r = static_cast<int>(parts.size());

  // Each component of x relabelled onto 0..k-1 in increasing vertex order.
  std::vector<Graph> pieces;
  for (const auto& part : parts) pieces.push_back(induced_subgraph(x, part));

  std::vector<std::uint64_t> predicted;
  std::vector<int> owner(n, -1);
  std::vector<int> fill(r, 0);
  // Assign Y-vertices one at a time to a part; each complete assignment is an
  // ordered set partition with the right block sizes.
  std::function<void(int)> assign = [&](int yv) {
    if (yv == n) {
      std::vector<std::uint64_t> product{1};
      for (int i = 0; i < r; ++i) {
        std::vector<int> block;
        for (int v = 0; v < n; ++v)
          if (owner[v] == i) block.push_back(v);
        const auto sizes = component_sizes(build(pieces[i], induced_subgraph(y, block)));
        std::vector<std::uint64_t> next;
        for (auto p : product)
          for (auto s : sizes) next.push_back(p * s);
        product = std::move(next);
      }
      predicted.insert(predicted.end(), product.begin(), product.end());
      return;
    }
    for (int i = 0; i < r; ++i) {
      if (fill[i] == static_cast<int>(parts[i].size())) continue;
      owner[yv] = i;
      ++fill[i];
      assign(yv + 1);
      --fill[i];
      owner[yv] = -1;
    }
  };
  assign(0);
  std::sort(predicted.begin(), predicted.end());
  return predicted == direct;
}

Exchange exchangeability_oracle(const Graph& x, const Graph& y, const Configuration& sigma, int a, int b) {
  const int n = x.vertex_count();
  if (n > kDefaultExplicitLimit || y.vertex_count() != n) throw std::invalid_argument("exchangeability oracle needs equal sizes n <= 8");
  Configuration target = sigma;
  std::swap(target[a], target[b]);
  const auto start = rank_permutation(sigma), goal = rank_permutation(target);
  std::vector<std::int64_t> parent(factorial(n), -1);
  parent[start] = static_cast<std::int64_t>(start);
  std::queue<std::uint64_t> q;
  q.push(start);
  const auto xe = x.edges();
  while (!q.empty() && parent[goal] < 0) {
    const auto r = q.front();
    q.pop();
    Configuration cur = unrank_permutation(r, n);
    for (const Edge& e : xe) {
      if (!y.has_edge(cur[e.u], cur[e.v])) continue;
      std::swap(cur[e.u], cur[e.v]);
      const auto nr = rank_permutation(cur);
      std::swap(cur[e.u], cur[e.v]);
      if (parent[nr] >= 0) continue;
      parent[nr] = static_cast<std::int64_t>(r);
      q.push(nr);
    }
  }
  Exchange out;
  if (parent[goal] < 0) return out;
  out.reachable = true;
  for (auto r = goal;; r = static_cast<std::uint64_t>(parent[r])) {
    out.path.push_back(unrank_permutation(r, n));
    if (r == start) break;
  }
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

}  // namespace fslab
