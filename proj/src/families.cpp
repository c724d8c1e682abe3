#include "fslab/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fslab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

constexpr std::array<std::pair<int, int>, 6> kK4Edges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::array<std::pair<int, int>, 9> k33_edges() {
  std::array<std::pair<int, int>, 9> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[3 * i + j] = {i, 3 + j};
  return out;
}

void require_lengths(const std::vector<int>& lengths, std::size_t count, const char* name) {
  require(lengths.size() == count, std::string(name) + " needs " + std::to_string(count) + " lengths");
  for (int l : lengths) require(l >= 1, std::string(name) + " lengths must be positive");
}

// Builds a subdivision of a simple core graph. Fresh inner vertices are
// numbered after the corners, path by path.
template <std::size_t N>
FamilyGraph subdivide(int corners, const std::array<std::pair<int, int>, N>& core,
                      const std::vector<int>& lengths) {
  int n = corners;
  for (int l : lengths) n += l - 1;
  FamilyGraph out{Graph(n), {}};
  for (int c = 0; c < corners; ++c) out.landmarks.hubs.push_back(c);
  int next = corners;
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<int> path{core[i].first};
    for (int k = 1; k < lengths[i]; ++k) path.push_back(next++);
    path.push_back(core[i].second);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) out.graph.add_edge(path[k], path[k + 1]);
    out.landmarks.paths.push_back(std::move(path));
  }
  return out;
}

FamilyGraph make_theta(const std::vector<int>& lengths) {
  int n = 2;
  for (int l : lengths) n += l - 1;
  FamilyGraph out{Graph(n), {}};
  out.landmarks.hubs = {0, 1};
  int next = 2;
  for (int l : lengths) {
    std::vector<int> path{0};
    for (int k = 1; k < l; ++k) path.push_back(next++);
    path.push_back(1);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) out.graph.add_edge(path[k], path[k + 1]);
    out.landmarks.paths.push_back(std::move(path));
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    require(!item.empty(), "empty number in spec");
    std::size_t used = 0;
    int value = std::stoi(item, &used);
    require(used == item.size(), "bad number in spec: " + item);
    out.push_back(value);
  }
  return out;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<int> canonical_under(const std::vector<int>& lengths, int corners,
                                 const std::vector<std::pair<int, int>>& core,
                                 const std::function<bool(const std::vector<int>&)>& allowed) {
  std::map<std::pair<int, int>, std::size_t> slot;
  for (std::size_t i = 0; i < core.size(); ++i) slot[core[i]] = i;
  std::vector<int> perm(corners);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = lengths;
  do {
    if (!allowed(perm)) continue;
    std::vector<int> image(core.size());
    for (std::size_t i = 0; i < core.size(); ++i) {
      int a = perm[core[i].first], b = perm[core[i].second];
      image[slot.at({std::min(a, b), std::max(a, b)})] = lengths[i];
    }
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Nondecreasing tuples of `count` lengths >= 1 with total excess
// (sum of l - 1) at most `excess`.
void sorted_tuples(int count, int excess, int min_len, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == count) {
    out.push_back(cur);
    return;
  }
  for (int l = min_len; l - 1 <= excess; ++l) {
    cur.push_back(l);
    sorted_tuples(count, excess - (l - 1), l, cur, out);
    cur.pop_back();
  }
}

void all_tuples(int count, int excess, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == count) {
    out.push_back(cur);
    return;
  }
  for (int l = 1; l - 1 <= excess; ++l) {
    cur.push_back(l);
    all_tuples(count, excess - (l - 1), cur, out);
    cur.pop_back();
  }
}

}  // namespace

void validate_spec(const FamilySpec& spec) {
  std::visit(Overloaded{
                 [](const PathSpec& s) { require(s.n >= 1, "path needs n >= 1"); },
                 [](const CycleSpec& s) { require(s.n >= 3, "cycle needs n >= 3"); },
                 [](const StarSpec& s) { require(s.n >= 2, "star needs n >= 2"); },
                 [](const CompleteSpec& s) { require(s.n >= 1, "complete graph needs n >= 1"); },
                 [](const CompleteBipartiteSpec& s) {
                   require(s.left >= 1 && s.right >= 1, "complete bipartite sides must be positive");
                 },
                 [](const Theta0Spec&) {},
                 [](const OneEarSpec& s) {
                   require(2 <= s.v && s.v <= s.n / 2 && s.n / 2 < s.w && s.w <= s.n - 1 &&
                               s.v + (s.n + 1 - s.w) < s.n,
                           "one-ear parameters need 2 <= v <= n/2 < w <= n-1 and v + n + 1 - w < n");
                 },
                 [](const BarbellSpec& s) {
                   require(s.m1 >= 3 && s.m2 >= 3 && s.d >= 0, "barbell needs cycles >= 3 and d >= 0");
                 },
                 [](const ThetaSpec& s) {
                   require(s.lengths.size() >= 2, "theta needs at least two paths");
                   for (int l : s.lengths) require(l >= 1, "theta lengths must be positive");
                   require(std::count(s.lengths.begin(), s.lengths.end(), 1) <= 1,
                           "theta allows at most one path of length 1");
                 },
                 [](const K4SubdivisionSpec& s) { require_lengths(s.lengths, 6, "k4s"); },
                 [](const K33SubdivisionSpec& s) { require_lengths(s.lengths, 9, "k33s"); },
             },
             spec);
}

FamilyGraph make(const FamilySpec& spec) {
  validate_spec(spec);
  return std::visit(
      Overloaded{
          [](const PathSpec& s) {
            FamilyGraph out{Graph(s.n), {}};
            std::vector<int> path;
            for (int i = 0; i < s.n; ++i) {
              path.push_back(i);
              if (i + 1 < s.n) out.graph.add_edge(i, i + 1);
            }
            out.landmarks.paths.push_back(std::move(path));
            return out;
          },
          [](const CycleSpec& s) {
            FamilyGraph out{Graph(s.n), {}};
            std::vector<int> cycle;
            for (int i = 0; i < s.n; ++i) {
              cycle.push_back(i);
              out.graph.add_edge(i, (i + 1) % s.n);
            }
            out.landmarks.hubs = {0};
            out.landmarks.cycles.push_back(std::move(cycle));
            return out;
          },
          [](const StarSpec& s) {
            FamilyGraph out{Graph(s.n), {}};
            for (int i = 0; i + 1 < s.n; ++i) out.graph.add_edge(i, s.n - 1);
            out.landmarks.hubs = {s.n - 1};
            return out;
          },
          [](const CompleteSpec& s) {
            FamilyGraph out{Graph(s.n), {}};
            for (int u = 0; u < s.n; ++u)
              for (int v = u + 1; v < s.n; ++v) out.graph.add_edge(u, v);
            return out;
          },
          [](const CompleteBipartiteSpec& s) {
            FamilyGraph out{Graph(s.left + s.right), {}};
            for (int u = 0; u < s.left; ++u)
              for (int v = 0; v < s.right; ++v) out.graph.add_edge(u, s.left + v);
            return out;
          },
          [](const Theta0Spec&) { return make_theta({2, 3, 3}); },
          [](const OneEarSpec& s) {
            FamilyGraph out{Graph(s.n), {}};
            for (int i = 0; i + 1 < s.n; ++i) out.graph.add_edge(i, i + 1);
            out.graph.add_edge(0, s.w - 1);
            out.graph.add_edge(s.n - 1, s.v - 1);
            const int hv = s.v - 1, hw = s.w - 1;
            out.landmarks.hubs = {hv, hw};
            std::vector<int> down, back, across;
            for (int i = hv; i >= 0; --i) down.push_back(i);
            down.push_back(hw);
            back.push_back(hv);
            for (int i = s.n - 1; i >= hw; --i) back.push_back(i);
            for (int i = hv; i <= hw; ++i) across.push_back(i);
            out.landmarks.paths = {down, back, across};
            return out;
          },
          [](const BarbellSpec& s) {
            const int w = s.d == 0 ? 0 : s.m1 + s.d - 1;
            const int base = s.d == 0 ? s.m1 : s.m1 + s.d;
            FamilyGraph out{Graph(base + s.m2 - 1), {}};
            std::vector<int> c1, bridge{0}, c2{w};
            for (int i = 0; i < s.m1; ++i) {
              c1.push_back(i);
              out.graph.add_edge(i, (i + 1) % s.m1);
            }
            for (int k = 1; k < s.d; ++k) bridge.push_back(s.m1 + k - 1);
            if (s.d > 0) bridge.push_back(w);
            for (std::size_t k = 0; k + 1 < bridge.size(); ++k) out.graph.add_edge(bridge[k], bridge[k + 1]);
            for (int i = 0; i + 1 < s.m2; ++i) c2.push_back(base + i);
            for (std::size_t k = 0; k < c2.size(); ++k) out.graph.add_edge(c2[k], c2[(k + 1) % c2.size()]);
            out.landmarks.hubs = {0, w};
            out.landmarks.cycles = {c1, c2};
            out.landmarks.paths = {bridge};
            return out;
          },
          [](const ThetaSpec& s) { return make_theta(s.lengths); },
          [](const K4SubdivisionSpec& s) { return subdivide(4, kK4Edges, s.lengths); },
          [](const K33SubdivisionSpec& s) { return subdivide(6, k33_edges(), s.lengths); },
      },
      spec);
}

int spec_vertex_count(const FamilySpec& spec) { return make(spec).graph.vertex_count(); }

FamilySpec parse_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::vector<int> args = colon == std::string::npos ? std::vector<int>{} : parse_ints(text.substr(colon + 1));
  auto arity = [&](std::size_t k) { require(args.size() == k, "wrong argument count in spec: " + text); };
  FamilySpec spec;
  if (name == "path") { arity(1); spec = PathSpec{args[0]}; }
  else if (name == "cycle") { arity(1); spec = CycleSpec{args[0]}; }
  else if (name == "star") { arity(1); spec = StarSpec{args[0]}; }
  else if (name == "complete") { arity(1); spec = CompleteSpec{args[0]}; }
  else if (name == "kbip") { arity(2); spec = CompleteBipartiteSpec{args[0], args[1]}; }
  else if (name == "theta0") { arity(0); spec = Theta0Spec{}; }
  else if (name == "onear") { arity(3); spec = OneEarSpec{args[0], args[1], args[2]}; }
  else if (name == "barbell") { arity(3); spec = BarbellSpec{args[0], args[1], args[2]}; }
  else if (name == "theta") { spec = ThetaSpec{args}; }
  else if (name == "k4s") { spec = K4SubdivisionSpec{args}; }
  else if (name == "k33s") { spec = K33SubdivisionSpec{args}; }
  else throw std::invalid_argument("unknown family: " + name);
  validate_spec(spec);
  return spec;
}

std::string format_spec(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const PathSpec& s) { return "path:" + std::to_string(s.n); },
          [](const CycleSpec& s) { return "cycle:" + std::to_string(s.n); },
          [](const StarSpec& s) { return "star:" + std::to_string(s.n); },
          [](const CompleteSpec& s) { return "complete:" + std::to_string(s.n); },
          [](const CompleteBipartiteSpec& s) { return "kbip:" + join({s.left, s.right}); },
          [](const Theta0Spec&) { return std::string("theta0"); },
          [](const OneEarSpec& s) { return "onear:" + join({s.n, s.v, s.w}); },
          [](const BarbellSpec& s) { return "barbell:" + join({s.m1, s.m2, s.d}); },
          [](const ThetaSpec& s) { return "theta:" + join(s.lengths); },
          [](const K4SubdivisionSpec& s) { return "k4s:" + join(s.lengths); },
          [](const K33SubdivisionSpec& s) { return "k33s:" + join(s.lengths); },
      },
      spec);
}

Shape parse_shape(const std::string& text) {
  if (text == "cycle") return Shape::Cycle;
  if (text == "barbell") return Shape::Barbell;
  if (text == "theta" || text == "theta3") return Shape::Theta3;
  if (text == "theta4") return Shape::Theta4;
  if (text == "theta5") return Shape::Theta5;
  if (text == "k4s") return Shape::K4Subdivision;
  if (text == "k33s") return Shape::K33Subdivision;
  throw std::invalid_argument("unknown shape: " + text);
}

std::vector<int> canonical_k4_lengths(const std::vector<int>& lengths) {
  std::vector<std::pair<int, int>> core(kK4Edges.begin(), kK4Edges.end());
  return canonical_under(lengths, 4, core, [](const std::vector<int>&) { return true; });
}

std::vector<int> canonical_k33_lengths(const std::vector<int>& lengths) {
  const auto edges = k33_edges();
  std::vector<std::pair<int, int>> core(edges.begin(), edges.end());
  // Keep the bipartition: either both sides fixed setwise or swapped.
  return canonical_under(lengths, 6, core, [](const std::vector<int>& p) {
    const bool kept = p[0] < 3 && p[1] < 3 && p[2] < 3;
    const bool swapped = p[0] >= 3 && p[1] >= 3 && p[2] >= 3;
    return kept || swapped;
  });
}

std::vector<FamilySpec> enumerate_instances(Shape shape, int vertex_budget) {
  std::vector<std::pair<std::pair<int, std::vector<int>>, FamilySpec>> found;
  auto add = [&](const FamilySpec& s, std::vector<int> key) {
    found.push_back({{spec_vertex_count(s), std::move(key)}, s});
  };
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  switch (shape) {
    case Shape::Cycle:
      for (int n = 3; n <= vertex_budget; ++n) add(CycleSpec{n}, {n});
      break;
    case Shape::Barbell:
      for (int m1 = 3; m1 <= vertex_budget; ++m1)
        for (int m2 = m1; m1 + m2 - 1 <= vertex_budget; ++m2)
          for (int d = 0; m1 + m2 + d - 1 <= vertex_budget; ++d) add(BarbellSpec{m1, m2, d}, {m1, m2, d});
      break;
    case Shape::Theta3:
    case Shape::Theta4:
    case Shape::Theta5: {
      const int k = shape == Shape::Theta3 ? 3 : shape == Shape::Theta4 ? 4 : 5;
      sorted_tuples(k, vertex_budget - 2, 1, cur, tuples);
      for (const auto& t : tuples)
        if (std::count(t.begin(), t.end(), 1) <= 1) add(ThetaSpec{t}, t);
      break;
    }
    case Shape::K4Subdivision:
    case Shape::K33Subdivision: {
      const bool k4 = shape == Shape::K4Subdivision;
      const int corners = k4 ? 4 : 6;
      if (vertex_budget < corners) break;
      all_tuples(k4 ? 6 : 9, vertex_budget - corners, cur, tuples);
      for (const auto& t : tuples) {
        auto canon = k4 ? canonical_k4_lengths(t) : canonical_k33_lengths(t);
        if (canon != t) continue;
        if (k4) add(K4SubdivisionSpec{t}, t);
        else add(K33SubdivisionSpec{t}, t);
      }
      break;
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FamilySpec> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

}  // namespace fslab
