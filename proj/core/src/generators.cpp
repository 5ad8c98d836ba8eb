#include "minusdom/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace minusdom {

namespace {

// mt19937 output is identical across platforms; the standard distributions
// are not, so bounded draws go through a plain modulo.
struct Rng {
  std::mt19937 engine;
  explicit Rng(std::uint32_t seed) : engine(seed) {}
  std::uint32_t below(std::uint32_t bound) { return engine() % bound; }
};

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("generator needs n >= 1");
}

void shuffle(std::vector<int>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng.below(static_cast<std::uint32_t>(i))]);
}

// Splits `vertices` by a random balanced-ish cut, alternating no preference
// on the operation: a union joins nothing, a join adds all cross edges.
void cograph_expand(const std::vector<int>& vertices, Rng& rng,
                    std::vector<std::pair<int, int>>& edges) {
  if (vertices.size() <= 1) return;
  std::size_t cut = 1 + rng.below(static_cast<std::uint32_t>(vertices.size() - 1));
  std::vector<int> left(vertices.begin(), vertices.begin() + cut);
  std::vector<int> right(vertices.begin() + cut, vertices.end());
  bool join = rng.below(2) == 0;
  if (join)
    for (int u : left)
      for (int v : right) edges.emplace_back(std::min(u, v), std::max(u, v));
  cograph_expand(left, rng, edges);
  cograph_expand(right, rng, edges);
}

}  // namespace

Graph random_cograph(int n, std::uint32_t seed) {
  check_n(n);
  Rng rng(seed ^ 0x9e3779b9u);
  std::vector<int> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 0);
  shuffle(vertices, rng);
  std::vector<std::pair<int, int>> edges;
  cograph_expand(vertices, rng, edges);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

Graph random_dh(int n, std::uint32_t seed) {
  check_n(n);
  Rng rng(seed ^ 0x1b873593u);
  // Grow by pendant and twin attachments, which preserve the class.
  std::vector<std::vector<int>> adj(n);
  for (int v = 1; v < n; ++v) {
    int anchor = static_cast<int>(rng.below(static_cast<std::uint32_t>(v)));
    switch (rng.below(3)) {
      case 0:  // pendant
        adj[v].push_back(anchor);
        adj[anchor].push_back(v);
        break;
      case 1:  // true twin: copy neighbors and attach to the anchor
        for (int u : adj[anchor]) {
          adj[v].push_back(u);
          adj[u].push_back(v);
        }
        adj[v].push_back(anchor);
        adj[anchor].push_back(v);
        break;
      default:  // false twin: copy neighbors only
        for (int u : adj[anchor]) {
          adj[v].push_back(u);
          adj[u].push_back(v);
        }
        break;
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_interval(int n, std::uint32_t seed) {
  check_n(n);
  Rng rng(seed ^ 0x85ebca6bu);
  std::vector<std::pair<int, int>> intervals(n);
  int span = 4 * n;
  for (auto& [l, r] : intervals) {
    l = static_cast<int>(rng.below(span));
    r = static_cast<int>(rng.below(span));
    if (l > r) std::swap(l, r);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (intervals[u].first <= intervals[v].second &&
          intervals[v].first <= intervals[u].second)
        edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_d_degenerate(int n, int d, std::uint32_t seed) {
  check_n(n);
  if (d < 0) throw std::invalid_argument("degeneracy bound must be nonnegative");
  Rng rng(seed ^ 0xc2b2ae35u);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    int limit = std::min(v, d);
    int back = limit == 0 ? 0 : static_cast<int>(rng.below(limit + 1));
    std::vector<int> pool(v);
    std::iota(pool.begin(), pool.end(), 0);
    shuffle(pool, rng);
    for (int i = 0; i < back; ++i) edges.emplace_back(pool[i], v);
  }
  return Graph::from_edges(n, edges);
}

Graph random_tree(int n, std::uint32_t seed) {
  check_n(n);
  Rng rng(seed ^ 0x27d4eb2fu);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng.below(static_cast<std::uint32_t>(v))), v);
  return Graph::from_edges(n, edges);
}

Graph random_block(int n, std::uint32_t seed) {
  check_n(n);
  Rng rng(seed ^ 0x165667b1u);
  // Attach cliques at cut vertices; every biconnected block is complete.
  std::vector<std::pair<int, int>> edges;
  int built = 1;
  while (built < n) {
    int anchor = static_cast<int>(rng.below(static_cast<std::uint32_t>(built)));
    int fresh = std::min(n - built, 1 + static_cast<int>(rng.below(3)));
    std::vector<int> block{anchor};
    for (int i = 0; i < fresh; ++i) block.push_back(built + i);
    built += fresh;
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        edges.emplace_back(block[i], block[j]);
  }
  return Graph::from_edges(n, edges);
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  int n = 0;
  for (int s : part_sizes) {
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
    n += s;
  }
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace minusdom
