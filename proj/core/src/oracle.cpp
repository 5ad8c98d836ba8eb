#include "minusdom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>

namespace minusdom {

namespace {

// Shared depth-first walk over all assignments V -> {-1,0,1} satisfying
// f(N[x]) >= req[x] for every x. Vertices are assigned in breadth-first
// order; a branch is abandoned as soon as some closed neighborhood cannot
// reach its required sum even if all unassigned members take +1.
class AssignmentWalk {
 public:
  AssignmentWalk(const Graph& g, std::vector<int> req) : g_(g), req_(std::move(req)) {
    order_ = g.bfs_order();
    values_.assign(g.n(), 0);
    sum_.assign(g.n(), 0);
    unassigned_.assign(g.n(), 0);
    for (int x = 0; x < g.n(); ++x) unassigned_[x] = g.degree(x) + 1;
  }

  std::optional<int> size_cap;
  bool weight_prune = false;
  // Branches whose weight lower bound exceeds this are cut when
  // weight_prune is set; callers update it as better assignments appear.
  int best_weight = INT_MAX;
  std::uint64_t explored = 0;

  // fn(values, weight, ones) is called for every surviving full assignment.
  template <typename Fn>
  void run(Fn&& fn) {
    if (g_.n() == 0) {
      fn(values_, 0, 0);
      return;
    }
    descend(0, 0, 0, fn);
  }

 private:
  template <typename Fn>
  void descend(int pos, int weight, int ones, Fn&& fn) {
    const int n = g_.n();
    int v = order_[pos];
    for (int8_t val : {int8_t{-1}, int8_t{0}, int8_t{1}}) {
      if (val == 1 && size_cap && ones + 1 > *size_cap) continue;
      ++explored;
      int w = weight + val;
      // Every remaining vertex can lower the weight by at most one.
      if (weight_prune && w - (n - pos - 1) > best_weight) continue;
      values_[v] = val;
      bool dead = false;
      for (int x : g_.neighbors(v)) {
        sum_[x] += val;
        --unassigned_[x];
        if (sum_[x] + unassigned_[x] < req_[x]) dead = true;
      }
      sum_[v] += val;
      --unassigned_[v];
      if (sum_[v] + unassigned_[v] < req_[v]) dead = true;
      if (!dead) {
        if (pos + 1 == n)
          fn(values_, w, ones + (val == 1));
        else
          descend(pos + 1, w, ones + (val == 1), fn);
      }
      for (int x : g_.neighbors(v)) {
        sum_[x] -= val;
        ++unassigned_[x];
      }
      sum_[v] -= val;
      ++unassigned_[v];
    }
  }

  const Graph& g_;
  std::vector<int> req_;
  std::vector<int> order_;
  std::vector<int8_t> values_;
  std::vector<int> sum_;
  std::vector<int> unassigned_;
};

void check_limit(int n, int limit, const char* what) {
  if (n > limit)
    throw OracleLimitError(std::string(what) + ": instance size " + std::to_string(n) +
                           " exceeds brute-force limit " + std::to_string(limit));
}

}  // namespace

OracleResult exact_gamma_minus(const Graph& g, const OracleOptions& opts) {
  check_limit(g.n(), opts.vertex_limit, "exact_gamma_minus");
  AssignmentWalk walk(g, std::vector<int>(g.n(), 1));
  walk.size_cap = opts.size_cap;
  // With the minimum-size sweep every valid assignment must be visited, so
  // the weight bound cannot be used to cut branches.
  walk.weight_prune = !opts.track_min_size;
  if (!opts.size_cap && !opts.track_min_size) walk.best_weight = g.n();

  OracleResult res;
  walk.run([&](const std::vector<int8_t>& values, int weight, int ones) {
    if (opts.track_min_size)
      res.min_valid_size = std::min(res.min_valid_size.value_or(INT_MAX), ones);
    if (!res.optimum || weight < *res.optimum) {
      res.optimum = weight;
      res.witnesses.clear();
      res.witnesses_capped = false;
      walk.best_weight = weight;
    }
    if (weight == *res.optimum) {
      if (res.witnesses.size() < opts.witness_cap)
        res.witnesses.emplace_back(values);
      else
        res.witnesses_capped = true;
    }
  });
  res.explored = walk.explored;
  return res;
}

int exact_gamma(const Graph& g, int vertex_limit) {
  check_limit(g.n(), std::min(vertex_limit, 30), "exact_gamma");
  int n = g.n();
  if (n == 0) return 0;
  std::vector<std::uint32_t> cover(n);
  for (int v = 0; v < n; ++v) {
    cover[v] = 1u << v;
    for (int u : g.neighbors(v)) cover[v] |= 1u << u;
  }
  std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  int best = n;
  for (std::uint32_t mask = 0; mask <= all; ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    std::uint32_t covered = 0;
    for (std::uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      covered |= cover[v];
    }
    if (covered == all) best = size;
  }
  return best;
}

int exact_two_packing(const Graph& g, int vertex_limit) {
  check_limit(g.n(), std::min(vertex_limit, 30), "exact_two_packing");
  int n = g.n();
  if (n == 0) return 0;
  // Conflicts are pairs at distance <= 2: adjacency of the square.
  std::vector<std::uint32_t> conflict(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) {
      conflict[v] |= 1u << u;
      for (int w : g.neighbors(u))
        if (w != v) conflict[v] |= 1u << w;
    }
  std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  int best = 0;
  for (std::uint32_t mask = 0; mask <= all; ++mask) {
    if (std::popcount(mask) <= best) continue;
    bool ok = true;
    for (std::uint32_t rest = mask; rest && ok;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (conflict[v] & mask) ok = false;
    }
    if (ok) best = std::popcount(mask);
  }
  return best;
}

namespace {

int max_independent_set(const std::vector<std::uint32_t>& adj, std::uint32_t active) {
  if (!active) return 0;
  // Highest-degree vertex within the active set.
  int pick = -1, pick_deg = -1;
  for (std::uint32_t rest = active; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    int d = std::popcount(adj[v] & active);
    if (d > pick_deg) {
      pick = v;
      pick_deg = d;
    }
  }
  if (pick_deg == 0) return std::popcount(active);
  if (pick_deg == 1) {
    // Active graph is a matching plus isolated vertices.
    int edges = 0;
    for (std::uint32_t rest = active; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      edges += std::popcount(adj[v] & active);
    }
    return std::popcount(active) - edges / 2;
  }
  std::uint32_t bit = 1u << pick;
  int with = 1 + max_independent_set(adj, active & ~(adj[pick] | bit));
  int without = max_independent_set(adj, active & ~bit);
  return std::max(with, without);
}

}  // namespace

int exact_vertex_cover(const Graph& g, int vertex_limit) {
  check_limit(g.n(), std::min(vertex_limit, 30), "exact_vertex_cover");
  int n = g.n();
  if (n == 0) return 0;
  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) adj[v] |= 1u << u;
  std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  return n - max_independent_set(adj, all);
}

std::optional<int> exact_bw_min_weight(const Graph& g, const std::vector<int>& black,
                                       int k, int vertex_limit) {
  check_limit(g.n(), vertex_limit, "exact_bw_min_weight");
  std::vector<int> req(g.n(), 0);
  for (int v : black) req[v] = 1;
  AssignmentWalk walk(g, std::move(req));
  walk.size_cap = k;
  walk.weight_prune = true;
  std::optional<int> best;
  walk.run([&](const std::vector<int8_t>&, int weight, int) {
    if (!best || weight < *best) {
      best = weight;
      walk.best_weight = weight;
    }
  });
  return best;
}

std::vector<std::optional<int>> exact_bw_min_weight_all_k(const Graph& g,
                                                          const std::vector<int>& black,
                                                          int vertex_limit) {
  check_limit(g.n(), vertex_limit, "exact_bw_min_weight_all_k");
  std::vector<int> req(g.n(), 0);
  for (int v : black) req[v] = 1;
  AssignmentWalk walk(g, std::move(req));
  std::vector<std::optional<int>> best_by_size(g.n() + 1);
  walk.run([&](const std::vector<int8_t>&, int weight, int ones) {
    auto& slot = best_by_size[ones];
    if (!slot || weight < *slot) slot = weight;
  });
  // A budget k admits any size <= k.
  std::vector<std::optional<int>> res(g.n() + 1);
  std::optional<int> running;
  for (int k = 0; k <= g.n(); ++k) {
    if (best_by_size[k] && (!running || *best_by_size[k] < *running)) running = best_by_size[k];
    res[k] = running;
  }
  return res;
}

void for_each_minus_domination(const Graph& g,
                               const std::function<void(const MinusFunction&)>& fn,
                               int vertex_limit) {
  check_limit(g.n(), vertex_limit, "for_each_minus_domination");
  AssignmentWalk walk(g, std::vector<int>(g.n(), 1));
  walk.run([&](const std::vector<int8_t>& values, int, int) { fn(MinusFunction(values)); });
}

namespace {

struct HittingSearch {
  const std::vector<std::uint32_t>& triples;
  int best = INT_MAX;

  void rec(std::uint32_t chosen, std::uint32_t banned, int count) {
    if (count >= best) return;
    const std::uint32_t* open = nullptr;
    for (const auto& t : triples)
      if (std::popcount(t & chosen) < 2) {
        open = &t;
        break;
      }
    if (!open) {
      best = count;
      return;
    }
    int needed = 2 - std::popcount(*open & chosen);
    std::uint32_t avail = *open & ~chosen & ~banned;
    if (std::popcount(avail) < needed || count + needed >= best) return;
    while (avail) {
      std::uint32_t bit = avail & -avail;
      avail ^= bit;
      rec(chosen | bit, banned, count + 1);
      banned |= bit;
    }
  }
};

}  // namespace

std::optional<int> exact_hitting_set_32_constrained(const HittingSetInstance& inst,
                                                    const std::vector<int>& include,
                                                    const std::vector<int>& exclude,
                                                    int universe_limit) {
  inst.validate();
  check_limit(inst.universe_size, std::min(universe_limit, 30), "exact_hitting_set_32");
  std::vector<std::uint32_t> triples;
  for (const auto& t : inst.triples)
    triples.push_back((1u << t[0]) | (1u << t[1]) | (1u << t[2]));
  std::uint32_t chosen = 0, banned = 0;
  for (int e : include) chosen |= 1u << e;
  for (int e : exclude) banned |= 1u << e;
  if (chosen & banned) throw std::invalid_argument("element both included and excluded");
  HittingSearch search{triples};
  search.best = inst.universe_size + 1;
  search.rec(chosen, banned, std::popcount(chosen));
  if (search.best > inst.universe_size) return std::nullopt;
  return search.best;
}

int exact_hitting_set_32(const HittingSetInstance& inst, int universe_limit) {
  auto res = exact_hitting_set_32_constrained(inst, {}, {}, universe_limit);
  // Unconstrained instances always admit the whole universe.
  return res.value();
}

}  // namespace minusdom
