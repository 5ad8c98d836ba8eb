#include "minusdom/degenerate_fpt.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace minusdom {

OmegaSet compute_omega(const Graph& g, const std::vector<int>& black_active, int k) {
  if (k < 1) throw std::invalid_argument("omega needs a positive budget");
  if (black_active.empty()) throw std::invalid_argument("omega needs active black vertices");
  std::vector<char> black(g.n(), 0);
  for (int v : black_active) black[v] = 1;
  auto total = static_cast<long long>(black_active.size());
  OmegaSet omega;
  for (int x = 0; x < g.n(); ++x) {
    long long covered = black[x];
    for (int u : g.neighbors(x)) covered += black[u];
    if (covered * k >= total) omega.vertices.push_back(x);
  }
  return omega;
}

Kernelization kernelize(const Graph& g, const std::vector<int>& black,
                        const std::vector<int>& red, int k) {
  std::vector<char> pinned(g.n(), 0);
  for (int v : black) pinned[v] = 1;
  for (int v : red) pinned[v] = 1;

  // Trace = the set of numbered closed neighborhoods containing the vertex.
  std::vector<int> owners;
  for (int v = 0; v < g.n(); ++v)
    if (pinned[v]) owners.push_back(v);
  std::map<std::vector<int>, std::vector<int>> by_trace;
  for (int v = 0; v < g.n(); ++v) {
    if (pinned[v]) continue;
    std::vector<int> trace;
    for (std::size_t i = 0; i < owners.size(); ++i) {
      int o = owners[i];
      if (o == v || g.has_edge(o, v)) trace.push_back(static_cast<int>(i));
    }
    by_trace[std::move(trace)].push_back(v);
  }

  Kernelization res;
  std::vector<int> kept = owners;
  for (auto& [trace, members] : by_trace) {
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size() && i < static_cast<std::size_t>(k); ++i)
      kept.push_back(members[i]);
    res.classes.push_back(members);
  }
  std::sort(kept.begin(), kept.end());
  res.kept = kept;
  res.h = g.induced(kept);
  return res;
}

namespace {

struct MaskSolver {
  const Graph& g;
  int n;
  int k;
  std::uint64_t black_mask = 0;
  std::vector<std::uint64_t> nbr;  // closed neighborhood masks
  int d;
  std::vector<int> cand_pool;  // twin-reduced +1 candidates, ascending

  std::set<std::uint64_t> memo;
  std::map<std::uint64_t, std::pair<int, std::uint64_t>> red_memo;  // ones -> (count, reds)
  std::uint64_t omega_checks = 0;

  bool have_best = false;
  int best_weight = 0;
  std::uint64_t best_ones = 0, best_reds = 0;
  std::vector<BranchStep> trace, best_trace;

  MaskSolver(const Graph& graph, const std::vector<int>& black, int budget)
      : g(graph), n(graph.n()), k(budget) {
    nbr.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      nbr[v] = 1ull << v;
      for (int u : g.neighbors(v)) nbr[v] |= 1ull << u;
    }
    for (int v : black) black_mask |= 1ull << v;
    d = degeneracy(g).d;
    build_candidates();
  }

  // Swapping values between true twins, or between false twins of the same
  // color, changes no closed-neighborhood sum that matters, so at most k
  // +1-candidates per twin class suffice.
  void build_candidates() {
    std::vector<int> rep(n);
    for (int v = 0; v < n; ++v) rep[v] = v;
    std::function<int(int)> find = [&](int v) {
      while (rep[v] != v) v = rep[v] = rep[rep[v]];
      return v;
    };
    auto unite = [&](int a, int b) { rep[find(a)] = find(b); };
    std::map<std::uint64_t, int> by_closed;
    std::map<std::pair<std::uint64_t, bool>, int> by_open;
    for (int v = 0; v < n; ++v) {
      std::uint64_t open = nbr[v] & ~(1ull << v);
      bool is_black = black_mask >> v & 1;
      if (auto [it, fresh] = by_closed.try_emplace(nbr[v], v); !fresh) unite(v, it->second);
      if (auto [it, fresh] = by_open.try_emplace({open, is_black}, v); !fresh)
        unite(v, it->second);
    }
    std::map<int, int> kept_per_class;
    for (int v = 0; v < n; ++v)
      if (kept_per_class[find(v)]++ < k) cand_pool.push_back(v);
  }

  int active_black_count(std::uint64_t forced, std::uint64_t* active_out) const {
    std::uint64_t active = 0;
    for (std::uint64_t rest = black_mask; rest;) {
      int x = std::countr_zero(rest);
      rest &= rest - 1;
      if (!(nbr[x] & forced)) active |= 1ull << x;
    }
    *active_out = active;
    return std::popcount(active);
  }

  void search(std::uint64_t forced) {
    if (!memo.insert(forced).second) return;
    int budget = k - std::popcount(forced);
    std::uint64_t active;
    int active_count = active_black_count(forced, &active);
    if (static_cast<long long>(active_count) >
        static_cast<long long>(4 * d + 2) * budget) {
      if (budget == 0) return;  // uncovered black vertices, no budget left
      std::vector<int> omega;
      for (int x = 0; x < n; ++x)
        if (static_cast<long long>(std::popcount(nbr[x] & active)) * budget >= active_count)
          omega.push_back(x);
      ++omega_checks;
      if (static_cast<long long>(omega.size()) >
          static_cast<long long>(4 * d + 2) * budget)
        throw std::logic_error("omega bound violated");
      for (int v : omega) {
        trace.push_back({v, omega});
        search(forced | 1ull << v);
        trace.pop_back();
      }
      return;
    }
    kernel_finish(forced, budget);
  }

  void kernel_finish(std::uint64_t forced, int budget) {
    std::vector<int> cands;
    for (int v : cand_pool)
      if (!(forced >> v & 1)) cands.push_back(v);
    enumerate_ones(cands, 0, forced, budget);
  }

  void enumerate_ones(const std::vector<int>& cands, std::size_t start, std::uint64_t ones,
                      int budget) {
    evaluate(ones);
    if (budget == 0) return;
    for (std::size_t i = start; i < cands.size(); ++i)
      enumerate_ones(cands, i + 1, ones | 1ull << cands[i], budget - 1);
  }

  void evaluate(std::uint64_t ones) {
    auto it = red_memo.find(ones);
    std::pair<int, std::uint64_t> completion;
    if (it != red_memo.end()) {
      completion = it->second;
      if (completion.first < 0) return;  // infeasible even without reds
    } else {
      completion = best_reds_for(ones);
      red_memo.emplace(ones, completion);
      if (completion.first < 0) return;
    }
    int weight = std::popcount(ones) - completion.first;
    if (!have_best || weight < best_weight) {
      have_best = true;
      best_weight = weight;
      best_ones = ones;
      best_reds = completion.second;
      best_trace = trace;
    }
  }

  // Exact maximum set of -1s: each vertex x tolerates at most
  // |N[x] cap ones| - [x black] of them in its closed neighborhood.
  std::pair<int, std::uint64_t> best_reds_for(std::uint64_t ones) const {
    std::vector<int> slack(n);
    std::vector<int> cands;
    for (int x = 0; x < n; ++x) {
      slack[x] = std::popcount(nbr[x] & ones) - (black_mask >> x & 1);
      if (slack[x] < 0) return {-1, 0};
    }
    for (int v = 0; v < n; ++v)
      if (!(ones >> v & 1) && slack[v] >= 1) cands.push_back(v);

    int best = 0;
    std::uint64_t best_mask = 0;
    std::vector<int> used(n, 0);
    std::uint64_t current = 0;
    std::function<void(std::size_t, int)> dfs = [&](std::size_t i, int count) {
      if (count > best) {
        best = count;
        best_mask = current;
      }
      if (i == cands.size() || count + static_cast<int>(cands.size() - i) <= best) return;
      int v = cands[i];
      bool fits = true;
      for (std::uint64_t rest = nbr[v]; rest;) {
        int x = std::countr_zero(rest);
        rest &= rest - 1;
        if (used[x] + 1 > slack[x]) {
          fits = false;
          break;
        }
      }
      if (fits) {
        for (std::uint64_t rest = nbr[v]; rest;) {
          int x = std::countr_zero(rest);
          rest &= rest - 1;
          ++used[x];
        }
        current |= 1ull << v;
        dfs(i + 1, count + 1);
        current &= ~(1ull << v);
        for (std::uint64_t rest = nbr[v]; rest;) {
          int x = std::countr_zero(rest);
          rest &= rest - 1;
          --used[x];
        }
      }
      dfs(i + 1, count);
    };
    dfs(0, 0);
    return {best, best_mask};
  }
};

}  // namespace

BWSolveResult solve_bw_fpt(const Graph& g, const std::vector<int>& black, int k) {
  if (k < 0) throw std::invalid_argument("budget must be nonnegative");
  if (g.n() > 64) throw std::invalid_argument("search-tree solver handles up to 64 vertices");
  BWSolveResult res;
  if (g.n() == 0) {
    res.solved = true;
    res.witness = MinusFunction(std::vector<int8_t>{});
    return res;
  }
  MaskSolver solver(g, black, k);
  solver.search(0);
  res.omega_checks = solver.omega_checks;
  if (!solver.have_best) return res;

  res.solved = true;
  res.weight = solver.best_weight;
  std::vector<int8_t> values(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (solver.best_ones >> v & 1)
      values[v] = 1;
    else if (solver.best_reds >> v & 1)
      values[v] = -1;
  }
  res.witness = MinusFunction(values);
  res.branch_trace = solver.best_trace;

  // The witness must satisfy every original constraint.
  for (int x = 0; x < g.n(); ++x) {
    int sum = 0;
    for (std::uint64_t rest = solver.nbr[x]; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      sum += values[u];
    }
    int need = solver.black_mask >> x & 1;
    if (sum < need) throw std::logic_error("search produced an invalid witness");
  }
  if (res.witness.size() > k || res.witness.weight() != res.weight)
    throw std::logic_error("witness does not match the reported weight");
  return res;
}

ZhengReport check_zheng_bounds(const Graph& g, const MinusFunction& f, int k) {
  for (int v = 0; v < g.n(); ++v) {
    if (f.value(v) == 0) continue;
    int nonzero_deg = 0;
    for (int u : g.neighbors(v)) nonzero_deg += f.value(u) != 0;
    if (nonzero_deg >= 2 * k) return {false, 1};
  }
  for (int v = 0; v < g.n(); ++v) {
    if (f.value(v) != -1) continue;
    int ones = 0;
    for (int u : g.neighbors(v)) ones += f.value(u) == 1;
    if (ones < 2) return {false, 2};
  }
  if (f.negative_count() >= 2 * k * k) return {false, 3};
  return {};
}

}  // namespace minusdom
