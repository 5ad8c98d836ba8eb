// Exchange arguments on the split-graph construction: each rewrite keeps an
// optimal assignment valid without increasing its weight, and driving them
// to a fixpoint lands in the normal form (padding all +1, pendant partners
// 0, triple vertices -1, universe ones a 2-hitting set).

#include <algorithm>

#include "doctest.h"
#include "minusdom/oracle.hpp"
#include "minusdom/reductions.hpp"
#include "test_util.hpp"

using namespace minusdom;

namespace {

struct Rewriter {
  const SplitgraphInstance& split;
  const Graph& g;

  bool valid(const MinusFunction& f) const { return validate_minus_function(g, f).valid; }

  // Padding vertex not at +1: its pendant partner must carry the one; swap.
  bool lift_padding(std::vector<int8_t>& v) const {
    for (int i = 0; i < split.padding_size; ++i) {
      int x = split.x_begin() + i, xp = split.xprime_begin() + i;
      if (v[x] == 1) continue;
      REQUIRE(v[x] == 0);
      REQUIRE(v[xp] == 1);
      v[x] = 1;
      v[xp] = 0;
      return true;
    }
    return false;
  }

  // Triple vertex valued above the minimum of its three elements: swap.
  bool push_down(std::vector<int8_t>& v) const {
    for (int c = 0; c < split.triple_count; ++c) {
      int cv = split.c_begin() + c;
      int arg = -1;
      for (int u : g.neighbors(cv))
        if (u < split.x_begin() && (arg < 0 || v[u] < v[arg])) arg = u;
      if (v[cv] > v[arg]) {
        std::swap(v[cv], v[arg]);
        return true;
      }
    }
    return false;
  }

  // Triple vertex at 0 whose elements hold {1,0,0}: raise a zero, drop the
  // triple vertex to -1.
  bool trade(std::vector<int8_t>& v) const {
    for (int c = 0; c < split.triple_count; ++c) {
      int cv = split.c_begin() + c;
      if (v[cv] != 0) continue;
      int ones = 0, zero_at = -1;
      for (int u : g.neighbors(cv))
        if (u < split.x_begin()) {
          ones += v[u] == 1;
          if (v[u] == 0 && zero_at < 0) zero_at = u;
        }
      if (ones == 1 && zero_at >= 0) {
        v[zero_at] = 1;
        v[cv] = -1;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

TEST_CASE("normal-form rewrites on split-graph optima") {
  HittingSetInstance inst{3, {{{0, 1, 2}}}};
  auto split = hs32_to_splitgraph(inst);
  const Graph& g = split.graph;
  OracleOptions opts;
  opts.vertex_limit = 14;
  auto oracle = exact_gamma_minus(g, opts);
  REQUIRE(oracle.optimum.has_value());
  REQUIRE_FALSE(oracle.witnesses.empty());
  REQUIRE_FALSE(oracle.witnesses_capped);
  int hs_opt = exact_hitting_set_32(inst);

  Rewriter rw{split, g};
  for (const auto& witness : oracle.witnesses) {
    auto values = std::vector<int8_t>(witness.values());
    int weight = witness.weight();
    // Apply rewrites to a fixpoint; every step must keep validity and never
    // increase the weight.
    bool changed = true;
    int steps = 0;
    while (changed) {
      changed = rw.lift_padding(values) || rw.push_down(values) || rw.trade(values);
      MinusFunction f(values);
      CHECK(rw.valid(f));
      CHECK(f.weight() <= weight);
      weight = f.weight();
      REQUIRE(++steps < 1000);
    }
    CHECK(weight == *oracle.optimum);

    // Normal form reached.
    std::vector<int> universe_ones;
    for (int i = 0; i < split.padding_size; ++i) {
      CHECK(values[split.x_begin() + i] == 1);
      CHECK(values[split.xprime_begin() + i] == 0);
    }
    for (int c = 0; c < split.triple_count; ++c) CHECK(values[split.c_begin() + c] == -1);
    for (int u = 0; u < split.universe_size; ++u) {
      CHECK(values[u] >= 0);
      if (values[u] == 1) universe_ones.push_back(u);
    }
    CHECK(static_cast<int>(universe_ones.size()) == hs_opt);
    for (const auto& triple : inst.triples) {
      int hits = 0;
      for (int e : triple)
        hits += std::find(universe_ones.begin(), universe_ones.end(), e) != universe_ones.end();
      CHECK(hits >= 2);
    }
  }
}
