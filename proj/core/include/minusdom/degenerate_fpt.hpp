#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minusdom/graph.hpp"

namespace minusdom {

// Black-and-white minus domination: an assignment is admissible when every
// black vertex x has f(N[x]) >= 1, every white vertex keeps f(N[x]) >= 0,
// and at most k vertices carry +1. With all vertices black this is plain
// minus domination with a size budget.

struct OmegaSet {
  /// Vertices whose closed neighborhood covers at least |B|/k of the active
  /// black set, ascending.
  std::vector<int> vertices;
};

/// Exact rational comparison |N[x] cap B| * k >= |B|; requires k >= 1 and a
/// nonempty active black set.
OmegaSet compute_omega(const Graph& g, const std::vector<int>& black_active, int k);

struct Kernelization {
  /// Kept vertices (original ids, sorted): all of black and red, plus at
  /// most k representatives per trace class of the remaining vertices.
  std::vector<int> kept;
  /// The reduced graph, induced on `kept`; vertex i of h is kept[i].
  Graph h;
  /// Trace classes over the vertices outside black and red, each sorted;
  /// two vertices are equivalent when they lie in exactly the same closed
  /// neighborhoods of black/red vertices.
  std::vector<std::vector<int>> classes;
};

/// Equivalence-class reduction over the closed neighborhoods of black and
/// red vertices. Black and red vertices are never deleted.
Kernelization kernelize(const Graph& g, const std::vector<int>& black,
                        const std::vector<int>& red, int k);

struct BranchStep {
  int vertex;
  std::vector<int> omega;
};

struct BWSolveResult {
  bool solved = false;
  int weight = 0;
  MinusFunction witness;
  /// Branching decisions on the path to the winning leaf; each chosen
  /// vertex is a member of the omega set recorded with it.
  std::vector<BranchStep> branch_trace;
  std::uint64_t omega_checks = 0;
};

/// Search-tree solver: while the active black set is larger than (4d+2)
/// times the remaining budget, branch over the omega set; afterwards
/// enumerate +1 placements over twin-reduced candidates and complete each
/// with an exact maximum packing of -1s. The omega bound |omega| <=
/// (4d+2) * budget is asserted at runtime on every branching step.
BWSolveResult solve_bw_fpt(const Graph& g, const std::vector<int>& black, int k);

struct ZhengReport {
  bool ok = true;
  /// 1: a nonzero vertex has >= 2k nonzero neighbors; 2: a red vertex has
  /// fewer than two +1 neighbors; 3: there are >= 2k^2 red vertices.
  int violated_clause = 0;
};

/// Structural consequences of a valid size-<=k assignment (all-black
/// reading): nonzero-degree, red-support and red-count bounds.
ZhengReport check_zheng_bounds(const Graph& g, const MinusFunction& f, int k);

}  // namespace minusdom
