#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minusdom/graph.hpp"
#include "minusdom/hitting_set.hpp"

namespace minusdom {

/// Raised when an instance exceeds the configured brute-force limit.
class OracleLimitError : public std::runtime_error {
 public:
  explicit OracleLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleOptions {
  std::optional<int> size_cap;            // restrict to size(f) <= cap
  std::size_t witness_cap = 10000;        // max optimal assignments retained
  bool track_min_size = false;            // also report min size over all valid f
  int vertex_limit = 16;                  // refuse larger instances
};

struct OracleResult {
  /// Minimum weight among valid assignments, empty iff none exists under the
  /// size cap (without a cap the all-ones assignment is always valid).
  std::optional<int> optimum;
  std::vector<MinusFunction> witnesses;
  bool witnesses_capped = false;
  /// Partial assignments visited by the pruned search.
  std::uint64_t explored = 0;
  /// Minimum size over all valid assignments; only set with track_min_size.
  std::optional<int> min_valid_size;

  bool infeasible() const { return !optimum.has_value(); }
};

/// Exact minus-domination number by pruned enumeration of all 3^n
/// assignments. Vertices are processed in breadth-first order so closed
/// neighborhoods complete early; a branch dies as soon as a neighborhood can
/// no longer reach a positive sum.
OracleResult exact_gamma_minus(const Graph& g, const OracleOptions& opts = {});

/// Exact domination number.
int exact_gamma(const Graph& g, int vertex_limit = 16);

/// Maximum number of vertices with pairwise distance > 2 (an independent set
/// in the square of the graph).
int exact_two_packing(const Graph& g, int vertex_limit = 16);

/// Minimum vertex cover size.
int exact_vertex_cover(const Graph& g, int vertex_limit = 24);

/// Black-and-white minimum weight: over assignments f with size(f) <= k,
/// every black vertex must have f(N[x]) >= 1 and every white vertex
/// f(N[x]) >= 0. Returns the minimum weight, or empty when no assignment
/// satisfies the constraints under the size budget. With black = V this is
/// exact_gamma_minus with a size cap.
std::optional<int> exact_bw_min_weight(const Graph& g, const std::vector<int>& black,
                                       int k, int vertex_limit = 16);

/// The same minimum for every budget k = 0..n in one sweep.
std::vector<std::optional<int>> exact_bw_min_weight_all_k(const Graph& g,
                                                          const std::vector<int>& black,
                                                          int vertex_limit = 16);

/// Invokes `fn` for every valid minus-domination function of g.
void for_each_minus_domination(const Graph& g,
                               const std::function<void(const MinusFunction&)>& fn,
                               int vertex_limit = 16);

/// Minimum hitting set meeting every triple in at least two elements.
int exact_hitting_set_32(const HittingSetInstance& inst, int universe_limit = 24);

/// Same, with elements forced into or out of the hitting set. Empty when the
/// forced choices admit no solution.
std::optional<int> exact_hitting_set_32_constrained(const HittingSetInstance& inst,
                                                    const std::vector<int>& include,
                                                    const std::vector<int>& exclude,
                                                    int universe_limit = 24);

}  // namespace minusdom
