#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "minusdom/cotree.hpp"
#include "minusdom/graph.hpp"

namespace minusdom {

/// Rooted binary decomposition for distance-hereditary graphs. Every node
/// carries its leaf set W and its twinset Q: the vertices of W with a
/// neighbor outside W. All members of a twinset share the same outside
/// neighborhood, so the rest of the graph acts on them uniformly.
struct DHDecomposition {
  enum class NodeKind { Leaf, Union, Join };
  struct Node {
    NodeKind kind = NodeKind::Leaf;
    int left = -1;
    int right = -1;
    int vertex = -1;  // leaves only
  };
  std::vector<Node> nodes;
  int root = -1;
  /// Sorted leaf set per node.
  std::vector<std::vector<int>> leaf_set;
  /// Sorted twinset per node, computed from the graph by definition.
  std::vector<std::vector<int>> twinset;
};

struct DHRecognition {
  std::optional<DHDecomposition> decomposition;
  /// Vertices of the residual graph on which pruning got stuck.
  std::vector<int> stuck;
  bool accepted() const { return decomposition.has_value(); }
};

/// Builds a decomposition by pruning pendant vertices and twins, then
/// reversing the sequence into a tree. Twinsets are recomputed from the
/// graph and all structural invariants are validated before returning.
DHRecognition build_dh_decomposition(const Graph& g);

struct DHValidation {
  bool ok = true;
  std::string detail;
};

/// Checks every structural invariant: leaf bijection, uniform outside
/// neighborhoods per twinset, cross-edge shape at joins and unions, the
/// parent-twinset rule, and exact edge reconstruction.
DHValidation validate_dh_decomposition(const Graph& g, const DHDecomposition& t);

/// Edge set encoded by the decomposition: all twinset-cross pairs at joins.
Graph dh_to_graph(const DHDecomposition& t);

/// Reads the nested term format (same syntax as cotrees); leaf sets and
/// twinsets are derived from the graph.
DHDecomposition parse_dh_decomposition(const std::string& text, const Graph& g);

/// Per-node table: entry (t, a, b, c) is the minimum total weight f(W) over
/// assignments on W that put a values -1, b values 0, c values +1 on the
/// twinset Q (a + b + c = |Q|), satisfy every twinset member at outside
/// contribution t, and satisfy every internal vertex outright. Infeasible
/// cells hold +inf.
class MuTable {
 public:
  static constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();

  MuTable(int total_n, int twinset_size);

  int total_n() const { return n_; }
  int twinset_size() const { return q_; }

  std::int32_t at(int t, int a, int b) const { return data_[index(clamp(t), a, b)]; }
  void set(int t, int a, int b, std::int32_t value) { data_[index(t, a, b)] = value; }
  void relax(int t, int a, int b, std::int32_t value) {
    auto& slot = data_[index(t, a, b)];
    if (value < slot) slot = value;
  }

  int clamp(int t) const { return t < -n_ ? -n_ : (t > n_ ? n_ : t); }

 private:
  std::size_t index(int t, int a, int b) const {
    return static_cast<std::size_t>(t + n_) * cells_ + tri(a, b);
  }
  std::size_t tri(int a, int b) const {
    return static_cast<std::size_t>(a) * (q_ + 1) - static_cast<std::size_t>(a) * (a - 1) / 2 + b;
  }

  int n_;
  int q_;
  std::size_t cells_;
  std::vector<std::int32_t> data_;
};

/// Leaf table. A leaf with neighbors has twinset {v}; an isolated vertex has
/// an empty twinset and must satisfy itself outright (value +1).
MuTable mu_leaf(int total_n, bool has_neighbors);

/// Combines two child tables at an internal node. `remain1`/`remain2` say
/// whether each child's twinset stays exposed in the parent twinset; an
/// exiting twinset is satisfied on the spot with its final cross
/// contribution (join: the other side's c - a, union: zero).
MuTable mu_combine(DHDecomposition::NodeKind kind, bool remain1, bool remain2,
                   const MuTable& m1, const MuTable& m2);

/// Exact minus-domination number of a distance-hereditary graph; throws
/// NotInClassError with the stuck residual as certificate otherwise.
GammaMinusSolve gamma_minus_dh(const Graph& g);
GammaMinusSolve gamma_minus_dh(const Graph& g, const DHDecomposition& tree);

}  // namespace minusdom
