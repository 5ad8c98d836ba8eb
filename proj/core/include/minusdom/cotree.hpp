#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minusdom/graph.hpp"

namespace minusdom {

/// Raised by a class-restricted solver when the input is outside its class.
/// `certificate` carries the witnessing structure (an induced path, a stuck
/// residual graph, ...).
class NotInClassError : public std::runtime_error {
 public:
  NotInClassError(std::string what, std::vector<int> certificate)
      : std::runtime_error(std::move(what)), certificate_(std::move(certificate)) {}
  const std::vector<int>& certificate() const { return certificate_; }

 private:
  std::vector<int> certificate_;
};

/// Rooted binary decomposition tree: leaves carry vertices, internal nodes
/// are unions (no cross edges) or joins (all cross edges).
struct Cotree {
  enum class NodeKind { Leaf, Union, Join };
  struct Node {
    NodeKind kind = NodeKind::Leaf;
    int left = -1;
    int right = -1;
    int vertex = -1;  // leaves only
  };
  std::vector<Node> nodes;
  int root = -1;

  int leaf_count() const;
  /// Sorted vertices below each node.
  std::vector<std::vector<int>> leaf_sets() const;
};

struct CographRecognition {
  std::optional<Cotree> cotree;
  /// Four vertices inducing a path, in path order; set iff recognition failed.
  std::vector<int> p4;
  bool accepted() const { return cotree.has_value(); }
};

/// Recursive recognition: split by components, then by complement
/// components; multiway splits are folded into a binary tree left to right.
CographRecognition build_cotree(const Graph& g);

/// Expands a cotree back into the graph it encodes.
Graph cotree_to_graph(const Cotree& t);

// Term syntax for pre-decomposed inputs: leaf = vertex id, J = join,
// U = union, n-ary children re-associated left to right on load.
// Example: "J(U(0,1),U(2,3))".
Cotree parse_cotree(const std::string& text);
std::string write_cotree(const Cotree& t);

/// Per-node table: entry (t, a, b, c) is the maximum number of vertices x
/// below the node with f(N[x] cap W) + t > 0, over assignments putting a
/// values -1, b values 0 and c values +1 on the node's leaf set W
/// (a + b + c = |W|). t is clamped into [-n, n]; beyond that range every
/// closed-neighborhood sum saturates the comparison.
class ZetaTable {
 public:
  static constexpr std::int32_t kNegInf = std::numeric_limits<std::int32_t>::min();

  ZetaTable(int total_n, int leaf_count);

  int total_n() const { return n_; }
  int leaf_count() const { return w_; }

  std::int32_t at(int t, int a, int b) const { return data_[index(clamp(t), a, b)]; }
  void set(int t, int a, int b, std::int32_t value) { data_[index(t, a, b)] = value; }

  int clamp(int t) const { return t < -n_ ? -n_ : (t > n_ ? n_ : t); }

 private:
  std::size_t index(int t, int a, int b) const {
    return static_cast<std::size_t>(t + n_) * cells_ + tri(a, b);
  }
  std::size_t tri(int a, int b) const {
    return static_cast<std::size_t>(a) * (w_ + 1) - static_cast<std::size_t>(a) * (a - 1) / 2 + b;
  }

  int n_;
  int w_;
  std::size_t cells_;
  std::vector<std::int32_t> data_;
};

/// Single-leaf table: the only member is satisfied iff its own value plus t
/// is positive.
ZetaTable zeta_leaf(int total_n);
/// Union node: children keep the same outside contribution t.
ZetaTable zeta_union(const ZetaTable& z1, const ZetaTable& z2);
/// Join node: each child additionally sees the other side's total c - a.
ZetaTable zeta_join(const ZetaTable& z1, const ZetaTable& z2);

struct GammaMinusSolve {
  int gamma_minus = 0;
  MinusFunction witness;
};

/// Exact minus-domination number of a cograph; throws NotInClassError with
/// an induced-P4 certificate otherwise.
GammaMinusSolve gamma_minus_cograph(const Graph& g);
/// Variant for a pre-built tree; verifies the tree reconstructs g.
GammaMinusSolve gamma_minus_cograph(const Graph& g, const Cotree& tree);

}  // namespace minusdom
