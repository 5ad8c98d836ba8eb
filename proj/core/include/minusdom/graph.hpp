#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minusdom {

/// Error raised while reading one of the text formats. `kind` distinguishes
/// the failure classes so callers can report them precisely.
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    BadHeader,
    BadEdgeLine,
    VertexOutOfRange,
    Loop,
    DuplicateEdge,
    BadToken,
    WrongTokenCount,
  };

  ParseError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Undirected simple graph over vertices 0..n-1. Immutable once built;
/// adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws ParseError on loops, duplicate
  /// edges or out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  /// N[v] = {v} plus neighbors, sorted.
  std::vector<int> closed_neighborhood(int v) const;

  /// Sorted list of edges (u, v) with u < v.
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;

  /// Induced subgraph on `vertices` (need not be sorted); vertex i of the
  /// result corresponds to the i-th entry of the sorted vertex list.
  Graph induced(std::vector<int> vertices) const;

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> components() const;
  bool is_connected() const;

  /// Breadth-first order over all vertices, components visited in id order,
  /// neighbors expanded in ascending id order.
  std::vector<int> bfs_order() const;

  static Graph disjoint_union(const Graph& a, const Graph& b);

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

/// Assignment V -> {-1, 0, 1}.
class MinusFunction {
 public:
  MinusFunction() = default;
  explicit MinusFunction(std::vector<int8_t> values);

  int n() const { return static_cast<int>(values_.size()); }
  int value(int v) const { return values_[v]; }
  const std::vector<int8_t>& values() const { return values_; }

  /// Sum of all values.
  int weight() const;
  /// Number of vertices assigned +1 (the "size" of the assignment).
  int size() const;
  /// Number of vertices assigned -1.
  int negative_count() const;

  bool operator==(const MinusFunction& other) const = default;

 private:
  std::vector<int8_t> values_;
};

struct ValidationReport {
  bool valid = false;
  /// Vertices x with f(N[x]) <= 0, ascending.
  std::vector<int> violators;
};

/// Checks f(N[x]) > 0 for every vertex. Throws std::invalid_argument when
/// the assignment length does not match the graph.
ValidationReport validate_minus_function(const Graph& g, const MinusFunction& f);

/// True iff every vertex has a closed neighbor in `set`.
bool is_dominating_set(const Graph& g, const std::vector<int>& set);

/// Degeneracy and a removal ordering: repeatedly delete a minimum-degree
/// vertex (lowest id on ties). Every vertex has at most `d` neighbors later
/// in the ordering.
struct DegeneracyResult {
  int d = 0;
  std::vector<int> ordering;
};
DegeneracyResult degeneracy(const Graph& g);

// Text formats.
//
// Graph file: line 1 is "n m", then m lines "u v" (normalized to u < v on
// write). '#' starts a comment line, blank lines are ignored.
// Assignment file: n whitespace-separated tokens from {-1, 0, 1}.
Graph parse_graph(const std::string& text);
Graph parse_graph(std::istream& in);
std::string write_graph(const Graph& g);

MinusFunction parse_assignment(const std::string& text);
std::string write_assignment(const MinusFunction& f);

}  // namespace minusdom
