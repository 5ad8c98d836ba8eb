#pragma once

#include <vector>

#include "minusdom/graph.hpp"
#include "minusdom/hitting_set.hpp"

namespace minusdom {

/// Vertex cover to (3,2)-hitting set: one triple {u, v, alpha} per edge plus
/// the two anchor triples {alpha, beta, gamma} and {alpha, beta, delta}.
/// The optimum shifts by exactly two. Elements n..n+3 are alpha..delta.
HittingSetInstance vc_to_hs32(const Graph& g);

/// Split graph built from a hitting-set instance. Vertex layout: the
/// universe U first, then the clique padding X with |X| = |U| + |C| + 1,
/// then one pendant partner x' per member of X, then one vertex per triple.
/// U and X form a clique; triple vertices attach to their three elements;
/// each x' attaches to its x.
struct SplitgraphInstance {
  Graph graph;
  int universe_size = 0;
  int padding_size = 0;  // |X|
  int triple_count = 0;

  int x_begin() const { return universe_size; }
  int xprime_begin() const { return universe_size + padding_size; }
  int c_begin() const { return universe_size + 2 * padding_size; }
  int n() const { return universe_size + 2 * padding_size + triple_count; }
};

SplitgraphInstance hs32_to_splitgraph(const HittingSetInstance& inst);

/// The fifteen-vertex gadget with minus-domination number -1 and a unique
/// optimal assignment: two six-vertex blocks tied together by a three-vertex
/// path whose ends attach to the blocks' hubs.
struct GadgetL {
  Graph graph;
  MinusFunction optimum;
};
GadgetL gadget_L();

/// Disjoint union of h with `copies` copies of the gadget; h keeps its
/// vertex ids, copies follow in order.
Graph zero_reduction(const Graph& h, int copies);

}  // namespace minusdom
