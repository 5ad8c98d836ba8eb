#include "minusdom/reductions.hpp"

#include <stdexcept>

namespace minusdom {

HittingSetInstance vc_to_hs32(const Graph& g) {
  if (g.m() == 0) throw std::invalid_argument("vertex-cover reduction needs at least one edge");
  HittingSetInstance inst;
  inst.universe_size = g.n() + 4;
  int alpha = g.n(), beta = g.n() + 1, gamma = g.n() + 2, delta = g.n() + 3;
  for (auto [u, v] : g.edges()) inst.triples.push_back({u, v, alpha});
  inst.triples.push_back({alpha, beta, gamma});
  inst.triples.push_back({alpha, beta, delta});
  return inst;
}

SplitgraphInstance hs32_to_splitgraph(const HittingSetInstance& inst) {
  inst.validate();
  SplitgraphInstance res;
  res.universe_size = inst.universe_size;
  res.triple_count = static_cast<int>(inst.triples.size());
  res.padding_size = res.universe_size + res.triple_count + 1;

  std::vector<std::pair<int, int>> edges;
  int clique = res.universe_size + res.padding_size;  // U together with X
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
  for (int i = 0; i < res.padding_size; ++i)
    edges.emplace_back(res.x_begin() + i, res.xprime_begin() + i);
  for (int c = 0; c < res.triple_count; ++c)
    for (int e : inst.triples[c]) edges.emplace_back(e, res.c_begin() + c);
  res.graph = Graph::from_edges(res.n(), edges);
  return res;
}

GadgetL gadget_L() {
  // Block layout a,b,c,d,e,f; hubs are b, c, e (degree four), the rest have
  // degree two. The connector is a path g-h-i with g,h on the left hub c
  // and h,i on the right one.
  auto block = [](int base, std::vector<std::pair<int, int>>& edges) {
    const int a = base, b = base + 1, c = base + 2, d = base + 3, e = base + 4, f = base + 5;
    for (auto [u, v] : std::initializer_list<std::pair<int, int>>{
             {a, b}, {a, c}, {b, c}, {b, d}, {b, e}, {c, e}, {c, f}, {d, e}, {e, f}})
      edges.emplace_back(u, v);
  };
  std::vector<std::pair<int, int>> edges;
  block(0, edges);
  block(6, edges);
  const int left_hub = 2, right_hub = 8, g = 12, h = 13, i = 14;
  edges.emplace_back(g, h);
  edges.emplace_back(h, i);
  edges.emplace_back(left_hub, g);
  edges.emplace_back(left_hub, h);
  edges.emplace_back(right_hub, h);
  edges.emplace_back(right_hub, i);

  GadgetL gadget;
  gadget.graph = Graph::from_edges(15, edges);
  gadget.optimum = MinusFunction(std::vector<int8_t>{-1, 1, 1, -1, 1, -1,    // left block
                                                     -1, 1, 1, -1, 1, -1,    // right block
                                                     -1, 1, -1});            // connector
  return gadget;
}

Graph zero_reduction(const Graph& h, int copies) {
  if (copies < 0) throw std::invalid_argument("copy count must be nonnegative");
  Graph result = h;
  Graph gadget = gadget_L().graph;
  for (int i = 0; i < copies; ++i) result = Graph::disjoint_union(result, gadget);
  return result;
}

}  // namespace minusdom
