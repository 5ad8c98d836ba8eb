#include "minusdom/cotree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace minusdom {

int Cotree::leaf_count() const {
  int c = 0;
  for (const auto& node : nodes) c += node.kind == NodeKind::Leaf;
  return c;
}

std::vector<std::vector<int>> Cotree::leaf_sets() const {
  std::vector<std::vector<int>> sets(nodes.size());
  std::function<void(int)> walk = [&](int idx) {
    const Node& node = nodes[idx];
    if (node.kind == NodeKind::Leaf) {
      sets[idx] = {node.vertex};
      return;
    }
    walk(node.left);
    walk(node.right);
    std::merge(sets[node.left].begin(), sets[node.left].end(), sets[node.right].begin(),
               sets[node.right].end(), std::back_inserter(sets[idx]));
  };
  if (root >= 0) walk(root);
  return sets;
}

namespace {

// First induced path on four vertices, in path order. Exists in every
// connected, co-connected graph on >= 2 vertices.
std::vector<int> find_induced_p4(const Graph& g) {
  int n = g.n();
  auto is_path = [&](int a, int b, int c, int d) {
    return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && !g.has_edge(a, c) &&
           !g.has_edge(a, d) && !g.has_edge(b, d);
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (a > d) continue;  // each path found once
          if (is_path(a, b, c, d)) return {a, b, c, d};
        }
  return {};
}

struct CotreeBuilder {
  const Graph& g;
  Cotree tree;
  std::vector<int> p4;

  int leaf(int v) {
    tree.nodes.push_back({Cotree::NodeKind::Leaf, -1, -1, v});
    return static_cast<int>(tree.nodes.size()) - 1;
  }

  int internal(Cotree::NodeKind kind, int left, int right) {
    tree.nodes.push_back({kind, left, right, -1});
    return static_cast<int>(tree.nodes.size()) - 1;
  }

  int fold(Cotree::NodeKind kind, const std::vector<int>& children) {
    int acc = children[0];
    for (std::size_t i = 1; i < children.size(); ++i) acc = internal(kind, acc, children[i]);
    return acc;
  }

  // Returns the subtree root for the induced subgraph on `vertices`,
  // or -1 once a P4 certificate has been recorded.
  int build(const std::vector<int>& vertices) {
    if (vertices.size() == 1) return leaf(vertices[0]);
    Graph sub = g.induced(vertices);
    auto parts = sub.components();
    Cotree::NodeKind kind = Cotree::NodeKind::Union;
    if (parts.size() == 1) {
      parts = sub.complement().components();
      kind = Cotree::NodeKind::Join;
    }
    if (parts.size() == 1) {
      auto local = find_induced_p4(sub);
      for (int v : local) p4.push_back(vertices[v]);
      return -1;
    }
    std::vector<int> children;
    for (const auto& part : parts) {
      std::vector<int> mapped;
      mapped.reserve(part.size());
      for (int v : part) mapped.push_back(vertices[v]);
      int child = build(mapped);
      if (child < 0) return -1;
      children.push_back(child);
    }
    return fold(kind, children);
  }
};

}  // namespace

CographRecognition build_cotree(const Graph& g) {
  CographRecognition res;
  if (g.n() == 0) {
    res.cotree = Cotree{};
    return res;
  }
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  CotreeBuilder builder{g, {}, {}};
  int root = builder.build(all);
  if (root < 0) {
    res.p4 = builder.p4;
    return res;
  }
  builder.tree.root = root;
  res.cotree = std::move(builder.tree);
  return res;
}

Graph cotree_to_graph(const Cotree& t) {
  int n = t.leaf_count();
  auto sets = t.leaf_sets();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t idx = 0; idx < t.nodes.size(); ++idx) {
    const auto& node = t.nodes[idx];
    if (node.kind != Cotree::NodeKind::Join) continue;
    for (int u : sets[node.left])
      for (int v : sets[node.right]) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph::from_edges(n, edges);
}

namespace {

struct TermParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(ParseError::Kind::BadToken,
                     msg + " at offset " + std::to_string(pos));
  }

  int parse_term(Cotree& tree) {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of term");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      tree.nodes.push_back({Cotree::NodeKind::Leaf, -1, -1, v});
      return static_cast<int>(tree.nodes.size()) - 1;
    }
    if (c != 'J' && c != 'U') fail("expected 'J', 'U' or a vertex id");
    Cotree::NodeKind kind = c == 'J' ? Cotree::NodeKind::Join : Cotree::NodeKind::Union;
    ++pos;
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> children{parse_term(tree)};
    skip_ws();
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      children.push_back(parse_term(tree));
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
    if (children.size() < 2) fail("internal node needs at least two children");
    int acc = children[0];
    for (std::size_t i = 1; i < children.size(); ++i) {
      tree.nodes.push_back({kind, acc, children[i], -1});
      acc = static_cast<int>(tree.nodes.size()) - 1;
    }
    return acc;
  }
};

}  // namespace

Cotree parse_cotree(const std::string& text) {
  Cotree tree;
  TermParser parser{text};
  tree.root = parser.parse_term(tree);
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing input");
  // Leaves must be a bijection onto 0..n-1.
  std::vector<int> leaves;
  for (const auto& node : tree.nodes)
    if (node.kind == Cotree::NodeKind::Leaf) leaves.push_back(node.vertex);
  std::sort(leaves.begin(), leaves.end());
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i] != static_cast<int>(i))
      throw ParseError(ParseError::Kind::BadToken, "leaves are not 0..n-1 exactly once");
  return tree;
}

std::string write_cotree(const Cotree& t) {
  std::function<std::string(int)> emit = [&](int idx) {
    const auto& node = t.nodes[idx];
    if (node.kind == Cotree::NodeKind::Leaf) return std::to_string(node.vertex);
    std::string head = node.kind == Cotree::NodeKind::Join ? "J" : "U";
    return head + "(" + emit(node.left) + "," + emit(node.right) + ")";
  };
  return t.root >= 0 ? emit(t.root) : std::string();
}

ZetaTable::ZetaTable(int total_n, int leaf_count) : n_(total_n), w_(leaf_count) {
  cells_ = static_cast<std::size_t>(w_ + 1) * (w_ + 2) / 2;
  data_.assign(static_cast<std::size_t>(2 * n_ + 1) * cells_, kNegInf);
}

ZetaTable zeta_leaf(int total_n) {
  ZetaTable z(total_n, 1);
  for (int t = -total_n; t <= total_n; ++t) {
    z.set(t, 1, 0, -1 + t > 0 ? 1 : 0);  // value -1
    z.set(t, 0, 1, t > 0 ? 1 : 0);       // value 0
    z.set(t, 0, 0, 1 + t > 0 ? 1 : 0);   // value +1
  }
  return z;
}

namespace {

// Shared split loop: `shift(a_other, c_other)` yields the t offset a child
// sees from the other side's assignment.
template <typename Shift>
ZetaTable combine_zeta(const ZetaTable& z1, const ZetaTable& z2, Shift&& shift) {
  int n = z1.total_n();
  int w1 = z1.leaf_count(), w2 = z2.leaf_count();
  int w = w1 + w2;
  ZetaTable out(n, w);
  for (int t = -n; t <= n; ++t)
    for (int a = 0; a <= w; ++a)
      for (int b = 0; a + b <= w; ++b) {
        std::int32_t best = ZetaTable::kNegInf;
        for (int a1 = std::max(0, a - w2); a1 <= std::min(a, w1); ++a1)
          for (int b1 = std::max(0, b - (w2 - (a - a1))); b1 <= b && a1 + b1 <= w1; ++b1) {
            int c1 = w1 - a1 - b1;
            int a2 = a - a1, b2 = b - b1;
            int c2 = w2 - a2 - b2;
            if (c2 < 0) continue;
            std::int32_t v1 = z1.at(t + shift(a2, c2), a1, b1);
            std::int32_t v2 = z2.at(t + shift(a1, c1), a2, b2);
            if (v1 == ZetaTable::kNegInf || v2 == ZetaTable::kNegInf) continue;
            best = std::max(best, v1 + v2);
          }
        out.set(t, a, b, best);
      }
  return out;
}

}  // namespace

ZetaTable zeta_union(const ZetaTable& z1, const ZetaTable& z2) {
  return combine_zeta(z1, z2, [](int, int) { return 0; });
}

ZetaTable zeta_join(const ZetaTable& z1, const ZetaTable& z2) {
  // The other side contributes its full weight c - a to every closed
  // neighborhood on this side.
  return combine_zeta(z1, z2, [](int a_other, int c_other) { return c_other - a_other; });
}

namespace {

struct CotreeSolver {
  const Cotree& tree;
  int n;
  std::vector<ZetaTable> tables;
  std::vector<int8_t> values;

  explicit CotreeSolver(const Cotree& t, int total_n)
      : tree(t), n(total_n), values(total_n, 0) {}

  // Walks down the argmax structure re-deriving a split that achieves each
  // cell, assigning leaf values along the way.
  void unwind(int idx, int t, int a, int b) {
    const auto& node = tree.nodes[idx];
    if (node.kind == Cotree::NodeKind::Leaf) {
      values[node.vertex] = a == 1 ? -1 : (b == 1 ? 0 : 1);
      return;
    }
    const ZetaTable& z = tables[idx];
    const ZetaTable& z1 = tables[node.left];
    const ZetaTable& z2 = tables[node.right];
    int w1 = z1.leaf_count(), w2 = z2.leaf_count();
    int w = w1 + w2;
    int c = w - a - b;
    std::int32_t target = z.at(t, a, b);
    bool join = node.kind == Cotree::NodeKind::Join;
    for (int a1 = std::max(0, a - w2); a1 <= std::min(a, w1); ++a1)
      for (int b1 = 0; a1 + b1 <= w1 && b1 <= b; ++b1) {
        int c1 = w1 - a1 - b1;
        int a2 = a - a1, b2 = b - b1, c2 = c - c1;
        if (c2 < 0 || b2 < 0) continue;
        int t1 = t + (join ? c2 - a2 : 0);
        int t2 = t + (join ? c1 - a1 : 0);
        std::int32_t v1 = z1.at(t1, a1, b1);
        std::int32_t v2 = z2.at(t2, a2, b2);
        if (v1 == ZetaTable::kNegInf || v2 == ZetaTable::kNegInf) continue;
        if (v1 + v2 == target) {
          unwind(node.left, z1.clamp(t1), a1, b1);
          unwind(node.right, z2.clamp(t2), a2, b2);
          return;
        }
      }
    throw std::logic_error("no split reproduces the table cell");
  }
};

}  // namespace

GammaMinusSolve gamma_minus_cograph(const Graph& g, const Cotree& tree) {
  if (g.n() == 0) return {0, MinusFunction(std::vector<int8_t>{})};
  Graph back = cotree_to_graph(tree);
  if (back.n() != g.n() || back.edges() != g.edges())
    throw std::invalid_argument("cotree does not reconstruct the input graph");

  CotreeSolver solver(tree, g.n());
  solver.tables.assign(tree.nodes.size(), ZetaTable(0, 0));
  // Build tables bottom-up.
  std::function<void(int)> build = [&](int idx) {
    const auto& node = tree.nodes[idx];
    if (node.kind == Cotree::NodeKind::Leaf) {
      solver.tables[idx] = zeta_leaf(g.n());
      return;
    }
    build(node.left);
    build(node.right);
    solver.tables[idx] = node.kind == Cotree::NodeKind::Union
                             ? zeta_union(solver.tables[node.left], solver.tables[node.right])
                             : zeta_join(solver.tables[node.left], solver.tables[node.right]);
  };
  build(tree.root);

  const ZetaTable& root = solver.tables[tree.root];
  int n = g.n();
  int best = std::numeric_limits<int>::max();
  int best_a = -1, best_b = -1;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      int c = n - a - b;
      if (root.at(0, a, b) != n) continue;
      if (c - a < best) {
        best = c - a;
        best_a = a;
        best_b = b;
      }
    }
  if (best_a < 0) throw std::logic_error("no satisfying cell at the root");
  solver.unwind(tree.root, 0, best_a, best_b);
  return {best, MinusFunction(solver.values)};
}

GammaMinusSolve gamma_minus_cograph(const Graph& g) {
  auto rec = build_cotree(g);
  if (!rec.accepted())
    throw NotInClassError("input graph has an induced four-vertex path", rec.p4);
  return gamma_minus_cograph(g, *rec.cotree);
}

}  // namespace minusdom
