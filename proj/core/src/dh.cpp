#include "minusdom/dh.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace minusdom {

namespace {

enum class StepKind { Pendant, TrueTwin, FalseTwin };

struct PruneStep {
  int removed;
  int partner;
  StepKind kind;
};

// Prunes one connected set of vertices down to a single one, or reports the
// stuck residual. Works on a dense adjacency copy.
struct Pruner {
  int n;
  std::vector<std::vector<char>> adj;
  std::vector<char> active;
  std::vector<int> deg;

  explicit Pruner(const Graph& g, const std::vector<int>& vertices)
      : n(g.n()), adj(n, std::vector<char>(n, 0)), active(n, 0), deg(n, 0) {
    for (int v : vertices) active[v] = 1;
    for (int v : vertices)
      for (int u : g.neighbors(v))
        if (active[u]) {
          adj[v][u] = 1;
          ++deg[v];
        }
  }

  bool same_row_except(int u, int v) const {
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v || !active[w]) continue;
      if (adj[u][w] != adj[v][w]) return false;
    }
    return true;
  }

  void remove(int v) {
    active[v] = 0;
    for (int w = 0; w < n; ++w)
      if (adj[v][w]) {
        adj[v][w] = adj[w][v] = 0;
        --deg[w];
      }
    deg[v] = 0;
  }

  std::optional<PruneStep> next_step(int active_count) {
    if (active_count < 2) return std::nullopt;
    for (int v = 0; v < n; ++v)
      if (active[v] && deg[v] == 1) {
        int partner = -1;
        for (int w = 0; w < n; ++w)
          if (adj[v][w]) partner = w;
        return PruneStep{v, partner, StepKind::Pendant};
      }
    for (int u = 0; u < n; ++u) {
      if (!active[u]) continue;
      for (int v = u + 1; v < n; ++v) {
        if (!active[v] || !same_row_except(u, v)) continue;
        if (adj[u][v]) return PruneStep{v, u, StepKind::TrueTwin};
        return PruneStep{v, u, StepKind::FalseTwin};
      }
    }
    return std::nullopt;
  }
};

struct TreeBuilder {
  std::vector<DHDecomposition::Node> nodes;
  std::vector<int> parent;
  std::vector<int> leaf_of;

  explicit TreeBuilder(int n) : leaf_of(n, -1) {}

  int add(DHDecomposition::Node node) {
    nodes.push_back(node);
    parent.push_back(-1);
    return static_cast<int>(nodes.size()) - 1;
  }

  int leaf(int v) {
    int idx = add({DHDecomposition::NodeKind::Leaf, -1, -1, v});
    leaf_of[v] = idx;
    return idx;
  }

  // Replaces the partner's leaf by an internal node whose children are that
  // leaf and a fresh leaf for the re-added vertex.
  int attach(const PruneStep& step) {
    int old = leaf_of[step.partner];
    int fresh = leaf(step.removed);
    auto kind = step.kind == StepKind::FalseTwin ? DHDecomposition::NodeKind::Union
                                                 : DHDecomposition::NodeKind::Join;
    int inner = add({kind, old, fresh, -1});
    int up = parent[old];
    parent[old] = parent[fresh] = inner;
    parent[inner] = up;
    if (up >= 0) {
      if (nodes[up].left == old)
        nodes[up].left = inner;
      else
        nodes[up].right = inner;
    }
    return inner;
  }

  int root_of(int idx) const {
    while (parent[idx] >= 0) idx = parent[idx];
    return idx;
  }
};

void fill_leaf_sets(DHDecomposition& t) {
  t.leaf_set.assign(t.nodes.size(), {});
  std::function<void(int)> walk = [&](int idx) {
    const auto& node = t.nodes[idx];
    if (node.kind == DHDecomposition::NodeKind::Leaf) {
      t.leaf_set[idx] = {node.vertex};
      return;
    }
    walk(node.left);
    walk(node.right);
    std::merge(t.leaf_set[node.left].begin(), t.leaf_set[node.left].end(),
               t.leaf_set[node.right].begin(), t.leaf_set[node.right].end(),
               std::back_inserter(t.leaf_set[idx]));
  };
  if (t.root >= 0) walk(t.root);
}

void fill_twinsets(const Graph& g, DHDecomposition& t) {
  t.twinset.assign(t.nodes.size(), {});
  for (std::size_t idx = 0; idx < t.nodes.size(); ++idx) {
    const auto& w = t.leaf_set[idx];
    for (int v : w) {
      bool outside = false;
      for (int u : g.neighbors(v))
        if (!std::binary_search(w.begin(), w.end(), u)) {
          outside = true;
          break;
        }
      if (outside) t.twinset[idx].push_back(v);
    }
  }
}

}  // namespace

DHRecognition build_dh_decomposition(const Graph& g) {
  DHRecognition res;
  if (g.n() == 0) {
    res.decomposition = DHDecomposition{};
    return res;
  }
  TreeBuilder builder(g.n());
  std::vector<int> component_roots;
  for (const auto& comp : g.components()) {
    Pruner pruner(g, comp);
    std::vector<PruneStep> steps;
    int remaining = static_cast<int>(comp.size());
    while (remaining > 1) {
      auto step = pruner.next_step(remaining);
      if (!step) {
        for (int v = 0; v < g.n(); ++v)
          if (pruner.active[v]) res.stuck.push_back(v);
        return res;
      }
      steps.push_back(*step);
      pruner.remove(step->removed);
      --remaining;
    }
    int last = -1;
    for (int v : comp)
      if (pruner.active[v]) last = v;
    int root = builder.leaf(last);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) builder.attach(*it);
    component_roots.push_back(builder.root_of(root));
  }
  int acc = component_roots[0];
  for (std::size_t i = 1; i < component_roots.size(); ++i)
    acc = builder.add({DHDecomposition::NodeKind::Union, acc, component_roots[i], -1});

  DHDecomposition tree;
  tree.nodes = std::move(builder.nodes);
  tree.root = acc;
  fill_leaf_sets(tree);
  fill_twinsets(g, tree);
  auto validation = validate_dh_decomposition(g, tree);
  if (!validation.ok)
    throw std::logic_error("pruning produced an invalid decomposition: " + validation.detail);
  res.decomposition = std::move(tree);
  return res;
}

DHValidation validate_dh_decomposition(const Graph& g, const DHDecomposition& t) {
  auto fail = [](std::string detail) { return DHValidation{false, std::move(detail)}; };
  if (g.n() == 0) return {};
  if (t.root < 0 || t.nodes.empty()) return fail("empty tree for a nonempty graph");
  if (t.leaf_set.size() != t.nodes.size() || t.twinset.size() != t.nodes.size())
    return fail("leaf sets or twinsets not filled in");

  const auto& all = t.leaf_set[t.root];
  if (static_cast<int>(all.size()) != g.n())
    return fail("leaf count differs from vertex count");
  for (int i = 0; i < g.n(); ++i)
    if (all[i] != i) return fail("leaves are not a bijection onto the vertices");

  for (std::size_t idx = 0; idx < t.nodes.size(); ++idx) {
    const auto& w = t.leaf_set[idx];
    const auto& q = t.twinset[idx];
    // Twinset members share one outside neighborhood.
    std::vector<int> reference;
    for (std::size_t i = 0; i < q.size(); ++i) {
      std::vector<int> outside;
      for (int u : g.neighbors(q[i]))
        if (!std::binary_search(w.begin(), w.end(), u)) outside.push_back(u);
      if (i == 0)
        reference = std::move(outside);
      else if (outside != reference)
        return fail("twinset members disagree on the outside neighborhood");
    }
    const auto& node = t.nodes[idx];
    if (node.kind == DHDecomposition::NodeKind::Leaf) continue;
    const auto& ql = t.twinset[node.left];
    const auto& qr = t.twinset[node.right];
    if (node.kind == DHDecomposition::NodeKind::Join) {
      for (int u : ql)
        for (int v : qr)
          if (!g.has_edge(u, v)) return fail("join node misses a twinset cross edge");
    } else {
      const auto& wr = t.leaf_set[node.right];
      for (int u : t.leaf_set[node.left])
        for (int v : g.neighbors(u))
          if (std::binary_search(wr.begin(), wr.end(), v))
            return fail("union node has a cross edge");
    }
    // Parent twinset is empty, one child's twinset, or their union.
    std::vector<int> uni;
    std::merge(ql.begin(), ql.end(), qr.begin(), qr.end(), std::back_inserter(uni));
    if (!(q.empty() || q == ql || q == qr || q == uni))
      return fail("parent twinset is not empty, a child twinset, or their union");
  }

  // The join cross edges must rebuild the graph exactly.
  Graph rebuilt = dh_to_graph(t);
  if (rebuilt.n() != g.n() || rebuilt.edges() != g.edges())
    return fail("decomposition does not reconstruct the edge set");
  return {};
}

Graph dh_to_graph(const DHDecomposition& t) {
  int n = 0;
  for (const auto& node : t.nodes) n += node.kind == DHDecomposition::NodeKind::Leaf;
  std::set<std::pair<int, int>> edges;
  for (std::size_t idx = 0; idx < t.nodes.size(); ++idx) {
    const auto& node = t.nodes[idx];
    if (node.kind != DHDecomposition::NodeKind::Join) continue;
    for (int u : t.twinset[node.left])
      for (int v : t.twinset[node.right]) edges.insert({std::min(u, v), std::max(u, v)});
  }
  return Graph::from_edges(n, {edges.begin(), edges.end()});
}

DHDecomposition parse_dh_decomposition(const std::string& text, const Graph& g) {
  Cotree parsed = parse_cotree(text);
  DHDecomposition tree;
  for (const auto& node : parsed.nodes) {
    DHDecomposition::Node copy;
    copy.kind = node.kind == Cotree::NodeKind::Leaf ? DHDecomposition::NodeKind::Leaf
                : node.kind == Cotree::NodeKind::Union ? DHDecomposition::NodeKind::Union
                                                       : DHDecomposition::NodeKind::Join;
    copy.left = node.left;
    copy.right = node.right;
    copy.vertex = node.vertex;
    tree.nodes.push_back(copy);
  }
  tree.root = parsed.root;
  fill_leaf_sets(tree);
  fill_twinsets(g, tree);
  auto validation = validate_dh_decomposition(g, tree);
  if (!validation.ok)
    throw std::invalid_argument("decomposition rejected: " + validation.detail);
  return tree;
}

MuTable::MuTable(int total_n, int twinset_size) : n_(total_n), q_(twinset_size) {
  cells_ = static_cast<std::size_t>(q_ + 1) * (q_ + 2) / 2;
  data_.assign(static_cast<std::size_t>(2 * n_ + 1) * cells_, kInf);
}

MuTable mu_leaf(int total_n, bool has_neighbors) {
  if (!has_neighbors) {
    // Isolated vertex: its own closed neighborhood is just itself, so it is
    // forced to +1 regardless of t.
    MuTable m(total_n, 0);
    for (int t = -total_n; t <= total_n; ++t) m.set(t, 0, 0, 1);
    return m;
  }
  MuTable m(total_n, 1);
  for (int t = -total_n; t <= total_n; ++t) {
    if (-1 + t > 0) m.set(t, 1, 0, -1);
    if (t > 0) m.set(t, 0, 1, 0);
    if (1 + t > 0) m.set(t, 0, 0, 1);
  }
  return m;
}

MuTable mu_combine(DHDecomposition::NodeKind kind, bool remain1, bool remain2,
                   const MuTable& m1, const MuTable& m2) {
  int n = m1.total_n();
  int q1 = m1.twinset_size(), q2 = m2.twinset_size();
  int qp = (remain1 ? q1 : 0) + (remain2 ? q2 : 0);
  bool join = kind == DHDecomposition::NodeKind::Join;
  MuTable out(n, qp);
  for (int t = -n; t <= n; ++t)
    for (int a1 = 0; a1 <= q1; ++a1)
      for (int b1 = 0; a1 + b1 <= q1; ++b1) {
        int c1 = q1 - a1 - b1;
        int base1 = remain1 ? t : 0;
        for (int a2 = 0; a2 <= q2; ++a2)
          for (int b2 = 0; a2 + b2 <= q2; ++b2) {
            int c2 = q2 - a2 - b2;
            std::int32_t v1 = m1.at(base1 + (join ? c2 - a2 : 0), a1, b1);
            if (v1 == MuTable::kInf) continue;
            std::int32_t v2 = m2.at((remain2 ? t : 0) + (join ? c1 - a1 : 0), a2, b2);
            if (v2 == MuTable::kInf) continue;
            int a = (remain1 ? a1 : 0) + (remain2 ? a2 : 0);
            int b = (remain1 ? b1 : 0) + (remain2 ? b2 : 0);
            out.relax(t, a, b, v1 + v2);
          }
      }
  return out;
}

namespace {

struct DHSolver {
  const Graph& g;
  const DHDecomposition& tree;
  std::vector<MuTable> tables;
  std::vector<char> remain_left, remain_right;
  std::vector<int8_t> values;

  DHSolver(const Graph& graph, const DHDecomposition& t)
      : g(graph),
        tree(t),
        tables(t.nodes.size(), MuTable(0, 0)),
        remain_left(t.nodes.size(), 0),
        remain_right(t.nodes.size(), 0),
        values(graph.n(), 0) {}

  static bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return !a.empty() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  void build(int idx) {
    const auto& node = tree.nodes[idx];
    if (node.kind == DHDecomposition::NodeKind::Leaf) {
      tables[idx] = mu_leaf(g.n(), !tree.twinset[idx].empty());
      return;
    }
    build(node.left);
    build(node.right);
    remain_left[idx] = subset(tree.twinset[node.left], tree.twinset[idx]);
    remain_right[idx] = subset(tree.twinset[node.right], tree.twinset[idx]);
    std::size_t expected = (remain_left[idx] ? tree.twinset[node.left].size() : 0) +
                           (remain_right[idx] ? tree.twinset[node.right].size() : 0);
    if (expected != tree.twinset[idx].size())
      throw std::logic_error("parent twinset does not match the remaining children");
    tables[idx] = mu_combine(node.kind, remain_left[idx], remain_right[idx],
                             tables[node.left], tables[node.right]);
  }

  void unwind(int idx, int t, int a, int b) {
    const auto& node = tree.nodes[idx];
    if (node.kind == DHDecomposition::NodeKind::Leaf) {
      if (tree.twinset[idx].empty())
        values[node.vertex] = 1;
      else
        values[node.vertex] = a == 1 ? -1 : (b == 1 ? 0 : 1);
      return;
    }
    const MuTable& m = tables[idx];
    const MuTable& m1 = tables[node.left];
    const MuTable& m2 = tables[node.right];
    int q1 = m1.twinset_size(), q2 = m2.twinset_size();
    bool join = node.kind == DHDecomposition::NodeKind::Join;
    std::int32_t target = m.at(t, a, b);
    for (int a1 = 0; a1 <= q1; ++a1)
      for (int b1 = 0; a1 + b1 <= q1; ++b1) {
        int c1 = q1 - a1 - b1;
        for (int a2 = 0; a2 <= q2; ++a2)
          for (int b2 = 0; a2 + b2 <= q2; ++b2) {
            int c2 = q2 - a2 - b2;
            int pa = (remain_left[idx] ? a1 : 0) + (remain_right[idx] ? a2 : 0);
            int pb = (remain_left[idx] ? b1 : 0) + (remain_right[idx] ? b2 : 0);
            if (pa != a || pb != b) continue;
            int t1 = (remain_left[idx] ? t : 0) + (join ? c2 - a2 : 0);
            int t2 = (remain_right[idx] ? t : 0) + (join ? c1 - a1 : 0);
            std::int32_t v1 = m1.at(t1, a1, b1);
            std::int32_t v2 = m2.at(t2, a2, b2);
            if (v1 == MuTable::kInf || v2 == MuTable::kInf) continue;
            if (v1 + v2 == target) {
              unwind(node.left, m1.clamp(t1), a1, b1);
              unwind(node.right, m2.clamp(t2), a2, b2);
              return;
            }
          }
      }
    throw std::logic_error("no split reproduces the table cell");
  }
};

}  // namespace

GammaMinusSolve gamma_minus_dh(const Graph& g, const DHDecomposition& tree) {
  if (g.n() == 0) return {0, MinusFunction(std::vector<int8_t>{})};
  auto validation = validate_dh_decomposition(g, tree);
  if (!validation.ok)
    throw std::invalid_argument("decomposition rejected: " + validation.detail);
  DHSolver solver(g, tree);
  solver.build(tree.root);
  if (!tree.twinset[tree.root].empty())
    throw std::logic_error("root twinset must be empty");
  std::int32_t gamma = solver.tables[tree.root].at(0, 0, 0);
  if (gamma == MuTable::kInf) throw std::logic_error("root table is infeasible");
  solver.unwind(tree.root, 0, 0, 0);
  return {gamma, MinusFunction(solver.values)};
}

GammaMinusSolve gamma_minus_dh(const Graph& g) {
  auto rec = build_dh_decomposition(g);
  if (!rec.accepted())
    throw NotInClassError("pruning by pendants and twins got stuck", rec.stuck);
  return gamma_minus_dh(g, *rec.decomposition);
}

}  // namespace minusdom
