#include "minusdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace minusdom {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw ParseError(ParseError::Kind::BadHeader, "negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(ParseError::Kind::VertexOutOfRange,
                       "edge endpoint out of range: " + std::to_string(u) + " " +
                           std::to_string(v));
    if (u == v)
      throw ParseError(ParseError::Kind::Loop, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw ParseError(ParseError::Kind::DuplicateEdge,
                       "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.m_ = static_cast<int>(seen.size());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Graph::closed_neighborhood(int v) const {
  std::vector<int> res = adj_[v];
  res.insert(std::lower_bound(res.begin(), res.end(), v), v);
  return res;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> res;
  res.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) res.emplace_back(u, v);
  return res;
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n(); ++u)
    for (int v = u + 1; v < n(); ++v)
      if (!has_edge(u, v)) es.emplace_back(u, v);
  return from_edges(n(), es);
}

Graph Graph::induced(std::vector<int> vertices) const {
  std::sort(vertices.begin(), vertices.end());
  std::vector<int> index(n(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> es;
  for (int u : vertices)
    for (int v : adj_[u])
      if (u < v && index[v] >= 0) es.emplace_back(index[u], index[v]);
  return from_edges(static_cast<int>(vertices.size()), es);
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n(), 0);
  for (int s = 0; s < n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int v : adj_[u])
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::is_connected() const { return n() <= 1 || components().size() == 1; }

std::vector<int> Graph::bfs_order() const {
  std::vector<int> order;
  order.reserve(n());
  std::vector<char> seen(n(), 0);
  for (int s = 0; s < n(); ++s) {
    if (seen[s]) continue;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (int v : adj_[u])
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
  }
  return order;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
  return from_edges(a.n() + b.n(), es);
}

MinusFunction::MinusFunction(std::vector<int8_t> values) : values_(std::move(values)) {
  for (int8_t v : values_)
    if (v < -1 || v > 1)
      throw std::invalid_argument("minus function entry outside {-1,0,1}");
}

int MinusFunction::weight() const {
  int w = 0;
  for (int8_t v : values_) w += v;
  return w;
}

int MinusFunction::size() const {
  int s = 0;
  for (int8_t v : values_) s += (v == 1);
  return s;
}

int MinusFunction::negative_count() const {
  int s = 0;
  for (int8_t v : values_) s += (v == -1);
  return s;
}

ValidationReport validate_minus_function(const Graph& g, const MinusFunction& f) {
  if (f.n() != g.n())
    throw std::invalid_argument("assignment length does not match vertex count");
  ValidationReport report;
  for (int x = 0; x < g.n(); ++x) {
    int sum = f.value(x);
    for (int y : g.neighbors(x)) sum += f.value(y);
    if (sum <= 0) report.violators.push_back(x);
  }
  report.valid = report.violators.empty();
  return report;
}

bool is_dominating_set(const Graph& g, const std::vector<int>& set) {
  std::vector<char> in(g.n(), 0);
  for (int v : set) in[v] = 1;
  for (int x = 0; x < g.n(); ++x) {
    if (in[x]) continue;
    bool covered = false;
    for (int y : g.neighbors(x))
      if (in[y]) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

DegeneracyResult degeneracy(const Graph& g) {
  DegeneracyResult res;
  int n = g.n();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    res.d = std::max(res.d, deg[best]);
    res.ordering.push_back(best);
    removed[best] = 1;
    for (int u : g.neighbors(best))
      if (!removed[u]) --deg[u];
  }
  return res;
}

namespace {

// Strips comments and splits into whitespace tokens, line by line.
std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

int parse_int(const std::string& tok, ParseError::Kind kind, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(kind, std::string("bad ") + what + " token: " + tok);
  }
}

}  // namespace

Graph parse_graph(std::istream& in) {
  auto lines = tokenize_lines(in);
  if (lines.empty() || lines[0].size() != 2)
    throw ParseError(ParseError::Kind::BadHeader, "expected header line \"n m\"");
  int n = parse_int(lines[0][0], ParseError::Kind::BadHeader, "header");
  int m = parse_int(lines[0][1], ParseError::Kind::BadHeader, "header");
  if (n < 0 || m < 0)
    throw ParseError(ParseError::Kind::BadHeader, "negative count in header");
  if (static_cast<int>(lines.size()) - 1 != m)
    throw ParseError(ParseError::Kind::BadHeader,
                     "expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 1; i <= m; ++i) {
    if (lines[i].size() != 2)
      throw ParseError(ParseError::Kind::BadEdgeLine, "expected edge line \"u v\"");
    int u = parse_int(lines[i][0], ParseError::Kind::BadEdgeLine, "edge");
    int v = parse_int(lines[i][1], ParseError::Kind::BadEdgeLine, "edge");
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

MinusFunction parse_assignment(const std::string& text) {
  std::istringstream in(text);
  std::vector<int8_t> values;
  std::string tok;
  while (in >> tok) {
    if (tok == "-1")
      values.push_back(-1);
    else if (tok == "0")
      values.push_back(0);
    else if (tok == "1")
      values.push_back(1);
    else
      throw ParseError(ParseError::Kind::BadToken, "assignment token not in {-1,0,1}: " + tok);
  }
  return MinusFunction(std::move(values));
}

std::string write_assignment(const MinusFunction& f) {
  std::ostringstream out;
  for (int v = 0; v < f.n(); ++v) {
    if (v) out << ' ';
    out << static_cast<int>(f.value(v));
  }
  out << '\n';
  return out.str();
}

}  // namespace minusdom
