#include <fairco/graph.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace fairco {

namespace {

auto check_order(int order) -> void
{
  if (order < 1 || order > max_set_order)
    throw std::invalid_argument("graph order must be in 1.." + std::to_string(max_set_order) + ", got " +
                                std::to_string(order));
}

} // namespace

Graph::Graph(int order) : _order(order)
{
  check_order(order);
  _rows.assign(static_cast<std::size_t>(order), 0);
}

auto Graph::from_edges(int order, std::span<const Edge> edges) -> Graph
{
  Graph g(order);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside 0.." +
                                  std::to_string(order - 1));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g._rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    g._rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  return g;
}

auto Graph::edge_count() const -> int
{
  int twice = 0;
  for (auto row : _rows)
    twice += std::popcount(row);
  return twice / 2;
}

auto Graph::edges() const -> std::vector<Edge>
{
  std::vector<Edge> out;
  for (Vertex u = 0; u < _order; ++u)
    for (auto v : neighbors(u))
      if (v > u)
        out.emplace_back(u, v);
  return out;
}

auto Graph::min_degree() const -> int
{
  int best = _order;
  for (Vertex v = 0; v < _order; ++v)
    best = std::min(best, degree(v));
  return best;
}

auto Graph::max_degree() const -> int
{
  int best = 0;
  for (Vertex v = 0; v < _order; ++v)
    best = std::max(best, degree(v));
  return best;
}

auto Graph::is_regular(int d) const -> bool
{
  for (Vertex v = 0; v < _order; ++v)
    if (degree(v) != d)
      return false;
  return true;
}

auto Graph::is_connected() const -> bool
{
  if (_order == 0)
    return true;
  VertexSet seen = VertexSet::singleton(0), frontier = seen;
  while (! frontier.empty()) {
    VertexSet next;
    for (auto v : frontier)
      next |= neighbors(v);
    frontier = next - seen;
    seen |= next;
  }
  return seen == vertices();
}

auto Graph::is_tree() const -> bool
{
  return is_connected() && edge_count() == _order - 1;
}

auto Graph::is_bipartite() const -> bool
{
  std::array<int, max_set_order> side{};
  side.fill(-1);
  for (Vertex root = 0; root < _order; ++root) {
    if (side[static_cast<std::size_t>(root)] != -1)
      continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::vector<Vertex> stack{root};
    while (! stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : neighbors(v)) {
        auto & s = side[static_cast<std::size_t>(w)];
        if (s == -1) {
          s = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        }
        else if (s == side[static_cast<std::size_t>(v)])
          return false;
      }
    }
  }
  return true;
}

auto Graph::triangle_count() const -> int
{
  int count = 0;
  for (auto [u, v] : edges())
    for (auto w : neighbors(u) & neighbors(v))
      if (w > v)
        ++count;
  return count;
}

auto Graph::complement() const -> Graph
{
  Graph c(_order);
  auto all = vertices();
  for (Vertex v = 0; v < _order; ++v)
    c._rows[static_cast<std::size_t>(v)] = (all - neighbors(v) - VertexSet::singleton(v)).bits();
  return c;
}

auto build_edgeless(int n) -> Graph
{
  return Graph(n);
}

auto build_path(int n) -> Graph
{
  if (n < 1)
    throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i)
    edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

auto build_cycle(int n) -> Graph
{
  if (n < 3)
    throw std::invalid_argument("cycle needs at least three vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

auto build_complete(int n) -> Graph
{
  if (n < 1)
    throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

auto build_complete_bipartite(int s, int t) -> Graph
{
  if (s < 1 || t < 1)
    throw std::invalid_argument("complete bipartite parts must be nonempty");
  std::vector<Edge> edges;
  for (Vertex x = 0; x < s; ++x)
    for (Vertex y = s; y < s + t; ++y)
      edges.emplace_back(x, y);
  return Graph::from_edges(s + t, edges);
}

auto corona(const Graph & g, int l) -> Graph
{
  if (l < 1)
    throw std::invalid_argument("corona needs l >= 1");
  const int n = g.order();
  const long total = static_cast<long>(n) * (l + 1);
  if (total > max_set_order)
    throw std::invalid_argument("corona order " + std::to_string(total) + " exceeds " + std::to_string(max_set_order));
  auto edges = g.edges();
  for (Vertex v = 0; v < n; ++v) {
    const Vertex base = n + v * l;
    for (int i = 0; i < l; ++i) {
      edges.emplace_back(v, base + i);
      for (int j = i + 1; j < l; ++j)
        edges.emplace_back(base + i, base + j);
    }
  }
  return Graph::from_edges(static_cast<int>(total), edges);
}

auto complete_minus_perfect_matching(int n) -> Graph
{
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("K_n minus a perfect matching needs even n >= 2, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (! (u % 2 == 0 && v == u + 1))
        edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

namespace {

auto from_one_based(std::initializer_list<Edge> edges) -> Graph
{
  std::vector<Edge> zero_based;
  for (auto [u, v] : edges)
    zero_based.emplace_back(u - 1, v - 1);
  return Graph::from_edges(6, zero_based);
}

} // namespace

auto graph_g1() -> Graph
{
  return from_one_based({{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {1, 4}, {2, 5}, {3, 6}});
}

auto graph_g2() -> Graph
{
  return from_one_based({{1, 2}, {1, 3}, {3, 5}, {4, 5}, {2, 6}, {6, 4}, {1, 4}, {2, 5}, {3, 6}});
}

auto is_k1_corona_tree(const Graph & tree) -> bool
{
  if (! tree.is_tree())
    return false;
  const int n = tree.order();
  if (n == 2)
    return true;
  if (n < 2 || n % 2 != 0)
    return false;
  VertexSet leaves;
  for (Vertex v = 0; v < n; ++v)
    if (tree.degree(v) == 1)
      leaves.insert(v);
  if (leaves.size() * 2 != n)
    return false;
  for (auto v : tree.vertices() - leaves)
    if (tree.neighbors(v).intersection_size(leaves) != 1)
      return false;
  return true;
}

} // namespace fairco
