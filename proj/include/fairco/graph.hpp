#pragma once

#include <fairco/vertex_set.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fairco {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable simple graph on vertices 0..n-1 with bit-packed adjacency rows.
 * Construction validates loop-freeness and symmetrises the edge set; after
 * that the object is never modified and can be shared between threads.
 */
class Graph
{
public:
  Graph() = default;

  /// Edgeless graph of the given order (1..64).
  explicit Graph(int order);

  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  static auto from_edges(int order, std::span<const Edge> edges) -> Graph;

  auto order() const -> int { return _order; }
  auto vertices() const -> VertexSet { return VertexSet::prefix(_order); }
  auto neighbors(Vertex v) const -> VertexSet { return VertexSet(_rows[static_cast<std::size_t>(v)]); }
  auto degree(Vertex v) const -> int { return neighbors(v).size(); }
  auto adjacent(Vertex u, Vertex v) const -> bool { return neighbors(u).contains(v); }

  /// Raw adjacency words, one per vertex; this is what the kernels consume.
  auto rows() const -> std::span<const std::uint64_t> { return _rows; }

  auto edge_count() const -> int;
  /// Edges (u, v) with u < v, ordered by u then v.
  auto edges() const -> std::vector<Edge>;

  auto min_degree() const -> int;
  auto max_degree() const -> int;
  auto is_regular(int degree) const -> bool;
  auto is_connected() const -> bool;
  auto is_tree() const -> bool;
  auto is_bipartite() const -> bool;
  auto triangle_count() const -> int;
  auto complement() const -> Graph;

  auto operator==(const Graph &) const -> bool = default;

private:
  int _order = 0;
  std::vector<std::uint64_t> _rows;
};

auto build_edgeless(int n) -> Graph;
auto build_path(int n) -> Graph;
auto build_cycle(int n) -> Graph;
auto build_complete(int n) -> Graph;
/// Parts X = {0..s-1}, Y = {s..s+t-1}.
auto build_complete_bipartite(int s, int t) -> Graph;

/// g with a private copy of K_l hung off every vertex. Original vertices
/// keep labels 0..n-1; the copy attached to v occupies n + v*l .. n + v*l + l - 1.
auto corona(const Graph & g, int l) -> Graph;

/// K_n minus the perfect matching {(0,1), (2,3), ...}; n must be even.
auto complete_minus_perfect_matching(int n) -> Graph;

/// Triangular prism: the 3-regular graph with two triangles joined by a matching.
auto graph_g1() -> Graph;
/// The bipartite 3-regular graph of order 6, in the labelling used by the
/// closed-form example partitions.
auto graph_g2() -> Graph;

/// True iff the tree is T' o K_1 for some tree T'. P_2 qualifies (T' = K_1);
/// otherwise every non-leaf must support exactly one leaf and leaves must make
/// up exactly half the vertices.
auto is_k1_corona_tree(const Graph & tree) -> bool;

} // namespace fairco
