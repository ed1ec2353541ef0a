#pragma once

#include <fairco/graph.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairco {

/// Overlapping, empty, missing or out-of-range blocks.
class StructuralError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Ordered list of vertex blocks, kept in canonical form: blocks sorted by
 * their minimum vertex (empty blocks, which are never valid, sort first).
 * Whether the blocks really partition a graph's vertex set is checked by
 * check_structure, not by the constructor.
 */
class Partition
{
public:
  Partition() = default;
  explicit Partition(std::vector<VertexSet> blocks);

  /// Restricted growth string: labels[v] is v's block index.
  static auto from_labels(std::span<const int> labels) -> Partition;

  auto size() const -> std::size_t { return _blocks.size(); }
  auto blocks() const -> const std::vector<VertexSet> & { return _blocks; }
  auto block(std::size_t i) const -> VertexSet { return _blocks.at(i); }
  auto union_of_blocks() const -> VertexSet;

  /// Block index per vertex, for vertices 0..order-1.
  auto labels(int order) const -> std::vector<int>;

  /// "{0, 3, 4} {1} {2}"
  auto to_string() const -> std::string;

  auto operator==(const Partition &) const -> bool = default;

private:
  std::vector<VertexSet> _blocks;
};

/// Throws StructuralError unless p partitions V(g) into nonempty blocks.
auto check_structure(const Graph & g, const Partition & p) -> void;

/**
 * Tie-break order for witnesses of equal size. Blocks are compared in
 * canonical order; at the first differing pair, the block that contains the
 * smallest vertex of their symmetric difference wins. The exact search
 * visits partitions in this order, so its first hit is the minimum.
 */
auto canonical_less(const Partition & a, const Partition & b) -> bool;

/// One block per line, whitespace-separated vertex ids; blank lines and lines
/// starting with '#' are ignored. Only syntax is checked here.
auto parse_partition(std::string_view text) -> Partition;

} // namespace fairco
