#pragma once

#include <fairco/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace fairco {

/// Default order cap for the exponential partition searches.
inline constexpr int default_order_cap = 14;

/**
 * Per-vertex fairness defects of a candidate set S: for v outside S the
 * defect is |N(v) ∩ S| - k, and S is k-fair dominating iff every defect is 0.
 */
class FairnessProfile
{
public:
  FairnessProfile(const Graph & g, VertexSet s, int k);

  auto set() const -> VertexSet { return _set; }
  auto k() const -> int { return _k; }
  /// Empty for members of S.
  auto defect(Vertex v) const -> std::optional<int>;
  auto is_fair() const -> bool;
  /// Outside vertices with too many neighbours in S. Any superset of S that
  /// still excludes one of these can never be k-fair dominating.
  auto over_saturated() const -> VertexSet;
  auto under_saturated() const -> VertexSet;

private:
  VertexSet _set;
  int _k;
  std::vector<int> _defects;
};

/// True iff every vertex outside s has exactly k neighbours in s (vacuous for s = V).
/// Throws std::invalid_argument for k < 1 or members outside V(g).
auto is_kfair_dominating(const Graph & g, VertexSet s, int k) -> bool;

/// No proper subset of s is k-fair dominating. s itself must be k-fair
/// dominating (std::invalid_argument otherwise); |s| is limited to 30.
auto is_minimal_kfd(const Graph & g, VertexSet s, int k) -> bool;

struct FairDominationResult
{
  int size;
  /// First optimal set in size-then-lexicographic order.
  VertexSet witness;
  /// The k realising the optimum (gamma_f only; equal to the input k otherwise).
  int k;
};

auto gamma_kf(const Graph & g, int k) -> FairDominationResult;

/// Minimum over k >= 1 of nonempty k-fair dominating sets; n for edgeless graphs.
auto gamma_f(const Graph & g) -> FairDominationResult;

/**
 * Streams the k-fair dominating sets of a graph in increasing size, then
 * lexicographic order of the sorted member lists. Candidates are tested in
 * batches through the dispatched kernel.
 */
class KfdEnumerator
{
public:
  KfdEnumerator(const Graph & g, int k, std::optional<int> max_size = std::nullopt);

  auto next() -> std::optional<VertexSet>;

private:
  auto refill() -> bool;
  auto advance_combination() -> bool;

  const Graph * _graph;
  unsigned _k;
  int _max_size;
  int _size = 0;
  std::vector<int> _combination;
  bool _combination_valid = true;
  std::vector<std::uint64_t> _batch;
  std::vector<std::uint8_t> _verdicts;
  std::size_t _cursor = 0;
};

auto enumerate_kfd(const Graph & g, int k, std::optional<int> max_size = std::nullopt) -> std::vector<VertexSet>;

/**
 * Immutable k-fair domination lookup for every subset of V. Orders up to
 * table_order_limit are precomputed once through the range kernel; larger
 * orders fall back to direct evaluation. Safe to share between threads.
 */
class KfdOracle
{
public:
  static constexpr int table_order_limit = 22;

  KfdOracle(const Graph & g, int k);

  auto operator()(std::uint64_t subset) const -> bool {
    return _table.empty() ? direct(subset) : _table[subset] != 0;
  }
  auto operator()(VertexSet s) const -> bool { return (*this)(s.bits()); }

  auto graph() const -> const Graph & { return *_graph; }
  auto k() const -> int { return static_cast<int>(_k); }

private:
  auto direct(std::uint64_t subset) const -> bool;

  const Graph * _graph;
  unsigned _k;
  std::vector<std::uint8_t> _table;
};

struct DomaticResult
{
  int value;
  /// Blocks of one maximum k-fair domatic partition, sorted by minimum vertex.
  std::vector<VertexSet> blocks;
};

/// Maximum number of blocks in a partition of V into k-fair dominating sets.
/// Throws std::length_error above order_cap.
auto d_kf(const Graph & g, int k, int order_cap = default_order_cap) -> DomaticResult;

} // namespace fairco
