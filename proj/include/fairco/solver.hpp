#pragma once

#include <fairco/coalition.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>

namespace fairco {

inline constexpr std::uint64_t default_node_budget = 100'000'000;
/// Hard cap for the exhaustive oracle (Bell(10) = 115975 partitions).
inline constexpr int naive_order_cap = 10;

struct SolverOptions
{
  /// Candidate blocks examined before giving up.
  std::uint64_t budget = default_node_budget;
  /// Workers sharing the top-level branches; the answer does not depend on it.
  int workers = 1;
  int order_cap = default_order_cap;
};

struct SolveValue
{
  int blocks;
  /// Minimum under canonical_less among all maximum-size partitions.
  Partition witness;
  PartitionCertificate certificate;
};

struct NoPartition
{
  auto operator==(const NoPartition &) const -> bool = default;
};

using SolveResult = std::variant<SolveValue, NoPartition>;

/// Block count of a Value outcome, empty for NoPartition.
auto solved_value(const SolveResult & result) -> std::optional<int>;

/// The node budget ran out before the search finished.
class Inconclusive : public std::runtime_error
{
public:
  Inconclusive(std::optional<int> lower, int proven_upper, std::uint64_t nodes);

  /// Largest size for which a valid partition is known, if any.
  auto lower() const -> std::optional<int> { return _lower; }
  /// No valid partition has more blocks than this.
  auto proven_upper() const -> int { return _proven_upper; }
  auto nodes() const -> std::uint64_t { return _nodes; }

private:
  std::optional<int> _lower;
  int _proven_upper;
  std::uint64_t _nodes;
};

class OrderCapExceeded : public std::length_error
{
public:
  using std::length_error::length_error;
};

struct SolveStats
{
  std::uint64_t nodes = 0;
  int start_bound = 0;
};

/**
 * Exact k-fair coalition number. Tries block counts m from
 * search_upper_bound downwards; for each m, a depth-first search builds
 * blocks in canonical order (each new block takes the smallest unassigned
 * vertex) and prunes on:
 *   - a complete block that is k-fair dominating but not of size k,
 *   - an unpaired block that no union with still-unassigned vertices could
 *     turn into a k-fair dominating set (this covers an outside vertex
 *     already seeing more than k of the block's vertices).
 * The first hit at the largest feasible m is returned.
 *
 * Throws OrderCapExceeded above options.order_cap and Inconclusive when the
 * budget runs out.
 */
auto c_kf(const Graph & g, int k, const SolverOptions & options = {}, SolveStats * stats = nullptr) -> SolveResult;

/// Exhaustive oracle: every set partition, validated with the raw
/// predicates. Throws OrderCapExceeded above naive_order_cap.
auto naive_c_kf(const Graph & g, int k) -> SolveResult;

} // namespace fairco
