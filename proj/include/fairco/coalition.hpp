#pragma once

#include <fairco/fair_domination.hpp>
#include <fairco/partition.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fairco {

/// Neither a nor b is k-fair dominating but a ∪ b is. a and b must be
/// nonempty and disjoint (std::invalid_argument otherwise).
auto is_kfair_coalition(const Graph & g, VertexSet a, VertexSet b, int k) -> bool;

enum class Justification
{
  standalone_fair, ///< the block is k-fair dominating with exactly k vertices
  partner          ///< the block forms a k-fair coalition with `partner`
};

struct BlockCertificate
{
  Justification kind;
  std::size_t partner = 0;

  auto operator==(const BlockCertificate &) const -> bool = default;
};

struct PartitionCertificate
{
  std::vector<BlockCertificate> blocks;

  auto operator==(const PartitionCertificate &) const -> bool = default;
};

enum class ViolationKind
{
  fair_block_wrong_size, ///< k-fair dominating, but |block| != k
  no_partner             ///< not k-fair dominating and no coalition partner
};

struct Violation
{
  std::size_t block;
  ViolationKind kind;
  std::string message;
};

using Validation = std::variant<PartitionCertificate, Violation>;

/// Certificate with the smallest-index partner for each block, or the first
/// offending block. Throws StructuralError when p does not partition V(g).
auto validate_partition(const Graph & g, const Partition & p, int k) -> Validation;

/// Re-checks every certificate entry with the raw predicates.
auto certificate_holds(const Graph & g, const Partition & p, int k, const PartitionCertificate & cert) -> bool;

/// Number of other blocks forming a k-fair coalition with block i.
auto partner_count(const Graph & g, const Partition & p, int k, std::size_t i) -> int;

/// One vertex per block; i ~ j iff blocks i and j form a k-fair coalition.
/// Throws std::invalid_argument if p is not a valid k-fair coalition partition.
auto coalition_graph(const Graph & g, const Partition & p, int k) -> Graph;

/// Where a bound comes from.
enum class BoundSource
{
  order,          ///< C <= n
  max_degree_gap, ///< C <= Δ - k + 3, for k > δ
  regular,        ///< 3 <= C <= 4, for k-regular graphs
  tree,           ///< C <= floor(n/2) + 1, for trees and k = 2
  domatic         ///< C >= 2 d_kf, for connected graphs and k >= 2
};

auto bound_source_name(BoundSource source) -> std::string_view;

struct Bound
{
  int value;
  BoundSource source;

  auto operator==(const Bound &) const -> bool = default;
};

struct BoundsReport
{
  std::optional<Bound> lower;
  Bound upper;

  auto operator==(const BoundsReport &) const -> bool = default;
};

/// Tightest published upper bound whose hypotheses hold for (g, k).
auto upper_bound(const Graph & g, int k) -> Bound;
/// Tightest published lower bound whose hypotheses hold, if any. The domatic
/// bound is skipped above order_cap.
auto lower_bound(const Graph & g, int k, int order_cap = default_order_cap) -> std::optional<Bound>;
auto bounds(const Graph & g, int k, int order_cap = default_order_cap) -> BoundsReport;

/// Upper bound the exact search starts from. Unlike upper_bound this never
/// drops below 2 when k > δ: if every fair set must contain a vertex x of
/// degree < k, every other block partners x's block X, and a witness z of X's
/// unfairness admits at most 1 + max(0, Δ - k + 1) partners.
auto search_upper_bound(const Graph & g, int k) -> int;

} // namespace fairco
