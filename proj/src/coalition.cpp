#include <fairco/coalition.hpp>

#include <algorithm>
#include <stdexcept>

namespace fairco {

auto is_kfair_coalition(const Graph & g, VertexSet a, VertexSet b, int k) -> bool
{
  if (a.empty() || b.empty())
    throw std::invalid_argument("coalition sets must be nonempty");
  if (a.intersects(b))
    throw std::invalid_argument("coalition sets " + a.to_string() + " and " + b.to_string() + " overlap");
  return ! is_kfair_dominating(g, a, k) && ! is_kfair_dominating(g, b, k) && is_kfair_dominating(g, a | b, k);
}

auto validate_partition(const Graph & g, const Partition & p, int k) -> Validation
{
  check_structure(g, p);
  const auto m = p.size();

  std::vector<bool> fair(m);
  for (std::size_t i = 0; i < m; ++i)
    fair[i] = is_kfair_dominating(g, p.block(i), k);

  PartitionCertificate cert;
  for (std::size_t i = 0; i < m; ++i) {
    const auto block = p.block(i);
    if (fair[i]) {
      if (block.size() != k)
        return Violation{i, ViolationKind::fair_block_wrong_size,
                         "block " + std::to_string(i) + " " + block.to_string() + " is " + std::to_string(k) +
                             "-fair dominating with " + std::to_string(block.size()) + " vertices, not " +
                             std::to_string(k)};
      cert.blocks.push_back({Justification::standalone_fair});
      continue;
    }
    std::optional<std::size_t> partner;
    for (std::size_t j = 0; j < m && ! partner; ++j)
      if (j != i && ! fair[j] && is_kfair_dominating(g, block | p.block(j), k))
        partner = j;
    if (! partner)
      return Violation{i, ViolationKind::no_partner,
                       "block " + std::to_string(i) + " " + block.to_string() + " is not " + std::to_string(k) +
                           "-fair dominating and has no coalition partner"};
    cert.blocks.push_back({Justification::partner, *partner});
  }
  return cert;
}

auto certificate_holds(const Graph & g, const Partition & p, int k, const PartitionCertificate & cert) -> bool
{
  if (cert.blocks.size() != p.size())
    return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto & entry = cert.blocks[i];
    if (entry.kind == Justification::standalone_fair) {
      if (! is_kfair_dominating(g, p.block(i), k) || p.block(i).size() != k)
        return false;
    }
    else if (entry.partner >= p.size() || entry.partner == i ||
             ! is_kfair_coalition(g, p.block(i), p.block(entry.partner), k))
      return false;
  }
  return true;
}

auto partner_count(const Graph & g, const Partition & p, int k, std::size_t i) -> int
{
  if (i >= p.size())
    throw std::out_of_range("block index " + std::to_string(i) + " out of range for " + std::to_string(p.size()) +
                            " blocks");
  int count = 0;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (j != i && is_kfair_coalition(g, p.block(i), p.block(j), k))
      ++count;
  return count;
}

auto coalition_graph(const Graph & g, const Partition & p, int k) -> Graph
{
  auto validation = validate_partition(g, p, k);
  if (auto * violation = std::get_if<Violation>(&validation))
    throw std::invalid_argument("not a " + std::to_string(k) + "-fair coalition partition: " + violation->message);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (is_kfair_coalition(g, p.block(i), p.block(j), k))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(static_cast<int>(p.size()), edges);
}

auto bound_source_name(BoundSource source) -> std::string_view
{
  switch (source) {
  case BoundSource::order:
    return "order";
  case BoundSource::max_degree_gap:
    return "max-degree-gap";
  case BoundSource::regular:
    return "regular";
  case BoundSource::tree:
    return "tree";
  case BoundSource::domatic:
    return "domatic";
  }
  return "unknown";
}

auto upper_bound(const Graph & g, int k) -> Bound
{
  if (k < 1)
    throw std::invalid_argument("k must be at least 1");
  Bound best{g.order(), BoundSource::order};
  auto consider = [&](int value, BoundSource source) {
    if (value < best.value || (value == best.value && best.source == BoundSource::order))
      best = {value, source};
  };
  if (k > g.min_degree())
    consider(g.max_degree() - k + 3, BoundSource::max_degree_gap);
  if (g.is_regular(k))
    consider(4, BoundSource::regular);
  if (k == 2 && g.is_tree())
    consider(g.order() / 2 + 1, BoundSource::tree);
  return best;
}

auto lower_bound(const Graph & g, int k, int order_cap) -> std::optional<Bound>
{
  if (k < 1)
    throw std::invalid_argument("k must be at least 1");
  std::optional<Bound> best;
  if (g.is_regular(k))
    best = Bound{3, BoundSource::regular};
  if (k >= 2 && g.is_connected() && g.order() <= order_cap) {
    const int value = 2 * d_kf(g, k, order_cap).value;
    if (! best || value > best->value)
      best = Bound{value, BoundSource::domatic};
  }
  return best;
}

auto bounds(const Graph & g, int k, int order_cap) -> BoundsReport
{
  return {lower_bound(g, k, order_cap), upper_bound(g, k)};
}

auto search_upper_bound(const Graph & g, int k) -> int
{
  int bound = g.order();
  if (k > g.min_degree())
    bound = std::min(bound, std::max(2, g.max_degree() - k + 3));
  return bound;
}

} // namespace fairco
