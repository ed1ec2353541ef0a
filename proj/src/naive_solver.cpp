#include <fairco/solver.hpp>

namespace fairco {

namespace {

// Validity from first principles: every block is either k-fair dominating
// of size exactly k, or not k-fair dominating and paired with another such
// block whose union is k-fair dominating.
auto valid_partition(const Graph & g, const std::vector<VertexSet> & blocks, int k) -> bool
{
  std::vector<bool> fair(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    fair[i] = is_kfair_dominating(g, blocks[i], k);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (fair[i]) {
      if (blocks[i].size() != k)
        return false;
      continue;
    }
    bool partnered = false;
    for (std::size_t j = 0; j < blocks.size() && ! partnered; ++j)
      partnered = j != i && ! fair[j] && is_kfair_dominating(g, blocks[i] | blocks[j], k);
    if (! partnered)
      return false;
  }
  return true;
}

} // namespace

auto naive_c_kf(const Graph & g, int k) -> SolveResult
{
  if (k < 1)
    throw std::invalid_argument("k must be at least 1");
  const int n = g.order();
  if (n > naive_order_cap)
    throw OrderCapExceeded("naive oracle is limited to order " + std::to_string(naive_order_cap));

  // restricted growth strings: labels[0] = 0, labels[i] <= 1 + max(labels[0..i-1])
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  std::optional<Partition> best;

  for (;;) {
    const int blocks = prefix_max.back() + 1;
    if (! best || blocks >= static_cast<int>(best->size())) {
      std::vector<VertexSet> sets(static_cast<std::size_t>(blocks));
      for (int v = 0; v < n; ++v)
        sets[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])].insert(v);
      if (valid_partition(g, sets, k)) {
        Partition candidate(std::move(sets));
        if (! best || candidate.size() > best->size() || canonical_less(candidate, *best))
          best = std::move(candidate);
      }
    }

    int i = n - 1;
    while (i > 0 && labels[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)])
      --i;
    if (i == 0)
      break;
    ++labels[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], labels[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      labels[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
    }
  }

  if (! best)
    return NoPartition{};
  auto validation = validate_partition(g, *best, k);
  const int size = static_cast<int>(best->size());
  return SolveValue{size, std::move(*best), std::get<PartitionCertificate>(validation)};
}

} // namespace fairco
