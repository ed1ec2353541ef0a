#include <fairco/solver.hpp>

#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>

namespace fairco {

auto solved_value(const SolveResult & result) -> std::optional<int>
{
  if (auto * value = std::get_if<SolveValue>(&result))
    return value->blocks;
  return std::nullopt;
}

Inconclusive::Inconclusive(std::optional<int> lower, int proven_upper, std::uint64_t nodes) :
    std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes; value is at most " +
                       std::to_string(proven_upper) +
                       (lower ? ", at least " + std::to_string(*lower) : std::string(", no lower bound found"))),
    _lower(lower),
    _proven_upper(proven_upper),
    _nodes(nodes)
{
}

namespace {

struct SharedState
{
  std::uint64_t budget;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
};

// Depth-first search for a valid partition with exactly `target` blocks.
class BlockSearch
{
public:
  BlockSearch(const Graph & g, const KfdOracle & kfd, int k, int target, SharedState & shared) :
      _g(g), _kfd(kfd), _k(k), _target(target), _full(g.vertices().bits()), _shared(shared)
  {
    _blocks.reserve(static_cast<std::size_t>(target));
  }

  // Tries `first` as the block containing vertex 0.
  auto run(std::uint64_t first) -> bool { return try_block(first, _full); }

  auto witness() const -> std::vector<VertexSet>
  {
    std::vector<VertexSet> out;
    for (const auto & b : _blocks)
      out.emplace_back(b.mask);
    return out;
  }

private:
  struct Block
  {
    std::uint64_t mask;
    bool fair;
    bool paired;
  };

  auto extend(std::uint64_t rest) -> bool
  {
    const auto placed = static_cast<int>(_blocks.size());
    if (placed == _target)
      return rest == 0;
    const int blocks_after = _target - placed - 1;
    if (blocks_after == 0)
      return try_block(rest, rest);

    const std::uint64_t low = rest & (~rest + 1);
    const std::uint64_t others = rest & ~low;
    const int max_size = std::popcount(rest) - blocks_after;

    // others[i] is the i-th smallest free vertex; it is the most significant
    // bit of the choice counter, so blocks are tried in canonical order
    std::uint64_t vertex_bits[max_set_order];
    int t = 0;
    for (auto o = others; o != 0; o &= o - 1)
      vertex_bits[t++] = o & (~o + 1);

    for (std::uint64_t choice = (std::uint64_t{1} << t) - 1;; --choice) {
      if (std::popcount(choice) + 1 <= max_size) {
        std::uint64_t block = low;
        for (auto c = choice; c != 0; c &= c - 1)
          block |= vertex_bits[t - 1 - std::countr_zero(c)];
        if (try_block(block, rest))
          return true;
        if (_shared.exhausted.load(std::memory_order_relaxed))
          return false;
      }
      if (choice == 0)
        break;
    }
    return false;
  }

  auto try_block(std::uint64_t block, std::uint64_t rest) -> bool
  {
    if (_shared.nodes.fetch_add(1, std::memory_order_relaxed) >= _shared.budget) {
      _shared.exhausted.store(true, std::memory_order_relaxed);
      return false;
    }

    const bool fair = _kfd(block);
    if (fair && std::popcount(block) != _k)
      return false;

    const std::uint64_t free_after = rest & ~block;
    bool paired = fair;
    std::uint64_t newly_paired = 0;
    if (! fair)
      for (std::size_t i = 0; i < _blocks.size(); ++i) {
        auto & other = _blocks[i];
        if (! other.fair && _kfd(other.mask | block)) {
          paired = true;
          if (! other.paired)
            newly_paired |= std::uint64_t{1} << i;
        }
      }

    auto partner_possible = [&](std::uint64_t mask) {
      if (free_after == 0)
        return false;
      const std::uint64_t fixed = _full & ~free_after & ~mask;
      for (auto w = fixed; w != 0; w &= w - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(w));
        const int inside = std::popcount(_g.rows()[v] & mask);
        if (inside > _k || inside + std::popcount(_g.rows()[v] & free_after) < _k)
          return false;
      }
      return true;
    };

    if (! paired && ! partner_possible(block))
      return false;
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
      const auto & other = _blocks[i];
      if (! other.paired && ! ((newly_paired >> i) & 1U) && ! partner_possible(other.mask))
        return false;
    }

    for (std::size_t i = 0; i < _blocks.size(); ++i)
      if ((newly_paired >> i) & 1U)
        _blocks[i].paired = true;
    _blocks.push_back({block, fair, paired});

    if (extend(free_after))
      return true;

    _blocks.pop_back();
    for (std::size_t i = 0; i < _blocks.size(); ++i)
      if ((newly_paired >> i) & 1U)
        _blocks[i].paired = false;
    return false;
  }

  const Graph & _g;
  const KfdOracle & _kfd;
  int _k;
  int _target;
  std::uint64_t _full;
  SharedState & _shared;
  std::vector<Block> _blocks;
};

// First blocks (those containing vertex 0) in canonical order.
auto first_blocks(int n, int target) -> std::vector<std::uint64_t>
{
  std::vector<std::uint64_t> out;
  const int t = n - 1;
  const int max_size = n - (target - 1);
  if (target == 1) {
    out.push_back(VertexSet::prefix(n).bits());
    return out;
  }
  for (std::uint64_t choice = (std::uint64_t{1} << t) - 1;; --choice) {
    if (std::popcount(choice) + 1 <= max_size) {
      std::uint64_t block = 1;
      for (auto c = choice; c != 0; c &= c - 1)
        block |= std::uint64_t{1} << (t - std::countr_zero(c));
      out.push_back(block);
    }
    if (choice == 0)
      break;
  }
  return out;
}

// Lowest-index branch holding a valid partition with `target` blocks.
auto search_blocks(const Graph & g, const KfdOracle & kfd, int k, int target, int workers, SharedState & shared)
    -> std::optional<std::vector<VertexSet>>
{
  const auto branches = first_blocks(g.order(), target);
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0}, best{none};
  std::mutex found_mutex;
  std::vector<VertexSet> found;

  auto work = [&]() {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= branches.size() || i > best.load() || shared.exhausted.load())
        return;
      BlockSearch search(g, kfd, k, target, shared);
      if (search.run(branches[i])) {
        std::lock_guard lock(found_mutex);
        if (i < best.load()) {
          best.store(i);
          found = search.witness();
        }
        return;
      }
    }
  };

  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(branches.size())));
  if (threads == 1)
    work();
  else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back(work);
  }

  // A branch below `best` may have been cut by the budget; only trust a hit
  // when the search ran to completion.
  if (shared.exhausted.load())
    return std::nullopt;
  if (best.load() == none)
    return std::nullopt;
  return found;
}

} // namespace

auto c_kf(const Graph & g, int k, const SolverOptions & options, SolveStats * stats) -> SolveResult
{
  if (k < 1)
    throw std::invalid_argument("k must be at least 1");
  if (g.order() > options.order_cap)
    throw OrderCapExceeded("order " + std::to_string(g.order()) + " exceeds solver cap " +
                           std::to_string(options.order_cap));

  const KfdOracle kfd(g, k);
  SharedState shared{options.budget};
  const int start = search_upper_bound(g, k);
  if (stats)
    stats->start_bound = start;

  const std::optional<int> trivial_lower =
      g.order() == k ? std::optional<int>(1) : std::nullopt; // {V} stands alone iff |V| = k

  for (int target = start; target >= 1; --target) {
    auto blocks = search_blocks(g, kfd, k, target, options.workers, shared);
    if (shared.exhausted.load()) {
      if (stats)
        stats->nodes = shared.nodes.load();
      throw Inconclusive(trivial_lower, target, shared.nodes.load());
    }
    if (blocks) {
      Partition witness(std::move(*blocks));
      auto validation = validate_partition(g, witness, k);
      auto * cert = std::get_if<PartitionCertificate>(&validation);
      if (! cert)
        throw std::logic_error("solver produced an invalid partition " + witness.to_string() + ": " +
                               std::get<Violation>(validation).message);
      if (stats)
        stats->nodes = shared.nodes.load();
      return SolveValue{target, std::move(witness), std::move(*cert)};
    }
  }
  if (stats)
    stats->nodes = shared.nodes.load();
  return NoPartition{};
}

} // namespace fairco
