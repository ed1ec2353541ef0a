#include <fairco/fair_domination.hpp>
#include <fairco/simd/kfd_kernels.hpp>

#include <stdexcept>
#include <string>

namespace fairco {

namespace {

constexpr std::size_t batch_size = 256;

auto check_k(int k) -> void
{
  if (k < 1)
    throw std::invalid_argument("k must be at least 1, got " + std::to_string(k));
}

auto check_members(const Graph & g, VertexSet s) -> void
{
  if (! s.is_subset_of(g.vertices()))
    throw std::invalid_argument("set " + s.to_string() + " has vertices outside 0.." + std::to_string(g.order() - 1));
}

} // namespace

FairnessProfile::FairnessProfile(const Graph & g, VertexSet s, int k) : _set(s), _k(k)
{
  check_k(k);
  check_members(g, s);
  _defects.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v)
    _defects[static_cast<std::size_t>(v)] = s.contains(v) ? 0 : g.neighbors(v).intersection_size(s) - k;
}

auto FairnessProfile::defect(Vertex v) const -> std::optional<int>
{
  if (_set.contains(v))
    return std::nullopt;
  return _defects.at(static_cast<std::size_t>(v));
}

auto FairnessProfile::is_fair() const -> bool
{
  for (auto d : _defects)
    if (d != 0)
      return false;
  return true;
}

auto FairnessProfile::over_saturated() const -> VertexSet
{
  VertexSet out;
  for (std::size_t v = 0; v < _defects.size(); ++v)
    if (_defects[v] > 0)
      out.insert(static_cast<Vertex>(v));
  return out;
}

auto FairnessProfile::under_saturated() const -> VertexSet
{
  VertexSet out;
  for (std::size_t v = 0; v < _defects.size(); ++v)
    if (_defects[v] < 0)
      out.insert(static_cast<Vertex>(v));
  return out;
}

auto is_kfair_dominating(const Graph & g, VertexSet s, int k) -> bool
{
  check_k(k);
  check_members(g, s);
  for (auto v : g.vertices() - s)
    if (g.neighbors(v).intersection_size(s) != k)
      return false;
  return true;
}

auto is_minimal_kfd(const Graph & g, VertexSet s, int k) -> bool
{
  if (! is_kfair_dominating(g, s, k))
    throw std::invalid_argument("is_minimal_kfd: " + s.to_string() + " is not " + std::to_string(k) +
                                "-fair dominating");
  if (s.size() > 30)
    throw std::length_error("is_minimal_kfd: set too large for subset enumeration");

  std::vector<std::uint64_t> batch;
  std::vector<std::uint8_t> verdicts;
  auto flush = [&]() {
    verdicts.resize(batch.size());
    simd::classify_kfd(g.rows(), static_cast<unsigned>(k), batch, verdicts);
    batch.clear();
    for (auto v : verdicts)
      if (v)
        return true;
    return false;
  };

  const auto full = s.bits();
  for (std::uint64_t sub = (full - 1) & full;; sub = (sub - 1) & full) {
    batch.push_back(sub);
    if (batch.size() == batch_size && flush())
      return false;
    if (sub == 0)
      break;
  }
  return ! flush();
}

KfdEnumerator::KfdEnumerator(const Graph & g, int k, std::optional<int> max_size) :
    _graph(&g), _k(static_cast<unsigned>(k)), _max_size(max_size.value_or(g.order()))
{
  check_k(k);
  if (_max_size > g.order())
    _max_size = g.order();
}

auto KfdEnumerator::advance_combination() -> bool
{
  const int n = _graph->order();
  const int r = static_cast<int>(_combination.size());
  int i = r - 1;
  while (i >= 0 && _combination[static_cast<std::size_t>(i)] == n - r + i)
    --i;
  if (i < 0)
    return false;
  ++_combination[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < r; ++j)
    _combination[static_cast<std::size_t>(j)] = _combination[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

auto KfdEnumerator::refill() -> bool
{
  _batch.clear();
  _cursor = 0;
  while (_batch.size() < batch_size && _size <= _max_size) {
    if (! _combination_valid) {
      if (++_size > _max_size)
        break;
      _combination.resize(static_cast<std::size_t>(_size));
      for (int i = 0; i < _size; ++i)
        _combination[static_cast<std::size_t>(i)] = i;
      _combination_valid = true;
    }
    std::uint64_t mask = 0;
    for (auto v : _combination)
      mask |= std::uint64_t{1} << v;
    _batch.push_back(mask);
    _combination_valid = advance_combination();
  }
  _verdicts.resize(_batch.size());
  simd::classify_kfd(_graph->rows(), _k, _batch, _verdicts);
  return ! _batch.empty();
}

auto KfdEnumerator::next() -> std::optional<VertexSet>
{
  for (;;) {
    while (_cursor < _batch.size()) {
      auto i = _cursor++;
      if (_verdicts[i])
        return VertexSet(_batch[i]);
    }
    if (! refill())
      return std::nullopt;
  }
}

auto enumerate_kfd(const Graph & g, int k, std::optional<int> max_size) -> std::vector<VertexSet>
{
  std::vector<VertexSet> out;
  KfdEnumerator sets(g, k, max_size);
  while (auto s = sets.next())
    out.push_back(*s);
  return out;
}

auto gamma_kf(const Graph & g, int k) -> FairDominationResult
{
  KfdEnumerator sets(g, k);
  auto first = sets.next();
  // V is always k-fair dominating, so the stream is never empty.
  return {first->size(), *first, k};
}

auto gamma_f(const Graph & g) -> FairDominationResult
{
  FairDominationResult best{g.order(), g.vertices(), 1};
  if (g.edge_count() == 0)
    return best;
  for (int k = 1; k <= g.max_degree(); ++k) {
    auto r = gamma_kf(g, k);
    if (r.size < best.size)
      best = r;
  }
  return best;
}

KfdOracle::KfdOracle(const Graph & g, int k) : _graph(&g), _k(static_cast<unsigned>(k))
{
  check_k(k);
  if (g.order() <= table_order_limit) {
    _table.resize(std::size_t{1} << g.order());
    simd::classify_kfd_range(g.rows(), _k, 0, _table);
  }
}

auto KfdOracle::direct(std::uint64_t subset) const -> bool
{
  return simd::scalar::is_kfd(_graph->rows(), _k, subset);
}

auto d_kf(const Graph & g, int k, int order_cap) -> DomaticResult
{
  check_k(k);
  const int n = g.order();
  if (n > order_cap || n > KfdOracle::table_order_limit)
    throw std::length_error("d_kf: order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));

  KfdOracle kfd(g, k);
  // best[R]: most kFD blocks R splits into; -1 impossible, -2 not yet computed
  std::vector<std::int8_t> best(std::size_t{1} << n, -2);
  best[0] = 0;

  auto solve = [&](auto && self, std::uint64_t rest) -> int {
    auto & slot = best[rest];
    if (slot != -2)
      return slot;
    const std::uint64_t low = rest & (~rest + 1);
    const std::uint64_t others = rest & ~low;
    int result = -1;
    for (std::uint64_t sub = others;; sub = (sub - 1) & others) {
      const std::uint64_t block = sub | low;
      if (kfd(block)) {
        auto tail = self(self, rest & ~block);
        if (tail >= 0 && tail + 1 > result)
          result = tail + 1;
      }
      if (sub == 0)
        break;
    }
    slot = static_cast<std::int8_t>(result);
    return result;
  };

  const auto all = g.vertices().bits();
  DomaticResult out{solve(solve, all), {}};
  for (std::uint64_t rest = all; rest != 0;) {
    const std::uint64_t low = rest & (~rest + 1);
    const std::uint64_t others = rest & ~low;
    const int want = best[rest] - 1;
    for (std::uint64_t sub = others;; sub = (sub - 1) & others) {
      const std::uint64_t block = sub | low;
      if (kfd(block) && solve(solve, rest & ~block) == want) {
        out.blocks.emplace_back(block);
        rest &= ~block;
        break;
      }
      if (sub == 0)
        break;
    }
  }
  return out;
}

} // namespace fairco
