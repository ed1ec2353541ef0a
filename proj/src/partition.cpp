#include <fairco/graph_io.hpp>
#include <fairco/partition.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>

namespace fairco {

Partition::Partition(std::vector<VertexSet> blocks) : _blocks(std::move(blocks))
{
  std::stable_sort(_blocks.begin(), _blocks.end(), [](VertexSet a, VertexSet b) {
    if (a.empty() || b.empty())
      return a.empty() && ! b.empty();
    return a.min() < b.min();
  });
}

auto Partition::from_labels(std::span<const int> labels) -> Partition
{
  std::vector<VertexSet> blocks;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto label = static_cast<std::size_t>(labels[v]);
    if (label >= blocks.size())
      blocks.resize(label + 1);
    blocks[label].insert(static_cast<Vertex>(v));
  }
  return Partition(std::move(blocks));
}

auto Partition::union_of_blocks() const -> VertexSet
{
  VertexSet all;
  for (auto b : _blocks)
    all |= b;
  return all;
}

auto Partition::labels(int order) const -> std::vector<int>
{
  std::vector<int> out(static_cast<std::size_t>(order), -1);
  for (std::size_t i = 0; i < _blocks.size(); ++i)
    for (auto v : _blocks[i])
      if (v < order)
        out[static_cast<std::size_t>(v)] = static_cast<int>(i);
  return out;
}

auto Partition::to_string() const -> std::string
{
  std::string out;
  for (auto b : _blocks) {
    if (! out.empty())
      out += ' ';
    out += b.to_string();
  }
  return out;
}

auto check_structure(const Graph & g, const Partition & p) -> void
{
  VertexSet seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto b = p.block(i);
    if (b.empty())
      throw StructuralError("block " + std::to_string(i) + " is empty");
    if (! b.is_subset_of(g.vertices()))
      throw StructuralError("block " + std::to_string(i) + " " + b.to_string() + " has vertices outside 0.." +
                            std::to_string(g.order() - 1));
    if (b.intersects(seen))
      throw StructuralError("block " + std::to_string(i) + " overlaps an earlier block at " +
                            (b & seen).to_string());
    seen |= b;
  }
  if (seen != g.vertices())
    throw StructuralError("vertices " + (g.vertices() - seen).to_string() + " are not covered");
}

auto canonical_less(const Partition & a, const Partition & b) -> bool
{
  const auto count = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < count; ++i) {
    auto x = a.block(i), y = b.block(i);
    if (x == y)
      continue;
    return x.contains((x ^ y).min());
  }
  return a.size() < b.size();
}

auto parse_partition(std::string_view text) -> Partition
{
  std::vector<VertexSet> blocks;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos)
      line_end = text.size();
    auto line = text.substr(line_start, line_end - line_start);
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i < line.size() && line[i] != '#') {
      VertexSet block;
      while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
          continue;
        }
        auto start = i;
        while (i < line.size() && ! std::isspace(static_cast<unsigned char>(line[i])))
          ++i;
        int v = 0;
        auto token = line.substr(start, i - start);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size() || v < 0 || v >= max_ingest_order)
          throw ParseError("invalid vertex id '" + std::string(token) + "'", line_start + start);
        if (block.contains(v))
          throw ParseError("vertex " + std::to_string(v) + " repeated within a block", line_start + start);
        block.insert(v);
      }
      blocks.push_back(block);
    }
    if (line_end == text.size())
      break;
    line_start = line_end + 1;
  }
  return Partition(std::move(blocks));
}

} // namespace fairco
