#include <fairco/graph_io.hpp>

#include <cctype>
#include <charconv>
#include <vector>

namespace fairco {

ParseError::ParseError(const std::string & message, std::size_t offset) :
    std::runtime_error("byte " + std::to_string(offset) + ": " + message),
    _offset(offset),
    _reason(message)
{
}

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";

} // namespace

auto parse_graph6(std::string_view line) -> Graph
{
  std::size_t base = 0;
  if (line.starts_with(graph6_header))
    base = graph6_header.size();
  auto end = line.size();
  while (end > base && (line[end - 1] == '\n' || line[end - 1] == '\r'))
    --end;
  auto body = line.substr(base, end - base);

  if (body.empty())
    throw ParseError("empty graph6 string", base);
  const auto first = static_cast<unsigned char>(body[0]);
  if (first == 126)
    throw ParseError("long-form graph6 (order > " + std::to_string(max_ingest_order) + ") is not supported", base);
  if (first < 63 || first > 125)
    throw ParseError("invalid graph6 order byte", base);
  const int n = first - 63;
  if (n == 0)
    throw ParseError("graph of order 0 is not supported", base);

  const std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (body.size() != 1 + byte_count) {
    auto at = base + std::min(body.size(), 1 + byte_count);
    throw ParseError("graph6 of order " + std::to_string(n) + " needs " + std::to_string(byte_count) +
                         " data bytes, found " + std::to_string(body.size() - 1),
                     at);
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t i = 1; i < body.size(); ++i) {
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126)
      throw ParseError("invalid graph6 data byte", base + i);
    const unsigned value = c - 63U;
    for (int b = 5; b >= 0; --b, ++bit) {
      if (bit >= bit_count)
        break;
      if (((value >> b) & 1U) == 0)
        continue;
      // bit index enumerates pairs (row, column) column by column, row < column
      std::size_t column = 1, start = 0;
      while (start + column <= bit) {
        start += column;
        ++column;
      }
      edges.emplace_back(static_cast<Vertex>(bit - start), static_cast<Vertex>(column));
    }
  }
  return Graph::from_edges(n, edges);
}

auto encode_graph6(const Graph & g) -> std::string
{
  const int n = g.order();
  if (n > max_ingest_order)
    throw std::invalid_argument("graph6 short form supports order <= " + std::to_string(max_ingest_order));
  std::string out(1, static_cast<char>(63 + n));
  unsigned value = 0;
  int filled = 0;
  for (Vertex column = 1; column < n; ++column)
    for (Vertex row = 0; row < column; ++row) {
      value = (value << 1) | (g.adjacent(row, column) ? 1U : 0U);
      if (++filled == 6) {
        out += static_cast<char>(63 + value);
        value = 0;
        filled = 0;
      }
    }
  if (filled > 0)
    out += static_cast<char>(63 + (value << (6 - filled)));
  return out;
}

namespace {

struct Token
{
  std::string_view text;
  std::size_t offset;
};

auto tokenize(std::string_view text) -> std::vector<Token>
{
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    auto start = i;
    while (i < text.size() && ! std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    tokens.push_back({text.substr(start, i - start), start});
  }
  return tokens;
}

auto to_int(const Token & token) -> int
{
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
  if (ec != std::errc{} || ptr != token.text.data() + token.text.size() || value < 0)
    throw ParseError("expected a non-negative integer, found '" + std::string(token.text) + "'", token.offset);
  return value;
}

} // namespace

auto parse_edge_list(std::string_view text) -> Graph
{
  auto tokens = tokenize(text);
  if (tokens.empty())
    throw ParseError("missing vertex count", 0);
  const int n = to_int(tokens[0]);
  if (n < 1 || n > max_ingest_order)
    throw ParseError("vertex count must be in 1.." + std::to_string(max_ingest_order), tokens[0].offset);
  if ((tokens.size() - 1) % 2 != 0)
    throw ParseError("dangling endpoint without a partner", tokens.back().offset);

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < tokens.size(); i += 2) {
    const int u = to_int(tokens[i]);
    const int v = to_int(tokens[i + 1]);
    for (auto [value, token] : {std::pair{u, &tokens[i]}, std::pair{v, &tokens[i + 1]}})
      if (value >= n)
        throw ParseError("vertex " + std::to_string(value) + " out of range for order " + std::to_string(n),
                         token->offset);
    if (u == v)
      throw ParseError("self-loop at vertex " + std::to_string(u), tokens[i].offset);
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

auto encode_edge_list(const Graph & g) -> std::string
{
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

auto to_dot(const Graph & g, std::string_view name, const std::vector<std::string> & labels) -> std::string
{
  std::string out = "graph " + std::string(name) + " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (static_cast<std::size_t>(v) < labels.size())
      out += " [label=\"" + labels[static_cast<std::size_t>(v)] + "\"]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

} // namespace fairco
