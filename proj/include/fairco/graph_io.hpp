#pragma once

#include <fairco/graph.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fairco {

/// Largest order accepted from files (graph6 short form).
inline constexpr int max_ingest_order = 62;

/// Malformed input. `offset` is the byte offset into the parsed text.
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string & message, std::size_t offset);

  auto offset() const -> std::size_t { return _offset; }
  /// Message without the offset prefix.
  auto reason() const -> const std::string & { return _reason; }

private:
  std::size_t _offset;
  std::string _reason;
};

/// Decodes one graph6 string (short form, n <= 62). A trailing newline or
/// carriage return is ignored; the optional ">>graph6<<" header is accepted.
auto parse_graph6(std::string_view line) -> Graph;
auto encode_graph6(const Graph & g) -> std::string;

/// "n" followed by whitespace-separated "u v" pairs, 0-based.
auto parse_edge_list(std::string_view text) -> Graph;
auto encode_edge_list(const Graph & g) -> std::string;

/// Undirected DOT text. Vertex v is emitted as node "v"; labels, when given,
/// supply a label attribute per vertex.
auto to_dot(const Graph & g, std::string_view name, const std::vector<std::string> & labels = {}) -> std::string;

} // namespace fairco
