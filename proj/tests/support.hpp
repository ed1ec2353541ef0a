#pragma once

#include <fairco/graph.hpp>
#include <fairco/graph_io.hpp>

#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace testing {

// Reference predicate written directly from the definition, one adjacency
// query at a time.
inline auto brute_kfd(const fairco::Graph & g, std::uint64_t s, int k) -> bool
{
  for (int v = 0; v < g.order(); ++v) {
    if ((s >> v) & 1U)
      continue;
    int seen = 0;
    for (int u = 0; u < g.order(); ++u)
      if (((s >> u) & 1U) && g.adjacent(u, v))
        ++seen;
    if (seen != k)
      return false;
  }
  return true;
}

inline auto random_graph(std::mt19937_64 & rng, int n, double p) -> fairco::Graph
{
  std::bernoulli_distribution edge(p);
  std::vector<fairco::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng))
        edges.emplace_back(u, v);
  return fairco::Graph::from_edges(n, edges);
}

inline auto data_path(const std::string & name) -> std::string
{
  return std::string(FAIRCO_DATA_DIR) + "/" + name;
}

inline auto load_corpus(const std::string & name) -> std::vector<fairco::Graph>
{
  std::ifstream in(data_path(name));
  std::vector<fairco::Graph> graphs;
  std::string line;
  while (std::getline(in, line))
    if (! line.empty())
      graphs.push_back(fairco::parse_graph6(line));
  return graphs;
}

} // namespace testing
