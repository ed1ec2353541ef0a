#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <fairco/graph.hpp>

using namespace fairco;

TEST_CASE("vertex set basics")
{
  auto s = VertexSet::prefix(4);
  CHECK(s.size() == 4);
  CHECK(s.to_string() == "{0, 1, 2, 3}");
  s.erase(1);
  CHECK(s.to_vector() == std::vector<Vertex>{0, 2, 3});
  CHECK(s.min() == 0);
  CHECK(s.max() == 3);
  CHECK(VertexSet::prefix(64).size() == 64);
  CHECK((VertexSet::singleton(2) - s).empty());
  CHECK_THROWS_AS(s.insert(64), std::out_of_range);
  CHECK_THROWS_AS(s.insert(-1), std::out_of_range);
  CHECK(VertexSet{}.to_string() == "{}");
}

TEST_CASE("edge validation")
{
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
  const std::vector<Edge> outside{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, outside), std::invalid_argument);
  const std::vector<Edge> twice{{0, 1}, {1, 0}};
  CHECK(Graph::from_edges(2, twice).edge_count() == 1);
}

TEST_CASE("family builders")
{
  CHECK(build_path(5).edge_count() == 4);
  CHECK(build_path(1).edge_count() == 0);
  CHECK(build_cycle(6).is_regular(2));
  CHECK_THROWS(build_cycle(2));
  CHECK(build_complete(6).edge_count() == 15);
  const auto kst = build_complete_bipartite(2, 5);
  CHECK(kst.order() == 7);
  CHECK(kst.edge_count() == 10);
  CHECK(kst.is_bipartite());
  CHECK(kst.degree(0) == 5);
  CHECK(kst.degree(6) == 2);
  CHECK(build_edgeless(4).edge_count() == 0);
}

TEST_CASE("corona")
{
  const auto c = corona(build_cycle(4), 1);
  CHECK(c.order() == 8);
  CHECK(c.edge_count() == 8);
  for (int v = 0; v < 4; ++v) {
    CHECK(c.adjacent(v, 4 + v));
    CHECK(c.degree(4 + v) == 1);
  }
  const auto c2 = corona(build_path(2), 2);
  CHECK(c2.order() == 6);
  // each attached K_2 is a triangle with its base vertex
  CHECK(c2.triangle_count() == 2);
  CHECK_THROWS(corona(build_path(2), 0));
  // P_2 o K_1 is P_4
  const auto p = corona(build_path(2), 1);
  CHECK(p.is_tree());
  CHECK(p.max_degree() == 2);
}

TEST_CASE("complete minus matching")
{
  const auto g = complete_minus_perfect_matching(6);
  CHECK(g.is_regular(4));
  CHECK(! g.adjacent(0, 1));
  CHECK(g.adjacent(0, 2));
  CHECK(complete_minus_perfect_matching(4).is_regular(2));
  CHECK_THROWS(complete_minus_perfect_matching(5));
}

TEST_CASE("order 6 cubic graphs")
{
  const auto g1 = graph_g1(), g2 = graph_g2();
  CHECK(g1.is_regular(3));
  CHECK(g2.is_regular(3));
  CHECK(g1.triangle_count() == 2);
  CHECK(! g1.is_bipartite());
  CHECK(g2.is_bipartite());
  CHECK(g2.triangle_count() == 0);
}

TEST_CASE("structural predicates")
{
  CHECK(build_path(6).is_tree());
  CHECK(! build_cycle(5).is_tree());
  CHECK(Graph(1).is_tree());
  CHECK(! build_edgeless(2).is_connected());
  CHECK(build_complete(4).triangle_count() == 4);
  CHECK(build_complete(5).complement() == build_edgeless(5));
  CHECK(build_cycle(5).complement().is_regular(2));
  CHECK(build_path(4).min_degree() == 1);
  CHECK(build_path(4).max_degree() == 2);
}

TEST_CASE("corona trees")
{
  CHECK(is_k1_corona_tree(build_path(2)));
  CHECK(is_k1_corona_tree(build_path(4)));
  CHECK(is_k1_corona_tree(corona(build_path(3), 1)));
  CHECK(! is_k1_corona_tree(build_path(3)));
  CHECK(! is_k1_corona_tree(build_path(5)));
  CHECK(! is_k1_corona_tree(build_complete_bipartite(1, 3)));
  CHECK(! is_k1_corona_tree(Graph(1)));
  CHECK(! is_k1_corona_tree(build_cycle(4)));
}

TEST_CASE("complement is an involution on random graphs")
{
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto g = testing::random_graph(rng, 3 + i % 20, 0.4);
    CHECK(g.complement().complement() == g);
    CHECK(g.edge_count() + g.complement().edge_count() == g.order() * (g.order() - 1) / 2);
  }
}
