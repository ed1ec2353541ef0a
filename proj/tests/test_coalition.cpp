#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <fairco/coalition.hpp>

using namespace fairco;

namespace {

auto blocks(std::initializer_list<std::initializer_list<int>> lists) -> Partition
{
  std::vector<VertexSet> out;
  for (auto l : lists)
    out.emplace_back(l);
  return Partition(out);
}

} // namespace

TEST_CASE("coalition examples")
{
  CHECK(is_kfair_coalition(build_path(2), VertexSet{0}, VertexSet{1}, 2));
  CHECK(! is_kfair_coalition(build_cycle(4), VertexSet{0, 2}, VertexSet{1}, 2));
  CHECK(! is_kfair_coalition(build_path(3), VertexSet{0}, VertexSet{1}, 2));
  CHECK_THROWS_AS(is_kfair_coalition(build_path(3), VertexSet{0, 1}, VertexSet{1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(is_kfair_coalition(build_path(3), VertexSet{}, VertexSet{1}, 2), std::invalid_argument);
}

TEST_CASE("partition structure")
{
  const auto p = blocks({{2}, {0, 3, 4}, {1}});
  CHECK(p.to_string() == "{0, 3, 4} {1} {2}");
  CHECK(p.labels(5) == std::vector<int>{0, 1, 2, 0, 0});
  const std::vector<int> labels{1, 1, 0, 2};
  CHECK(Partition::from_labels(labels).to_string() == "{0, 1} {2} {3}");
  const auto g = build_path(5);
  CHECK_NOTHROW(check_structure(g, p));
  CHECK_THROWS_AS(check_structure(g, blocks({{0, 1}, {1, 2, 3, 4}})), StructuralError);
  CHECK_THROWS_AS(check_structure(g, blocks({{0, 1}, {2, 3}})), StructuralError);
  CHECK_THROWS_AS(check_structure(g, blocks({{0, 1, 2, 3, 4}, {}})), StructuralError);
  CHECK_THROWS_AS(check_structure(g, blocks({{0, 1, 2, 3, 4, 5}})), StructuralError);
}

TEST_CASE("partition text")
{
  const auto p = parse_partition("# comment\n0 3 4\n\n1\n2\n");
  CHECK(p == blocks({{0, 3, 4}, {1}, {2}}));
  CHECK_THROWS_AS(parse_partition("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_partition("0 0\n"), ParseError);
}

TEST_CASE("validation examples")
{
  const auto p5 = validate_partition(build_path(5), blocks({{0, 3, 4}, {1}, {2}}), 2);
  REQUIRE(std::holds_alternative<PartitionCertificate>(p5));
  CHECK(std::get<PartitionCertificate>(p5).blocks.size() == 3);

  const auto p3 = validate_partition(build_path(3), blocks({{0, 2}, {1}}), 2);
  REQUIRE(std::holds_alternative<Violation>(p3));
  CHECK(std::get<Violation>(p3).block == 1);
  CHECK(std::get<Violation>(p3).kind == ViolationKind::no_partner);

  const auto k4 = validate_partition(build_complete(4), blocks({{0, 1}, {2}, {3}}), 2);
  REQUIRE(std::holds_alternative<PartitionCertificate>(k4));
  const auto & cert = std::get<PartitionCertificate>(k4);
  CHECK(cert.blocks[0].kind == Justification::standalone_fair);
  CHECK(cert.blocks[1].kind == Justification::partner);
  CHECK(cert.blocks[1].partner == 2);

  const auto c4 = validate_partition(build_cycle(4), blocks({{0, 2}, {1, 3}}), 2);
  CHECK(std::holds_alternative<PartitionCertificate>(c4));

  const auto whole = validate_partition(build_path(3), blocks({{0, 1, 2}}), 2);
  REQUIRE(std::holds_alternative<Violation>(whole));
  CHECK(std::get<Violation>(whole).kind == ViolationKind::fair_block_wrong_size);

  CHECK_THROWS_AS(validate_partition(build_path(3), blocks({{0, 1}, {1, 2}}), 2), StructuralError);
}

TEST_CASE("certificates re-check")
{
  const auto g = build_path(5);
  const auto p = blocks({{0, 3, 4}, {1}, {2}});
  const auto cert = std::get<PartitionCertificate>(validate_partition(g, p, 2));
  CHECK(certificate_holds(g, p, 2, cert));
  auto forged = cert;
  forged.blocks[1] = {Justification::standalone_fair, 0};
  CHECK(! certificate_holds(g, p, 2, forged));
  forged.blocks[1] = {Justification::partner, 2};
  CHECK(! certificate_holds(g, p, 2, forged));
}

TEST_CASE("partner counts and coalition graph")
{
  const auto g = build_path(5);
  const auto p = blocks({{0, 3, 4}, {1}, {2}});
  CHECK(partner_count(g, p, 2, 0) == 2);
  CHECK(partner_count(g, p, 2, 1) == 1);
  CHECK_THROWS_AS(partner_count(g, p, 2, 3), std::out_of_range);
  const auto h = coalition_graph(g, p, 2);
  CHECK(h.order() == 3);
  CHECK(h.edge_count() == 2);
  CHECK(h.adjacent(0, 1));
  CHECK(h.adjacent(0, 2));
  CHECK_THROWS_AS(coalition_graph(build_path(3), blocks({{0, 2}, {1}}), 2), std::invalid_argument);

  const auto k4 = blocks({{0, 1}, {2}, {3}});
  CHECK(partner_count(build_complete(4), k4, 2, 0) == 0);
}

TEST_CASE("partner bound over all partitions of small graphs")
{
  // every labelled partition of every graph on <= 5 vertices (all edge
  // subsets), plus random graphs on 6
  auto sweep = [](const Graph & g) {
    const int n = g.order();
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<int> top(static_cast<std::size_t>(n), 0);
    for (;;) {
      const auto p = Partition::from_labels(labels);
      for (int k = 1; k <= 3; ++k) {
        const int bound = std::max(0, g.max_degree() - k + 2);
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (is_kfair_dominating(g, p.block(i), k)) {
            CHECK(partner_count(g, p, k, i) == 0);
            continue;
          }
          const int count = partner_count(g, p, k, i);
          // the published bound fails only when Δ <= k - 2; one partner is
          // always possible there
          if (g.max_degree() > k - 2)
            CHECK(count <= bound);
          CHECK(count <= std::max(1, g.max_degree() - k + 2));
        }
      }
      int i = n - 1;
      while (i > 0 && labels[static_cast<std::size_t>(i)] > top[static_cast<std::size_t>(i - 1)])
        --i;
      if (i == 0)
        break;
      ++labels[static_cast<std::size_t>(i)];
      top[static_cast<std::size_t>(i)] = std::max(top[static_cast<std::size_t>(i - 1)], labels[static_cast<std::size_t>(i)]);
      for (int j = i + 1; j < n; ++j) {
        labels[static_cast<std::size_t>(j)] = 0;
        top[static_cast<std::size_t>(j)] = top[static_cast<std::size_t>(i)];
      }
    }
  };
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        all.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < all.size(); ++e)
        if ((mask >> e) & 1U)
          edges.push_back(all[e]);
      sweep(Graph::from_edges(n, edges));
    }
  }
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i)
    sweep(testing::random_graph(rng, 6, 0.5));
}

TEST_CASE("bounds with provenance")
{
  const auto p5 = bounds(build_path(5), 2);
  CHECK(p5.upper == Bound{3, BoundSource::max_degree_gap});
  const auto c6 = bounds(build_cycle(6), 2);
  REQUIRE(c6.lower);
  CHECK(*c6.lower == Bound{4, BoundSource::domatic});
  const auto cubic = bounds(build_complete(4), 3);
  CHECK(cubic.upper == Bound{4, BoundSource::regular});
  REQUIRE(cubic.lower);
  CHECK(*cubic.lower == Bound{3, BoundSource::regular});
  const auto p9 = bounds(build_path(9), 2);
  CHECK(p9.upper == Bound{3, BoundSource::max_degree_gap});
  // tree bound wins for a star with k = 2: Δ - k + 3 = 4, floor(5/2) + 1 = 3
  CHECK(upper_bound(build_complete_bipartite(1, 4), 2) == Bound{3, BoundSource::tree});
  CHECK(upper_bound(build_complete(5), 2) == Bound{5, BoundSource::order});
  CHECK(! lower_bound(build_edgeless(3), 2));
  CHECK(bound_source_name(BoundSource::max_degree_gap) == "max-degree-gap");
}

TEST_CASE("search bound stays sound where the published one does not")
{
  // edgeless graph, k = 2: {0} and {1, 2} are not 2FD, their union is V
  const auto g = build_edgeless(3);
  CHECK(upper_bound(g, 2).value == 1);
  CHECK(search_upper_bound(g, 2) >= 2);
}
