#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <fairco/fair_domination.hpp>

#include <algorithm>
#include <bit>
#include <functional>

using namespace fairco;

namespace {

auto brute_gamma(const Graph & g, int k) -> int
{
  int best = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
    if (testing::brute_kfd(g, s, k))
      best = std::min(best, std::popcount(s));
  return best;
}

// Largest partition of V into k-fair dominating sets, by trying every
// assignment of vertices to labelled blocks.
auto brute_domatic(const Graph & g, int k) -> int
{
  const int n = g.order();
  int best = 0;
  std::vector<std::uint64_t> blocks;
  std::function<void(int)> place = [&](int v) {
    if (v == n) {
      for (auto b : blocks)
        if (! testing::brute_kfd(g, b, k))
          return;
      best = std::max(best, static_cast<int>(blocks.size()));
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i] |= std::uint64_t{1} << v;
      place(v + 1);
      blocks[i] &= ~(std::uint64_t{1} << v);
    }
    blocks.push_back(std::uint64_t{1} << v);
    place(v + 1);
    blocks.pop_back();
  };
  place(0);
  return best;
}

} // namespace

TEST_CASE("fairness predicate examples")
{
  CHECK(is_kfair_dominating(build_cycle(4), VertexSet(0b0101), 2));
  CHECK(! is_kfair_dominating(build_path(3), VertexSet(0b011), 2));
  CHECK(is_kfair_dominating(build_path(3), VertexSet::prefix(3), 5));
  CHECK(is_kfair_dominating(build_complete(5), VertexSet(0b00011), 2));
  CHECK_THROWS(is_kfair_dominating(build_path(3), VertexSet(0b1000), 1));
  CHECK_THROWS(is_kfair_dominating(build_path(3), VertexSet(0b1), 0));
}

TEST_CASE("fairness profile")
{
  const FairnessProfile p(build_path(4), VertexSet(0b0001), 2);
  CHECK(! p.defect(0));
  CHECK(*p.defect(1) == -1);
  CHECK(*p.defect(2) == -2);
  CHECK(! p.is_fair());
  CHECK(p.under_saturated() == VertexSet(0b1110));
  const FairnessProfile q(build_complete(4), VertexSet(0b0111), 2);
  CHECK(q.over_saturated() == VertexSet(0b1000));
}

TEST_CASE("minimality")
{
  CHECK(is_minimal_kfd(build_cycle(4), VertexSet(0b0101), 2));
  CHECK_THROWS(is_minimal_kfd(build_cycle(4), VertexSet(0b0001), 2));
  CHECK(is_minimal_kfd(build_path(4), VertexSet(0b1001), 1));
}

TEST_CASE("enumeration agrees with brute force")
{
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_graph(rng, 2 + trial % 9, 0.5);
    for (int k = 1; k <= 3; ++k) {
      std::vector<VertexSet> expected;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
        if (testing::brute_kfd(g, s, k))
          expected.emplace_back(s);
      std::sort(expected.begin(), expected.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size())
          return a.size() < b.size();
        return a.to_vector() < b.to_vector();
      });
      CHECK(enumerate_kfd(g, k) == expected);
    }
  }
}

TEST_CASE("oracle table matches predicate")
{
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = testing::random_graph(rng, 6 + trial, 0.4);
    const KfdOracle oracle(g, 2);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); s += 1 + trial)
      CHECK(oracle(s) == testing::brute_kfd(g, s, 2));
  }
  const auto big = testing::random_graph(rng, 30, 0.2);
  const KfdOracle direct(big, 1);
  for (int i = 0; i < 200; ++i) {
    const auto s = rng() & ((std::uint64_t{1} << 30) - 1);
    CHECK(direct(s) == testing::brute_kfd(big, s, 1));
  }
}

TEST_CASE("fair domination numbers agree with brute force")
{
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_graph(rng, 1 + trial % 9, 0.45);
    for (int k = 1; k <= 3; ++k) {
      const auto r = gamma_kf(g, k);
      CHECK(r.size == brute_gamma(g, k));
      CHECK(is_kfair_dominating(g, r.witness, k));
      CHECK(r.witness.size() == r.size);
    }
  }
  CHECK(gamma_f(build_edgeless(4)).size == 4);
  CHECK(gamma_f(build_path(4)).size == 2);
  CHECK(gamma_kf(build_cycle(6), 2).size == 3);
}

TEST_CASE("fair domatic number agrees with brute force")
{
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_graph(rng, 1 + trial % 8, 0.5);
    for (int k = 1; k <= 2; ++k) {
      const auto d = d_kf(g, k);
      CHECK(d.value == brute_domatic(g, k));
      CHECK(static_cast<int>(d.blocks.size()) == d.value);
      for (auto b : d.blocks)
        CHECK(is_kfair_dominating(g, b, k));
    }
  }
  CHECK(d_kf(build_cycle(6), 2).value == 2);
  CHECK_THROWS_AS(d_kf(build_path(15), 2), std::length_error);
}
