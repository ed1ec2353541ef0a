#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <fairco/verification.hpp>

#include <sstream>

using namespace fairco;

namespace {

auto find_check(const GraphRecord & r, std::string_view name) -> const CheckOutcome &
{
  for (const auto & c : r.checks)
    if (c.check == name)
      return c;
  throw std::logic_error("missing check");
}

auto census_of(const std::string & lines, int k, CheckSet checks = all_checks) -> CensusReport
{
  std::istringstream in(lines);
  CensusOptions options;
  options.k = k;
  options.checks = checks;
  return run_census(in, options);
}

} // namespace

TEST_CASE("closed form lookup")
{
  auto row = lookup_closed_form(Family::complete, {6, 0, 0}, 3);
  REQUIRE(row);
  CHECK(std::get<ExactValue>(row->expected).value == 5);
  row = lookup_closed_form(Family::path, {1, 0, 0}, 2);
  REQUIRE(row);
  const auto & d = std::get<KnownDiscrepancy>(row->expected);
  CHECK(d.published == 1);
  CHECK(! d.strict);
  row = lookup_closed_form(Family::complete_bipartite, {0, 2, 5}, 3);
  REQUIRE(row);
  CHECK(std::get<ExactValue>(row->expected).value == 2);
  row = lookup_closed_form(Family::complete_bipartite, {0, 4, 5}, 2);
  REQUIRE(row);
  CHECK(std::get<UpperBoundOnly>(row->expected).bound == 6);
  row = lookup_closed_form(Family::complete_bipartite, {0, 5, 6}, 2);
  REQUIRE(row);
  CHECK(std::get<UpperBoundOnly>(row->expected).bound == 5 + 6 - 8 + 4);
  CHECK(lookup_closed_form(Family::path_corona_k1, {5, 0, 0}, 2)->audit);
  CHECK(! lookup_closed_form(Family::complete, {3, 0, 0}, 3));
  CHECK(lookup_closed_form(Family::cycle_corona_k1, {3, 0, 0}, 2)->label() == "C_3 o K_1");
  CHECK(parse_family("complete-bipartite") == Family::complete_bipartite);
  CHECK(family_name(Family::cubic_order6_g2) == "g2");
}

TEST_CASE("table respects the order cap")
{
  for (const auto & row : closed_form_table(8))
    CHECK(row.order() <= 8);
  const auto full = closed_form_table(14);
  bool has_p6_corona = false;
  for (const auto & row : full)
    has_p6_corona |= row.family == Family::path_corona_k1 && row.params.n == 6;
  CHECK(has_p6_corona);
}

TEST_CASE("hypothesis gating: max-degree bound only when k exceeds the minimum degree")
{
  // C_5 with k = 2 is 2-regular, so k = δ and the check must not run
  const auto r = census_of("Dhc\n", 2, static_cast<CheckSet>(Check::max_degree_upper));
  REQUIRE(r.records.size() == 1);
  CHECK(find_check(r.records[0], "max-degree-upper").status == CheckStatus::skipped);
  // P_5 has δ = 1 < 2
  const auto p = census_of(encode_graph6(build_path(5)) + "\n", 2, static_cast<CheckSet>(Check::max_degree_upper));
  CHECK(find_check(p.records[0], "max-degree-upper").status == CheckStatus::pass);
}

TEST_CASE("hypothesis gating for trees and regular graphs")
{
  const auto cycle = census_of(encode_graph6(build_cycle(6)) + "\n", 2);
  const auto & rec = cycle.records.at(0);
  CHECK(find_check(rec, "tree-upper").status == CheckStatus::skipped);
  CHECK(find_check(rec, "tree-fair-domination").status == CheckStatus::skipped);
  CHECK(find_check(rec, "regular-range").status == CheckStatus::pass);
  CHECK(find_check(rec, "cubic-fair-set-size").status == CheckStatus::skipped);
  CHECK(find_check(rec, "domatic-lower").status == CheckStatus::pass);
  CHECK(find_check(rec, "oracle-equivalence").status == CheckStatus::pass);
  const auto tree = census_of(encode_graph6(build_path(6)) + "\n", 2);
  CHECK(find_check(tree.records.at(0), "tree-upper").status == CheckStatus::pass);
  CHECK(find_check(tree.records.at(0), "regular-range").status == CheckStatus::skipped);
}

TEST_CASE("published degree bound fails on sparse graphs and replays")
{
  // edgeless on 3 vertices, k = 2: value 2 but Δ - k + 3 = 1
  const auto r = census_of("B?\n", 2);
  const auto & c = find_check(r.records.at(0), "max-degree-upper");
  CHECK(c.status == CheckStatus::fail);
  REQUIRE(c.witness);
  CHECK(c.witness->partition);
  CHECK(replay_failure(c));
  CHECK(! r.passed());

  auto forged = c;
  forged.witness->partition = Partition({VertexSet{0, 1, 2}});
  CHECK(! replay_failure(forged));
  forged.witness.reset();
  CHECK(! replay_failure(forged));
}

TEST_CASE("every failure in a census replays")
{
  std::ifstream in(testing::data_path("all_le7.g6"));
  std::ostringstream small;
  std::string line;
  while (std::getline(in, line))
    if (parse_graph6(line).order() <= 5)
      small << line << "\n";
  for (int k : {2, 3}) {
    std::istringstream corpus(small.str());
    CensusOptions options;
    options.k = k;
    const auto report = run_census(corpus, options);
    for (const auto & record : report.records)
      for (const auto & c : record.checks)
        if (c.status == CheckStatus::fail) {
          REQUIRE(c.witness);
          CHECK(replay_failure(c));
        }
  }
}

TEST_CASE("parse errors are positioned and do not stop the run")
{
  const auto r = census_of("Bw\nD?\n~~\nBW\n", 2, static_cast<CheckSet>(Check::oracle_equivalence));
  CHECK(r.records.size() == 2);
  REQUIRE(r.parse_errors.size() == 2);
  CHECK(r.parse_errors[0].line == 2);
  CHECK(r.parse_errors[0].offset == 2);
  CHECK(r.parse_errors[1].line == 3);
  CHECK(! r.passed());
}

TEST_CASE("records are sorted by graph6")
{
  const auto r = census_of("Dhc\nBw\nCF\n", 2, static_cast<CheckSet>(Check::oracle_equivalence));
  REQUIRE(r.records.size() == 3);
  CHECK(r.records[0].graph6 == "Bw");
  CHECK(r.records[1].graph6 == "CF");
  CHECK(r.records[2].graph6 == "Dhc");
}

TEST_CASE("filters")
{
  std::istringstream in("Bw\nCF\nC~\nDhc\n");
  CensusOptions options;
  options.checks = static_cast<CheckSet>(Check::regular_range);
  options.regular_degree = 2;
  const auto r = run_census(in, options);
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].graph6 == "Bw");
  CHECK(r.records[1].graph6 == "Dhc");
}

TEST_CASE("theorem suite on small orders")
{
  const auto r = run_theorem_suite(6);
  CHECK(! r.records.empty());
  for (const auto & record : r.records)
    for (const auto & c : record.checks) {
      if (record.label == "P_1")
        CHECK(c.status == CheckStatus::finding);
      else if (record.label == "P_2 o K_1")
        CHECK(c.status == CheckStatus::fail);
      else
        CHECK(c.status == CheckStatus::pass);
    }
}

TEST_CASE("extremal scan")
{
  std::ostringstream corpus;
  corpus << encode_graph6(build_cycle(4)) << "\n"
         << encode_graph6(build_complete_bipartite(1, 3)) << "\n"
         << encode_graph6(build_path(3)) << "\n"
         << encode_graph6(complete_minus_perfect_matching(6)) << "\n"
         << encode_graph6(build_cycle(5)) << "\n";
  std::istringstream in(corpus.str());
  const auto r = extremal_scan(in, 10);
  CHECK(r.passed());
  for (const auto & record : r.records) {
    if (record.graph6 == encode_graph6(build_complete_bipartite(1, 3)))
      CHECK(record.value == 2);
    if (record.graph6 == encode_graph6(build_cycle(4)))
      CHECK(record.value == 4);
  }
}

TEST_CASE("summary table")
{
  const auto text = summary_table(census_of("B?\n", 2));
  CHECK(text.find("max-degree-upper") != std::string::npos);
  CHECK(text.find("FAILED") != std::string::npos);
  CHECK(parse_check("partner-bound") == Check::partner_bound);
  CHECK(! parse_check("nope"));
}
