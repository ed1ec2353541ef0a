#pragma once

#include <fairco/solver.hpp>

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fairco {

// ---------------------------------------------------------------------------
// Closed-form values for named families

enum class Family
{
  complete,
  complete_bipartite,
  path,
  cycle,
  path_corona_k1,
  cycle_corona_k1,
  cubic_order6_g1,
  cubic_order6_g2
};

auto family_name(Family family) -> std::string_view;
auto parse_family(std::string_view name) -> std::optional<Family>;

struct FamilyParams
{
  int n = 0; ///< order parameter (path/cycle length, complete order, corona base)
  int s = 0; ///< complete bipartite, smaller part
  int t = 0; ///< complete bipartite, larger part

  auto operator==(const FamilyParams &) const -> bool = default;
};

struct ExactValue
{
  int value;
};
struct UpperBoundOnly
{
  int bound;
};
/// The published value disagrees with the strict definition. An empty
/// strict value means no valid partition exists.
struct KnownDiscrepancy
{
  int published;
  std::optional<int> strict;
};
using Expected = std::variant<ExactValue, UpperBoundOnly, KnownDiscrepancy>;

struct ClosedForm
{
  Family family;
  FamilyParams params;
  int k;
  Expected expected;
  /// Published value under suspicion: a mismatch confirmed by the exhaustive
  /// oracle is reported as a finding instead of a failure.
  bool audit = false;

  auto order() const -> int;
  auto build() const -> Graph;
  /// "K_6", "K_{2,5}", "P_4", "C_5", "P_3 o K_1", "G_1"
  auto label() const -> std::string;
};

/// Published value for one instance, if a closed form covers it.
auto lookup_closed_form(Family family, FamilyParams params, int k) -> std::optional<ClosedForm>;

/// Every covered instance of order <= max_order.
auto closed_form_table(int max_order = default_order_cap) -> std::vector<ClosedForm>;

// ---------------------------------------------------------------------------
// Reports

enum class CheckStatus
{
  pass,
  fail,
  skipped, ///< hypothesis not met, over a cap, or solver inconclusive
  finding  ///< reported, not failed: known discrepancies and empirical checks
};

auto check_status_name(CheckStatus status) -> std::string_view;

/// Everything needed to replay a result outside the census.
struct Witness
{
  std::string graph6;
  int k = 0;
  std::optional<Partition> partition;
  std::optional<VertexSet> set;
  std::optional<std::size_t> block;
  /// The published value or bound the observation contradicts.
  std::optional<int> claimed;

  auto operator==(const Witness &) const -> bool = default;
};

struct CheckOutcome
{
  std::string check;
  CheckStatus status;
  std::string detail;
  std::optional<Witness> witness;
};

struct GraphRecord
{
  std::string graph6;
  std::string label; ///< family label for closed-form rows, otherwise empty
  int order = 0;
  int k = 0;
  std::optional<int> value; ///< c_kf; empty for NoPartition or when not solved
  std::string outcome;      ///< "value", "no-partition", "inconclusive", "not-solved"
  std::map<std::string, int> invariants;
  std::vector<CheckOutcome> checks;
};

struct CorpusDescriptor
{
  std::string source;
  int min_order = 0;
  int max_order = 0;
  std::string filter;
};

struct CorpusParseError
{
  std::size_t line; ///< 1-based
  std::size_t offset;
  std::string message;
};

struct CheckTally
{
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  int finding = 0;
};

struct CensusReport
{
  CorpusDescriptor corpus;
  std::vector<GraphRecord> records;
  std::vector<CorpusParseError> parse_errors;

  auto tally() const -> std::map<std::string, CheckTally>;
  auto failures() const -> int;
  /// No failed check and no unparsable line.
  auto passed() const -> bool;
  /// Sorts records by graph6 string, then k.
  auto sort_records() -> void;
};

// ---------------------------------------------------------------------------
// Suites

struct SuiteOptions
{
  SolverOptions solver;
};

/// Solves every closed-form instance of order <= max_order. Exact rows must
/// match, bound rows must hold, discrepancy rows are reported.
auto run_theorem_suite(int max_order, const SuiteOptions & options = {}) -> CensusReport;

enum class Check : unsigned
{
  oracle_equivalence = 1U << 0,  ///< exact search agrees with the exhaustive oracle
  cubic_fair_set_size = 1U << 1, ///< cubic: every 2-fair dominating set has >= 2n/5 vertices
  regular_range = 1U << 2,       ///< k-regular: 3 <= C <= 4
  domatic_lower = 1U << 3,       ///< connected, k >= 2: C >= 2 d_kf
  max_degree_upper = 1U << 4,    ///< k > δ: C <= Δ - k + 3
  partner_bound = 1U << 5,       ///< witness blocks have <= max(0, Δ - k + 2) partners
  tree_upper = 1U << 6,          ///< trees, k = 2: C <= floor(n/2) + 1
  half_domatic = 1U << 7,        ///< even k: C >= d_(k/2)f, empirical
  tree_fair_domination = 1U << 8 ///< trees, n >= 2: γ_f <= floor(n/2), equality iff K_1-corona
};

using CheckSet = unsigned;
inline constexpr CheckSet all_checks = (1U << 9) - 1;

auto check_name(Check check) -> std::string_view;
auto parse_check(std::string_view name) -> std::optional<Check>;

struct CensusOptions
{
  int k = 2;
  CheckSet checks = all_checks;
  SolverOptions solver;
  std::string source = "<stream>";
  std::optional<int> min_order;
  std::optional<int> max_order;
  /// Only graphs with this regular degree, when set.
  std::optional<int> regular_degree;
};

/// One graph6 string per line. Unparsable lines are recorded with their
/// position and skipped.
auto run_census(std::istream & corpus, const CensusOptions & options) -> CensusReport;

/// Merges per-k census runs over the same corpus into one report.
auto merge_reports(std::vector<CensusReport> reports) -> CensusReport;

/// (n-2)-regular graphs: C_2f = n exactly for K_n minus a perfect matching.
/// Trees: C_2f = n only for P_2 and C_2f = n - 1 only for P_3 and P_4.
auto extremal_scan(std::istream & corpus, int max_order, const SuiteOptions & options = {}) -> CensusReport;

/// Re-derives a failed check from its witness alone; true iff the failure
/// reproduces.
auto replay_failure(const CheckOutcome & outcome) -> bool;

/// Plain-text summary table.
auto summary_table(const CensusReport & report) -> std::string;

} // namespace fairco
