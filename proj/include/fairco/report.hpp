#pragma once

#include <fairco/solver.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace fairco {

/// Everything the CLI prints for one solve.
struct SolveReport
{
  std::string graph6;
  int order = 0;
  int k = 0;
  std::string outcome; ///< "value", "no-partition" or "inconclusive"
  std::optional<int> value;
  std::optional<Partition> witness;
  std::optional<PartitionCertificate> certificate;
  BoundsReport bounds;
  /// Set for inconclusive outcomes.
  std::optional<int> proven_upper;
  std::optional<int> known_lower;
  std::uint64_t nodes = 0;
  int start_bound = 0;
  /// Wall time; left empty unless requested so reports stay reproducible.
  std::optional<double> elapsed_ms;

  auto operator==(const SolveReport &) const -> bool = default;
};

/// Runs c_kf and collects the report. Inconclusive becomes an outcome,
/// other errors propagate.
auto make_solve_report(const Graph & g, int k, const SolverOptions & options = {}, bool timing = false)
    -> SolveReport;

auto to_text(const SolveReport & report) -> std::string;

} // namespace fairco
