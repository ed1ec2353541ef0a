#include <fairco/graph_io.hpp>
#include <fairco/report.hpp>

#include <chrono>
#include <sstream>

namespace fairco {

auto make_solve_report(const Graph & g, int k, const SolverOptions & options, bool timing) -> SolveReport
{
  SolveReport report;
  report.graph6 = encode_graph6(g);
  report.order = g.order();
  report.k = k;
  report.bounds = bounds(g, k, options.order_cap);

  SolveStats stats;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto result = c_kf(g, k, options, &stats);
    if (auto * value = std::get_if<SolveValue>(&result)) {
      report.outcome = "value";
      report.value = value->blocks;
      report.witness = value->witness;
      report.certificate = value->certificate;
    }
    else
      report.outcome = "no-partition";
  }
  catch (const Inconclusive & e) {
    report.outcome = "inconclusive";
    report.proven_upper = e.proven_upper();
    report.known_lower = e.lower();
    stats.nodes = e.nodes();
  }
  report.nodes = stats.nodes;
  report.start_bound = stats.start_bound;
  if (timing)
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

auto bound_text(const Bound & b) -> std::string
{
  return std::to_string(b.value) + " (" + std::string(bound_source_name(b.source)) + ")";
}

} // namespace

auto to_text(const SolveReport & report) -> std::string
{
  std::ostringstream out;
  out << "graph6: " << report.graph6 << "\n";
  out << "order: " << report.order << "\n";
  out << "k: " << report.k << "\n";
  out << "outcome: " << report.outcome << "\n";
  if (report.value)
    out << "c_kf: " << *report.value << "\n";
  if (report.witness) {
    out << "witness:\n";
    for (std::size_t i = 0; i < report.witness->size(); ++i) {
      out << "  " << i << ": " << report.witness->block(i).to_string();
      if (report.certificate) {
        const auto & c = report.certificate->blocks[i];
        if (c.kind == Justification::standalone_fair)
          out << " standalone";
        else
          out << " partner " << c.partner;
      }
      out << "\n";
    }
  }
  if (report.proven_upper)
    out << "proven upper: " << *report.proven_upper << "\n";
  if (report.outcome == "inconclusive")
    out << "known lower: " << (report.known_lower ? std::to_string(*report.known_lower) : "none") << "\n";
  out << "upper bound: " << bound_text(report.bounds.upper) << "\n";
  out << "lower bound: " << (report.bounds.lower ? bound_text(*report.bounds.lower) : "none") << "\n";
  out << "nodes: " << report.nodes << "\n";
  out << "start bound: " << report.start_bound << "\n";
  if (report.elapsed_ms)
    out << "elapsed ms: " << *report.elapsed_ms << "\n";
  return out.str();
}

} // namespace fairco
