#include <fairco/json_io.hpp>

#include <stdexcept>

namespace fairco {

namespace {

template <typename T, typename F>
auto optional_to_json(const std::optional<T> & value, F convert) -> json
{
  return value ? convert(*value) : json(nullptr);
}

auto bound_source_from_name(std::string_view name) -> BoundSource
{
  for (auto s : {BoundSource::order, BoundSource::max_degree_gap, BoundSource::regular, BoundSource::tree,
                 BoundSource::domatic})
    if (bound_source_name(s) == name)
      return s;
  throw std::invalid_argument("unknown bound source: " + std::string(name));
}

auto status_from_name(std::string_view name) -> CheckStatus
{
  for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::skipped, CheckStatus::finding})
    if (check_status_name(s) == name)
      return s;
  throw std::invalid_argument("unknown check status: " + std::string(name));
}

auto optional_int(const json & j, const char * key) -> std::optional<int>
{
  if (! j.contains(key) || j.at(key).is_null())
    return std::nullopt;
  return j.at(key).get<int>();
}

auto witness_from_json(const json & j) -> Witness
{
  Witness w;
  w.graph6 = j.at("graph6").get<std::string>();
  w.k = j.at("k").get<int>();
  if (! j.at("partition").is_null())
    w.partition = partition_from_json(j.at("partition"));
  if (! j.at("set").is_null())
    w.set = vertex_set_from_json(j.at("set"));
  if (! j.at("block").is_null())
    w.block = j.at("block").get<std::size_t>();
  w.claimed = optional_int(j, "claimed");
  return w;
}

} // namespace

auto to_json(const VertexSet & s) -> json
{
  return s.to_vector();
}

auto to_json(const Partition & p) -> json
{
  json out = json::array();
  for (auto b : p.blocks())
    out.push_back(to_json(b));
  return out;
}

auto to_json(const PartitionCertificate & cert) -> json
{
  json out = json::array();
  for (const auto & b : cert.blocks) {
    if (b.kind == Justification::standalone_fair)
      out.push_back({{"kind", "standalone"}});
    else
      out.push_back({{"kind", "partner"}, {"partner", b.partner}});
  }
  return out;
}

auto to_json(const Violation & violation) -> json
{
  return {{"block", violation.block},
          {"kind", violation.kind == ViolationKind::fair_block_wrong_size ? "fair-block-wrong-size" : "no-partner"},
          {"message", violation.message}};
}

auto to_json(const Bound & bound) -> json
{
  return {{"value", bound.value}, {"source", bound_source_name(bound.source)}};
}

auto to_json(const BoundsReport & bounds) -> json
{
  return {{"lower", optional_to_json(bounds.lower, [](const Bound & b) { return to_json(b); })},
          {"upper", to_json(bounds.upper)}};
}

auto to_json(const SolveReport & r) -> json
{
  json out = {
      {"graph6", r.graph6},
      {"order", r.order},
      {"k", r.k},
      {"outcome", r.outcome},
      {"c_kf", optional_to_json(r.value, [](int v) { return json(v); })},
      {"witness", optional_to_json(r.witness, [](const Partition & p) { return to_json(p); })},
      {"certificate", optional_to_json(r.certificate, [](const PartitionCertificate & c) { return to_json(c); })},
      {"bounds", to_json(r.bounds)},
      {"proven_upper", optional_to_json(r.proven_upper, [](int v) { return json(v); })},
      {"known_lower", optional_to_json(r.known_lower, [](int v) { return json(v); })},
      {"nodes", r.nodes},
      {"start_bound", r.start_bound},
  };
  if (r.elapsed_ms)
    out["elapsed_ms"] = *r.elapsed_ms;
  return out;
}

auto to_json(const Witness & w) -> json
{
  return {{"graph6", w.graph6},
          {"k", w.k},
          {"partition", optional_to_json(w.partition, [](const Partition & p) { return to_json(p); })},
          {"set", optional_to_json(w.set, [](const VertexSet & s) { return to_json(s); })},
          {"block", optional_to_json(w.block, [](std::size_t b) { return json(b); })},
          {"claimed", optional_to_json(w.claimed, [](int v) { return json(v); })}};
}

auto to_json(const CensusReport & report) -> json
{
  json records = json::array();
  for (const auto & r : report.records) {
    json checks = json::array();
    for (const auto & c : r.checks)
      checks.push_back({{"check", c.check},
                        {"status", check_status_name(c.status)},
                        {"detail", c.detail},
                        {"witness", optional_to_json(c.witness, [](const Witness & w) { return to_json(w); })}});
    json invariants = json::object();
    for (const auto & [name, value] : r.invariants)
      invariants[name] = value;
    records.push_back({{"graph6", r.graph6},
                       {"label", r.label},
                       {"order", r.order},
                       {"k", r.k},
                       {"c_kf", optional_to_json(r.value, [](int v) { return json(v); })},
                       {"outcome", r.outcome},
                       {"invariants", invariants},
                       {"checks", checks}});
  }
  json errors = json::array();
  for (const auto & e : report.parse_errors)
    errors.push_back({{"line", e.line}, {"offset", e.offset}, {"message", e.message}});
  json tally = json::object();
  for (const auto & [name, t] : report.tally())
    tally[name] = {{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}, {"finding", t.finding}};
  return {{"corpus",
           {{"source", report.corpus.source},
            {"min_order", report.corpus.min_order},
            {"max_order", report.corpus.max_order},
            {"filter", report.corpus.filter}}},
          {"records", records},
          {"parse_errors", errors},
          {"tally", tally},
          {"passed", report.passed()}};
}

auto vertex_set_from_json(const json & j) -> VertexSet
{
  VertexSet s;
  for (const auto & v : j)
    s.insert(v.get<int>());
  return s;
}

auto partition_from_json(const json & j) -> Partition
{
  std::vector<VertexSet> blocks;
  for (const auto & b : j)
    blocks.push_back(vertex_set_from_json(b));
  return Partition(std::move(blocks));
}

auto certificate_from_json(const json & j) -> PartitionCertificate
{
  PartitionCertificate cert;
  for (const auto & b : j) {
    const auto kind = b.at("kind").get<std::string>();
    if (kind == "standalone")
      cert.blocks.push_back({Justification::standalone_fair, 0});
    else if (kind == "partner")
      cert.blocks.push_back({Justification::partner, b.at("partner").get<std::size_t>()});
    else
      throw std::invalid_argument("unknown justification: " + kind);
  }
  return cert;
}

auto bound_from_json(const json & j) -> Bound
{
  return {j.at("value").get<int>(), bound_source_from_name(j.at("source").get<std::string>())};
}

auto solve_report_from_json(const json & j) -> SolveReport
{
  SolveReport r;
  r.graph6 = j.at("graph6").get<std::string>();
  r.order = j.at("order").get<int>();
  r.k = j.at("k").get<int>();
  r.outcome = j.at("outcome").get<std::string>();
  r.value = optional_int(j, "c_kf");
  if (! j.at("witness").is_null())
    r.witness = partition_from_json(j.at("witness"));
  if (! j.at("certificate").is_null())
    r.certificate = certificate_from_json(j.at("certificate"));
  if (! j.at("bounds").at("lower").is_null())
    r.bounds.lower = bound_from_json(j.at("bounds").at("lower"));
  r.bounds.upper = bound_from_json(j.at("bounds").at("upper"));
  r.proven_upper = optional_int(j, "proven_upper");
  r.known_lower = optional_int(j, "known_lower");
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.start_bound = j.at("start_bound").get<int>();
  if (j.contains("elapsed_ms"))
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

auto census_report_from_json(const json & j) -> CensusReport
{
  CensusReport report;
  const auto & c = j.at("corpus");
  report.corpus = {c.at("source").get<std::string>(), c.at("min_order").get<int>(), c.at("max_order").get<int>(),
                   c.at("filter").get<std::string>()};
  for (const auto & r : j.at("records")) {
    GraphRecord record;
    record.graph6 = r.at("graph6").get<std::string>();
    record.label = r.at("label").get<std::string>();
    record.order = r.at("order").get<int>();
    record.k = r.at("k").get<int>();
    record.value = optional_int(r, "c_kf");
    record.outcome = r.at("outcome").get<std::string>();
    for (const auto & [name, value] : r.at("invariants").items())
      record.invariants[name] = value.get<int>();
    for (const auto & check : r.at("checks")) {
      CheckOutcome outcome{check.at("check").get<std::string>(), status_from_name(check.at("status").get<std::string>()),
                           check.at("detail").get<std::string>(), std::nullopt};
      if (! check.at("witness").is_null())
        outcome.witness = witness_from_json(check.at("witness"));
      record.checks.push_back(std::move(outcome));
    }
    report.records.push_back(std::move(record));
  }
  for (const auto & e : j.at("parse_errors"))
    report.parse_errors.push_back(
        {e.at("line").get<std::size_t>(), e.at("offset").get<std::size_t>(), e.at("message").get<std::string>()});
  return report;
}

auto dump(const json & j) -> std::string
{
  return j.dump(2) + "\n";
}

} // namespace fairco
