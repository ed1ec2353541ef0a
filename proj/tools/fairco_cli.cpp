#include <fairco/graph_io.hpp>
#include <fairco/json_io.hpp>
#include <fairco/report.hpp>
#include <fairco/simd/kfd_kernels.hpp>
#include <fairco/verification.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fairco;

namespace {

enum Exit
{
  exit_value = 0,
  exit_failure = 1,
  exit_input = 2,
  exit_no_partition = 3,
  exit_inconclusive = 4,
  exit_invalid_partition = 5
};

struct InputError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct Config
{
  std::string family;
  int n = 0, s = 0, t = 0, l = 1;
  std::string g6;
  std::string file;
  std::string format = "graph6";
  int k = 2;
  std::optional<int> cap;
  bool allow_large = false;
  std::optional<std::uint64_t> budget;
  int workers = 1;
  std::string output = "text";
  bool timing = false;
  std::string partition_file;
  int max_order = 10;
  std::string corpus;
  std::vector<std::string> checks;
  std::optional<int> min_order;
  std::optional<int> regular;
  std::vector<int> ks;
};

auto read_file(const std::string & path) -> std::string
{
  std::ifstream in(path, std::ios::binary);
  if (! in)
    throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

auto env_int(const char * name) -> std::optional<long long>
{
  const char * text = std::getenv(name);
  if (! text || ! *text)
    return std::nullopt;
  char * end = nullptr;
  const long long value = std::strtoll(text, &end, 10);
  if (*end != '\0' || value < 1)
    throw InputError(std::string(name) + " must be a positive integer, got '" + text + "'");
  return value;
}

auto solver_options(const Config & c) -> SolverOptions
{
  SolverOptions options;
  std::optional<int> cap = c.cap;
  bool acknowledged = c.allow_large;
  if (! cap)
    if (auto env = env_int("FAIRCO_CAP")) {
      cap = static_cast<int>(*env);
      acknowledged = true;
    }
  if (cap) {
    if (*cap > default_order_cap && ! acknowledged)
      throw InputError("--cap above " + std::to_string(default_order_cap) + " requires --allow-large");
    if (*cap > max_ingest_order)
      throw InputError("--cap may not exceed " + std::to_string(max_ingest_order));
    options.order_cap = *cap;
  }
  if (c.budget)
    options.budget = *c.budget;
  else if (auto env = env_int("FAIRCO_BUDGET"))
    options.budget = static_cast<std::uint64_t>(*env);
  if (c.workers < 1)
    throw InputError("--workers must be at least 1");
  options.workers = c.workers;
  return options;
}

auto family_graph(const Config & c) -> Graph
{
  const auto family = c.family;
  try {
    if (family == "complete")
      return build_complete(c.n);
    if (family == "complete-bipartite")
      return build_complete_bipartite(c.s, c.t);
    if (family == "path")
      return build_path(c.n);
    if (family == "cycle")
      return build_cycle(c.n);
    if (family == "edgeless")
      return build_edgeless(c.n);
    if (family == "path-corona")
      return corona(build_path(c.n), c.l);
    if (family == "cycle-corona")
      return corona(build_cycle(c.n), c.l);
    if (family == "complete-minus-matching")
      return complete_minus_perfect_matching(c.n);
    if (family == "g1")
      return graph_g1();
    if (family == "g2")
      return graph_g2();
  }
  catch (const std::exception & e) {
    throw InputError("family " + family + ": " + e.what());
  }
  throw InputError("unknown family '" + family + "'");
}

auto load_graph(const Config & c) -> Graph
{
  const int sources = ! c.family.empty() + ! c.g6.empty() + ! c.file.empty();
  if (sources != 1)
    throw InputError("exactly one of --family, --g6, --file is required");
  if (! c.family.empty())
    return family_graph(c);
  try {
    if (! c.g6.empty())
      return parse_graph6(c.g6);
    const auto text = read_file(c.file);
    if (c.format == "graph6") {
      auto line = std::string_view(text);
      line = line.substr(0, line.find('\n'));
      return parse_graph6(line);
    }
    if (c.format == "edge-list")
      return parse_edge_list(text);
    throw InputError("unknown format '" + c.format + "'");
  }
  catch (const ParseError & e) {
    throw InputError((c.file.empty() ? std::string("--g6") : c.file) + ": " + e.what());
  }
}

auto check_k(const Config & c) -> void
{
  if (c.k < 1)
    throw InputError("--k must be at least 1");
}

auto load_partition(const Config & c) -> Partition
{
  if (c.partition_file.empty())
    throw InputError("--partition is required");
  try {
    return parse_partition(read_file(c.partition_file));
  }
  catch (const ParseError & e) {
    throw InputError(c.partition_file + ": " + e.what());
  }
}

auto cmd_solve(const Config & c) -> int
{
  check_k(c);
  const auto options = solver_options(c);
  const auto g = load_graph(c);
  SolveReport report;
  try {
    report = make_solve_report(g, c.k, options, c.timing);
  }
  catch (const OrderCapExceeded & e) {
    throw InputError(e.what());
  }
  if (c.output == "json")
    std::cout << dump(to_json(report));
  else if (c.output == "dot") {
    if (! report.witness)
      throw InputError("no witness partition to draw");
    std::vector<std::string> labels;
    for (auto b : report.witness->blocks())
      labels.push_back(b.to_string());
    std::cout << to_dot(coalition_graph(g, *report.witness, c.k), "coalition", labels);
  }
  else
    std::cout << to_text(report);
  if (report.outcome == "value")
    return exit_value;
  return report.outcome == "no-partition" ? exit_no_partition : exit_inconclusive;
}

auto cmd_validate(const Config & c) -> int
{
  check_k(c);
  const auto g = load_graph(c);
  const auto p = load_partition(c);
  Validation validation;
  try {
    validation = validate_partition(g, p, c.k);
  }
  catch (const StructuralError & e) {
    throw InputError(std::string("not a partition: ") + e.what());
  }
  const bool valid = std::holds_alternative<PartitionCertificate>(validation);
  if (c.output == "json") {
    json out = {{"graph6", encode_graph6(g)}, {"k", c.k}, {"partition", to_json(p)}, {"valid", valid}};
    if (valid)
      out["certificate"] = to_json(std::get<PartitionCertificate>(validation));
    else
      out["violation"] = to_json(std::get<Violation>(validation));
    std::cout << dump(out);
  }
  else if (valid) {
    std::cout << "valid " << p.size() << "-block partition\n";
    const auto & cert = std::get<PartitionCertificate>(validation);
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::cout << "  " << i << ": " << p.block(i).to_string();
      if (cert.blocks[i].kind == Justification::standalone_fair)
        std::cout << " standalone\n";
      else
        std::cout << " partner " << cert.blocks[i].partner << "\n";
    }
  }
  else {
    const auto & v = std::get<Violation>(validation);
    std::cout << "invalid: block " << v.block << ": " << v.message << "\n";
  }
  return valid ? exit_value : exit_invalid_partition;
}

auto print_census(const Config & c, const CensusReport & report) -> int
{
  if (c.output == "json")
    std::cout << dump(to_json(report));
  else
    std::cout << summary_table(report);
  return report.passed() ? exit_value : exit_failure;
}

auto cmd_verify(const Config & c) -> int
{
  SuiteOptions options{solver_options(c)};
  if (c.max_order > options.solver.order_cap)
    throw InputError("--max-order exceeds the solver cap");
  return print_census(c, run_theorem_suite(c.max_order, options));
}

auto cmd_census(const Config & c) -> int
{
  if (c.corpus.empty())
    throw InputError("--corpus is required");
  CensusOptions options;
  options.solver = solver_options(c);
  options.source = c.corpus;
  options.min_order = c.min_order;
  options.max_order = c.max_order;
  options.regular_degree = c.regular;
  if (! c.checks.empty()) {
    options.checks = 0;
    for (const auto & name : c.checks) {
      auto check = parse_check(name);
      if (! check)
        throw InputError("unknown check '" + name + "'");
      options.checks |= static_cast<CheckSet>(*check);
    }
  }
  const auto ks = c.ks.empty() ? std::vector<int>{c.k} : c.ks;
  const auto text = read_file(c.corpus);
  std::vector<CensusReport> reports;
  for (int k : ks) {
    if (k < 1)
      throw InputError("--k must be at least 1");
    options.k = k;
    std::istringstream in(text);
    reports.push_back(run_census(in, options));
  }
  auto report = merge_reports(std::move(reports));
  if (ks.size() > 1) {
    // merged runs report the same parse errors once per k
    std::sort(report.parse_errors.begin(), report.parse_errors.end(),
              [](const auto & a, const auto & b) { return a.line < b.line; });
    report.parse_errors.erase(std::unique(report.parse_errors.begin(), report.parse_errors.end(),
                                          [](const auto & a, const auto & b) { return a.line == b.line; }),
                              report.parse_errors.end());
  }
  return print_census(c, report);
}

auto cmd_bounds(const Config & c) -> int
{
  check_k(c);
  const auto options = solver_options(c);
  const auto g = load_graph(c);
  const auto b = bounds(g, c.k, options.order_cap);
  if (c.output == "json")
    std::cout << dump(json{{"graph6", encode_graph6(g)}, {"k", c.k}, {"bounds", to_json(b)}});
  else {
    std::cout << "upper: " << b.upper.value << " (" << bound_source_name(b.upper.source) << ")\n";
    if (b.lower)
      std::cout << "lower: " << b.lower->value << " (" << bound_source_name(b.lower->source) << ")\n";
    else
      std::cout << "lower: none\n";
  }
  return exit_value;
}

auto cmd_dot(const Config & c) -> int
{
  check_k(c);
  const auto g = load_graph(c);
  const auto p = load_partition(c);
  try {
    Validation validation = validate_partition(g, p, c.k);
    if (auto * violation = std::get_if<Violation>(&validation)) {
      std::cerr << "fairco: invalid partition: block " << violation->block << ": " << violation->message << "\n";
      return exit_invalid_partition;
    }
  }
  catch (const StructuralError & e) {
    throw InputError(std::string("not a partition: ") + e.what());
  }
  std::vector<std::string> labels;
  for (auto b : p.blocks())
    labels.push_back(b.to_string());
  std::cout << to_dot(coalition_graph(g, p, c.k), "coalition", labels);
  return exit_value;
}

auto cmd_generate(const Config & c) -> int
{
  const auto g = load_graph(c);
  if (c.output == "json")
    std::cout << dump(json{{"graph6", encode_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}});
  else if (c.output == "dot")
    std::cout << to_dot(g, "g");
  else if (c.format == "edge-list")
    std::cout << encode_edge_list(g);
  else
    std::cout << encode_graph6(g) << "\n";
  return exit_value;
}

auto add_graph_options(CLI::App * sub, Config & c) -> void
{
  sub->add_option("--family", c.family,
                  "complete, complete-bipartite, path, cycle, edgeless, path-corona, cycle-corona, "
                  "complete-minus-matching, g1, g2");
  sub->add_option("--n", c.n, "order parameter");
  sub->add_option("--s", c.s, "smaller bipartite part");
  sub->add_option("--t", c.t, "larger bipartite part");
  sub->add_option("--l", c.l, "corona clique size");
  sub->add_option("--g6", c.g6, "graph6 string");
  sub->add_option("--file", c.file, "graph file");
  sub->add_option("--format", c.format, "graph6 or edge-list")->check(CLI::IsMember({"graph6", "edge-list"}));
}

auto add_solver_options(CLI::App * sub, Config & c) -> void
{
  sub->add_option("--cap", c.cap, "order cap override");
  sub->add_flag("--allow-large", c.allow_large, "acknowledge a cap above the default");
  sub->add_option("--budget", c.budget, "search node budget");
  sub->add_option("--workers", c.workers, "worker threads");
}

auto add_output(CLI::App * sub, Config & c, std::vector<std::string> formats) -> void
{
  sub->add_option("--output", c.output, "output format")->check(CLI::IsMember(formats));
}

} // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Exact k-fair domination and k-fair coalition numbers"};
  app.require_subcommand(1);
  Config c;
  std::string simd;
  app.add_option("--simd", simd, "force kernel: scalar or avx2")->check(CLI::IsMember({"scalar", "avx2"}));

  auto * solve = app.add_subcommand("solve", "exact c_kf with witness, certificate and bounds");
  add_graph_options(solve, c);
  add_solver_options(solve, c);
  solve->add_option("--k", c.k, "fairness parameter");
  solve->add_flag("--timing", c.timing, "include wall time");
  add_output(solve, c, {"json", "text", "dot"});

  auto * validate = app.add_subcommand("validate", "check a partition file");
  add_graph_options(validate, c);
  validate->add_option("--k", c.k, "fairness parameter");
  validate->add_option("--partition", c.partition_file, "one block per line")->required();
  add_output(validate, c, {"json", "text"});

  auto * verify = app.add_subcommand("verify", "closed-form suite");
  add_solver_options(verify, c);
  verify->add_option("--max-order", c.max_order, "largest instance order");
  add_output(verify, c, {"json", "text"});

  auto * census = app.add_subcommand("census", "property checks over a graph6 corpus");
  add_solver_options(census, c);
  census->add_option("--corpus", c.corpus, "graph6 file")->required();
  census->add_option("--k", c.ks, "fairness parameter, repeatable");
  census->add_option("--check", c.checks, "check name, repeatable (default all)");
  census->add_option("--min-order", c.min_order, "smallest order");
  census->add_option("--max-order", c.max_order, "largest order");
  census->add_option("--regular", c.regular, "only graphs of this regular degree");
  add_output(census, c, {"json", "text"});

  auto * bounds_cmd = app.add_subcommand("bounds", "published bounds with provenance");
  add_graph_options(bounds_cmd, c);
  add_solver_options(bounds_cmd, c);
  bounds_cmd->add_option("--k", c.k, "fairness parameter");
  add_output(bounds_cmd, c, {"json", "text"});

  auto * dot = app.add_subcommand("dot", "coalition graph of a partition in DOT");
  add_graph_options(dot, c);
  dot->add_option("--k", c.k, "fairness parameter");
  dot->add_option("--partition", c.partition_file, "one block per line")->required();

  auto * generate = app.add_subcommand("generate", "print a family graph");
  add_graph_options(generate, c);
  add_output(generate, c, {"json", "text", "dot"});

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }

  try {
    if (simd == "scalar")
      simd::set_active_isa(simd::Isa::scalar);
    else if (simd == "avx2")
      simd::set_active_isa(simd::Isa::avx2);

    if (*solve)
      return cmd_solve(c);
    if (*validate)
      return cmd_validate(c);
    if (*verify)
      return cmd_verify(c);
    if (*census) {
      if (census->count("--max-order") == 0)
        c.max_order = default_order_cap;
      return cmd_census(c);
    }
    if (*bounds_cmd)
      return cmd_bounds(c);
    if (*dot)
      return cmd_dot(c);
    if (*generate)
      return cmd_generate(c);
  }
  catch (const InputError & e) {
    std::cerr << "fairco: " << e.what() << "\n";
    return exit_input;
  }
  catch (const std::exception & e) {
    std::cerr << "fairco: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_input;
}
