#include <fairco/graph_io.hpp>
#include <fairco/verification.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace fairco {

// ---------------------------------------------------------------------------
// Closed forms

namespace {

constexpr std::array family_names{
    std::pair{Family::complete, std::string_view{"complete"}},
    std::pair{Family::complete_bipartite, std::string_view{"complete-bipartite"}},
    std::pair{Family::path, std::string_view{"path"}},
    std::pair{Family::cycle, std::string_view{"cycle"}},
    std::pair{Family::path_corona_k1, std::string_view{"path-corona"}},
    std::pair{Family::cycle_corona_k1, std::string_view{"cycle-corona"}},
    std::pair{Family::cubic_order6_g1, std::string_view{"g1"}},
    std::pair{Family::cubic_order6_g2, std::string_view{"g2"}},
};

auto exact(Family f, FamilyParams p, int k, int value, bool audit = false) -> ClosedForm
{
  return {f, p, k, ExactValue{value}, audit};
}

} // namespace

auto family_name(Family family) -> std::string_view
{
  for (auto [f, name] : family_names)
    if (f == family)
      return name;
  return "unknown";
}

auto parse_family(std::string_view name) -> std::optional<Family>
{
  for (auto [f, known] : family_names)
    if (known == name)
      return f;
  return std::nullopt;
}

auto ClosedForm::order() const -> int
{
  switch (family) {
  case Family::complete:
  case Family::path:
  case Family::cycle:
    return params.n;
  case Family::complete_bipartite:
    return params.s + params.t;
  case Family::path_corona_k1:
  case Family::cycle_corona_k1:
    return 2 * params.n;
  case Family::cubic_order6_g1:
  case Family::cubic_order6_g2:
    return 6;
  }
  return 0;
}

auto ClosedForm::build() const -> Graph
{
  switch (family) {
  case Family::complete:
    return build_complete(params.n);
  case Family::complete_bipartite:
    return build_complete_bipartite(params.s, params.t);
  case Family::path:
    return build_path(params.n);
  case Family::cycle:
    return build_cycle(params.n);
  case Family::path_corona_k1:
    return corona(build_path(params.n), 1);
  case Family::cycle_corona_k1:
    return corona(build_cycle(params.n), 1);
  case Family::cubic_order6_g1:
    return graph_g1();
  case Family::cubic_order6_g2:
    return graph_g2();
  }
  throw std::logic_error("unhandled family");
}

auto ClosedForm::label() const -> std::string
{
  const auto n = std::to_string(params.n);
  switch (family) {
  case Family::complete:
    return "K_" + n;
  case Family::complete_bipartite:
    return "K_{" + std::to_string(params.s) + "," + std::to_string(params.t) + "}";
  case Family::path:
    return "P_" + n;
  case Family::cycle:
    return "C_" + n;
  case Family::path_corona_k1:
    return "P_" + n + " o K_1";
  case Family::cycle_corona_k1:
    return "C_" + n + " o K_1";
  case Family::cubic_order6_g1:
    return "G_1";
  case Family::cubic_order6_g2:
    return "G_2";
  }
  return "?";
}

auto lookup_closed_form(Family family, FamilyParams p, int k) -> std::optional<ClosedForm>
{
  switch (family) {
  case Family::complete:
    if (p.n >= 3 && k >= 2 && k <= p.n - 1)
      return exact(family, p, k, p.n - k + 2);
    return std::nullopt;

  case Family::complete_bipartite: {
    const int s = p.s, t = p.t;
    if (s < 1 || s > t || k < 2)
      return std::nullopt;
    if (k == s && s == t)
      return exact(family, p, k, 4);
    if (k == s)
      return exact(family, p, k, 2);
    if (k > s)
      return exact(family, p, k, 2);
    // k < s, only upper bounds are published
    if (s < 3 * k - 1)
      return ClosedForm{family, p, k, UpperBoundOnly{t - k + 3}};
    return ClosedForm{family, p, k, UpperBoundOnly{s + t - 4 * k + 4}};
  }

  case Family::path:
    if (k != 2 || p.n < 1)
      return std::nullopt;
    if (p.n == 1)
      return ClosedForm{family, p, k, KnownDiscrepancy{1, std::nullopt}};
    return exact(family, p, k, p.n <= 3 ? 2 : 3);

  case Family::cycle:
    if (k != 2 || p.n < 3)
      return std::nullopt;
    return exact(family, p, k, p.n % 2 == 0 ? 4 : 3);

  case Family::path_corona_k1:
    if (k != 2 || p.n < 1)
      return std::nullopt;
    if (p.n == 1 || p.n == 2 || p.n == 3)
      return exact(family, p, k, 2);
    if (p.n == 5)
      return exact(family, p, k, 2, true);
    return exact(family, p, k, 3);

  case Family::cycle_corona_k1:
    if (k != 2 || p.n < 3)
      return std::nullopt;
    return exact(family, p, k, p.n == 3 ? 4 : 3);

  case Family::cubic_order6_g1:
    return k == 2 ? std::optional(exact(family, {}, k, 4)) : std::nullopt;
  case Family::cubic_order6_g2:
    return k == 2 ? std::optional(exact(family, {}, k, 3)) : std::nullopt;
  }
  return std::nullopt;
}

auto closed_form_table(int max_order) -> std::vector<ClosedForm>
{
  std::vector<ClosedForm> rows;
  auto add = [&](Family f, FamilyParams p, int k) {
    if (auto row = lookup_closed_form(f, p, k); row && row->order() <= max_order)
      rows.push_back(*row);
  };
  for (int n = 3; n <= max_order; ++n)
    for (int k = 2; k <= n - 1; ++k)
      add(Family::complete, {n, 0, 0}, k);
  for (int s = 1; s <= max_order; ++s)
    for (int t = s; s + t <= max_order; ++t)
      for (int k = 2; k <= t + 1; ++k)
        add(Family::complete_bipartite, {0, s, t}, k);
  for (int n = 1; n <= max_order; ++n)
    add(Family::path, {n, 0, 0}, 2);
  for (int n = 3; n <= max_order; ++n)
    add(Family::cycle, {n, 0, 0}, 2);
  for (int n = 1; 2 * n <= max_order; ++n)
    add(Family::path_corona_k1, {n, 0, 0}, 2);
  for (int n = 3; 2 * n <= max_order; ++n)
    add(Family::cycle_corona_k1, {n, 0, 0}, 2);
  add(Family::cubic_order6_g1, {}, 2);
  add(Family::cubic_order6_g2, {}, 2);
  return rows;
}

// ---------------------------------------------------------------------------
// Reports

auto check_status_name(CheckStatus status) -> std::string_view
{
  switch (status) {
  case CheckStatus::pass:
    return "pass";
  case CheckStatus::fail:
    return "fail";
  case CheckStatus::skipped:
    return "skipped";
  case CheckStatus::finding:
    return "finding";
  }
  return "unknown";
}

auto CensusReport::tally() const -> std::map<std::string, CheckTally>
{
  std::map<std::string, CheckTally> out;
  for (const auto & record : records)
    for (const auto & check : record.checks) {
      auto & t = out[check.check];
      switch (check.status) {
      case CheckStatus::pass:
        ++t.pass;
        break;
      case CheckStatus::fail:
        ++t.fail;
        break;
      case CheckStatus::skipped:
        ++t.skipped;
        break;
      case CheckStatus::finding:
        ++t.finding;
        break;
      }
    }
  return out;
}

auto CensusReport::failures() const -> int
{
  int count = 0;
  for (const auto & record : records)
    for (const auto & check : record.checks)
      if (check.status == CheckStatus::fail)
        ++count;
  return count;
}

auto CensusReport::passed() const -> bool
{
  return failures() == 0 && parse_errors.empty();
}

auto CensusReport::sort_records() -> void
{
  std::stable_sort(records.begin(), records.end(), [](const GraphRecord & a, const GraphRecord & b) {
    if (a.graph6 != b.graph6)
      return a.graph6 < b.graph6;
    return a.k < b.k;
  });
}

namespace {

auto fill_outcome(GraphRecord & record, const std::optional<SolveResult> & result) -> void
{
  if (! result)
    return;
  if (auto value = solved_value(*result)) {
    record.value = *value;
    record.outcome = "value";
  }
  else
    record.outcome = "no-partition";
}

auto witness_partition(const SolveResult & result) -> std::optional<Partition>
{
  if (auto * value = std::get_if<SolveValue>(&result))
    return value->witness;
  return std::nullopt;
}

auto describe(const SolveResult & result) -> std::string
{
  if (auto value = solved_value(result))
    return std::to_string(*value);
  return "no partition";
}

auto skipped(std::string check, std::string detail) -> CheckOutcome
{
  return {std::move(check), CheckStatus::skipped, std::move(detail), std::nullopt};
}

// Shared solving context for one (graph, k) pair; everything is computed lazily.
class Subject
{
public:
  Subject(Graph g, int k, const SolverOptions & options) :
      graph(std::move(g)), k(k), graph6(encode_graph6(graph)), _options(options)
  {
  }

  auto solve() -> const std::optional<SolveResult> &
  {
    if (! _solved) {
      _solved = true;
      try {
        _result = c_kf(graph, k, _options);
      }
      catch (const Inconclusive & e) {
        _failure = "inconclusive";
        _failure_detail = e.what();
      }
      catch (const OrderCapExceeded & e) {
        _failure = "not-solved";
        _failure_detail = e.what();
      }
    }
    return _result;
  }

  auto failure() const -> const std::string & { return _failure; }
  auto failure_detail() const -> const std::string & { return _failure_detail; }

  /// 0 for NoPartition.
  auto value_or_zero() -> int { return solved_value(*solve()).value_or(0); }

  auto witness(std::optional<Partition> partition = std::nullopt, std::optional<int> claimed = std::nullopt)
      -> Witness
  {
    Witness w;
    w.graph6 = graph6;
    w.k = k;
    w.partition = std::move(partition);
    w.claimed = claimed;
    return w;
  }

  Graph graph;
  int k;
  std::string graph6;

private:
  SolverOptions _options;
  bool _solved = false;
  std::optional<SolveResult> _result;
  std::string _failure, _failure_detail;
};

auto unsolved(Subject & subject, std::string check) -> CheckOutcome
{
  return skipped(std::move(check), subject.failure() + ": " + subject.failure_detail());
}

auto check_oracle(Subject & s) -> CheckOutcome
{
  const std::string name{check_name(Check::oracle_equivalence)};
  if (s.graph.order() > naive_order_cap)
    return skipped(name, "order above oracle cap " + std::to_string(naive_order_cap));
  if (! s.solve())
    return unsolved(s, name);
  const auto & fast = *s.solve();
  const auto slow = naive_c_kf(s.graph, s.k);
  const bool same_value = solved_value(fast) == solved_value(slow);
  const bool same_witness = witness_partition(fast) == witness_partition(slow);
  if (same_value && same_witness)
    return {name, CheckStatus::pass, "both " + describe(fast), std::nullopt};
  return {name, CheckStatus::fail,
          "search " + describe(fast) + ", oracle " + describe(slow) + (same_value ? " (witnesses differ)" : ""),
          s.witness(witness_partition(fast), solved_value(slow))};
}

auto check_cubic_fair_sets(Subject & s) -> CheckOutcome
{
  const std::string name{check_name(Check::cubic_fair_set_size)};
  if (! s.graph.is_regular(3))
    return skipped(name, "hypothesis: graph is not 3-regular");
  const int n = s.graph.order();
  const int least = (2 * n + 4) / 5;
  int count = 0;
  KfdEnumerator sets(s.graph, 2);
  while (auto set = sets.next()) {
    ++count;
    if (set->size() < least) {
      auto w = s.witness(std::nullopt, least);
      w.k = 2;
      w.set = *set;
      return {name, CheckStatus::fail,
              "2-fair dominating set " + set->to_string() + " has fewer than " + std::to_string(least) + " vertices",
              w};
    }
  }
  return {name, CheckStatus::pass, std::to_string(count) + " sets, all of size >= " + std::to_string(least),
          std::nullopt};
}

auto check_regular_range(Subject & s) -> CheckOutcome
{
  const std::string name{check_name(Check::regular_range)};
  if (! s.graph.is_regular(s.k))
    return skipped(name, "hypothesis: graph is not " + std::to_string(s.k) + "-regular");
  if (! s.solve())
    return unsolved(s, name);
  const int c = s.value_or_zero();
  if (c >= 3 && c <= 4)
    return {name, CheckStatus::pass, "value " + std::to_string(c), std::nullopt};
  return {name, CheckStatus::fail, "value " + describe(*s.solve()) + " outside [3, 4]",
          s.witness(witness_partition(*s.solve()), c > 4 ? 4 : 3)};
}

auto check_domatic_lower(Subject & s, int order_cap) -> CheckOutcome
{
  const std::string name{check_name(Check::domatic_lower)};
  if (s.k < 2 || ! s.graph.is_connected())
    return skipped(name, "hypothesis: needs a connected graph and k >= 2");
  if (s.graph.order() > order_cap)
    return skipped(name, "order above domatic cap");
  if (! s.solve())
    return unsolved(s, name);
  const auto domatic = d_kf(s.graph, s.k, order_cap);
  const int c = s.value_or_zero();
  if (c >= 2 * domatic.value)
    return {name, CheckStatus::pass, "value " + std::to_string(c) + " >= 2 * " + std::to_string(domatic.value),
            std::nullopt};
  return {name, CheckStatus::fail,
          "value " + describe(*s.solve()) + " below 2 * d_kf = " + std::to_string(2 * domatic.value),
          s.witness(Partition(domatic.blocks), 2 * domatic.value)};
}

auto check_half_domatic(Subject & s, int order_cap) -> CheckOutcome
{
  const std::string name{check_name(Check::half_domatic)};
  if (s.k % 2 != 0)
    return skipped(name, "hypothesis: k is odd");
  if (s.graph.order() > order_cap)
    return skipped(name, "order above domatic cap");
  if (! s.solve())
    return unsolved(s, name);
  const auto domatic = d_kf(s.graph, s.k / 2, order_cap);
  const int c = s.value_or_zero();
  if (c >= domatic.value)
    return {name, CheckStatus::pass,
            "value " + std::to_string(c) + " >= d_" + std::to_string(s.k / 2) + "f = " + std::to_string(domatic.value),
            std::nullopt};
  return {name, CheckStatus::finding,
          "counterexample: value " + describe(*s.solve()) + " below d_" + std::to_string(s.k / 2) +
              "f = " + std::to_string(domatic.value),
          s.witness(Partition(domatic.blocks), domatic.value)};
}

auto check_max_degree_upper(Subject & s) -> CheckOutcome
{
  const std::string name{check_name(Check::max_degree_upper)};
  if (s.k <= s.graph.min_degree())
    return skipped(name, "hypothesis: k <= minimum degree");
  if (! s.solve())
    return unsolved(s, name);
  const int bound = s.graph.max_degree() - s.k + 3;
  const int c = s.value_or_zero();
  if (c <= bound)
    return {name, CheckStatus::pass, "value " + describe(*s.solve()) + " <= " + std::to_string(bound), std::nullopt};
  return {name, CheckStatus::fail, "value " + std::to_string(c) + " exceeds Δ - k + 3 = " + std::to_string(bound),
          s.witness(witness_partition(*s.solve()), bound)};
}

auto check_partner_bound(Subject & s) -> CheckOutcome
{
  const std::string name{check_name(Check::partner_bound)};
  if (! s.solve())
    return unsolved(s, name);
  const auto witness = witness_partition(*s.solve());
  if (! witness)
    return skipped(name, "no partition to inspect");
  const int bound = std::max(0, s.graph.max_degree() - s.k + 2);
  for (std::size_t i = 0; i < witness->size(); ++i) {
    if (is_kfair_dominating(s.graph, witness->block(i), s.k))
      continue;
    const int count = partner_count(s.graph, *witness, s.k, i);
    if (count > bound) {
      auto w = s.witness(witness, bound);
      w.block = i;
      return {name, CheckStatus::fail,
              "block " + std::to_string(i) + " has " + std::to_string(count) + " partners, bound " +
                  std::to_string(bound),
              w};
    }
  }
  return {name, CheckStatus::pass, "all blocks within " + std::to_string(bound), std::nullopt};
}

auto check_tree_upper(Subject & s) -> CheckOutcome
{
  const std::string name{check_name(Check::tree_upper)};
  if (s.k != 2 || ! s.graph.is_tree())
    return skipped(name, "hypothesis: needs a tree and k = 2");
  if (! s.solve())
    return unsolved(s, name);
  const int bound = s.graph.order() / 2 + 1;
  const int c = s.value_or_zero();
  if (c <= bound)
    return {name, CheckStatus::pass, "value " + describe(*s.solve()) + " <= " + std::to_string(bound), std::nullopt};
  return {name, CheckStatus::fail, "value " + std::to_string(c) + " exceeds " + std::to_string(bound),
          s.witness(witness_partition(*s.solve()), bound)};
}

auto check_tree_fair_domination(Subject & s) -> CheckOutcome
{
  const std::string name{check_name(Check::tree_fair_domination)};
  if (! s.graph.is_tree() || s.graph.order() < 2)
    return skipped(name, "hypothesis: needs a tree of order >= 2");
  const int n = s.graph.order();
  const auto gf = gamma_f(s.graph);
  const bool corona_shape = is_k1_corona_tree(s.graph);
  const bool within = gf.size <= n / 2;
  const bool equality_matches = (gf.size * 2 == n) == corona_shape;
  std::string detail = "gamma_f = " + std::to_string(gf.size) + ", floor(n/2) = " + std::to_string(n / 2) +
                       (corona_shape ? ", K_1-corona" : ", not a K_1-corona");
  if (within && equality_matches)
    return {name, CheckStatus::pass, detail, std::nullopt};
  auto w = s.witness(std::nullopt, n / 2);
  w.set = gf.witness;
  w.k = gf.k;
  return {name, CheckStatus::fail, detail, w};
}

auto read_corpus(std::istream & in, std::vector<CorpusParseError> & errors)
    -> std::vector<std::pair<std::size_t, Graph>>
{
  std::vector<std::pair<std::size_t, Graph>> graphs;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (! line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty() || (line.starts_with(">>graph6<<") && line.size() == 10))
      continue;
    try {
      graphs.emplace_back(number, parse_graph6(line));
    }
    catch (const ParseError & e) {
      errors.push_back({number, e.offset(), e.reason()});
    }
    catch (const std::invalid_argument & e) {
      errors.push_back({number, 0, e.what()});
    }
  }
  return graphs;
}

} // namespace

auto run_theorem_suite(int max_order, const SuiteOptions & options) -> CensusReport
{
  CensusReport report;
  report.corpus = {"closed-form table", 1, max_order, "named families"};
  for (const auto & row : closed_form_table(max_order)) {
    Subject subject(row.build(), row.k, options.solver);
    GraphRecord record;
    record.graph6 = subject.graph6;
    record.label = row.label();
    record.order = row.order();
    record.k = row.k;
    record.outcome = "not-solved";
    const std::string name = "closed-form";

    const auto & result = subject.solve();
    if (! result) {
      record.outcome = subject.failure();
      record.checks.push_back(unsolved(subject, name));
      report.records.push_back(std::move(record));
      continue;
    }
    fill_outcome(record, result);
    const auto value = solved_value(*result);
    const auto witness = witness_partition(*result);

    CheckOutcome outcome{name, CheckStatus::pass, "", std::nullopt};
    if (auto * e = std::get_if<ExactValue>(&row.expected)) {
      outcome.detail = "published " + std::to_string(e->value) + ", computed " + describe(*result);
      if (value != e->value) {
        outcome.status = CheckStatus::fail;
        outcome.witness = subject.witness(witness, e->value);
        if (row.audit && row.order() <= naive_order_cap) {
          const auto oracle = naive_c_kf(subject.graph, row.k);
          if (solved_value(oracle) == value) {
            outcome.status = CheckStatus::finding;
            outcome.detail += " (confirmed by exhaustive oracle)";
          }
          else
            outcome.detail += " (oracle disagrees: " + describe(oracle) + ")";
        }
      }
    }
    else if (auto * u = std::get_if<UpperBoundOnly>(&row.expected)) {
      outcome.detail = "published bound " + std::to_string(u->bound) + ", computed " + describe(*result);
      if (value.value_or(0) > u->bound) {
        outcome.status = CheckStatus::fail;
        outcome.witness = subject.witness(witness, u->bound);
      }
    }
    else {
      const auto & d = std::get<KnownDiscrepancy>(row.expected);
      const std::string strict = d.strict ? std::to_string(*d.strict) : "no partition";
      outcome.detail = "published " + std::to_string(d.published) + ", strict definition gives " + strict +
                       ", computed " + describe(*result);
      outcome.status = value == d.strict ? CheckStatus::finding : CheckStatus::fail;
      outcome.witness = subject.witness(witness, d.published);
    }
    record.checks.push_back(std::move(outcome));
    report.records.push_back(std::move(record));
  }
  return report;
}

auto check_name(Check check) -> std::string_view
{
  switch (check) {
  case Check::oracle_equivalence:
    return "oracle-equivalence";
  case Check::cubic_fair_set_size:
    return "cubic-fair-set-size";
  case Check::regular_range:
    return "regular-range";
  case Check::domatic_lower:
    return "domatic-lower";
  case Check::max_degree_upper:
    return "max-degree-upper";
  case Check::partner_bound:
    return "partner-bound";
  case Check::tree_upper:
    return "tree-upper";
  case Check::half_domatic:
    return "half-domatic";
  case Check::tree_fair_domination:
    return "tree-fair-domination";
  }
  return "unknown";
}

auto parse_check(std::string_view name) -> std::optional<Check>
{
  for (unsigned bit = 0; bit < 9; ++bit) {
    auto check = static_cast<Check>(1U << bit);
    if (check_name(check) == name)
      return check;
  }
  return std::nullopt;
}

auto run_census(std::istream & corpus, const CensusOptions & options) -> CensusReport
{
  CensusReport report;
  auto graphs = read_corpus(corpus, report.parse_errors);
  for (auto & e : report.parse_errors)
    e.message = options.source + ":" + std::to_string(e.line) + ": " + e.message;

  int lo = options.min_order.value_or(1), hi = options.max_order.value_or(max_ingest_order);
  std::string filter = "orders " + std::to_string(lo) + ".." + std::to_string(hi);
  if (options.regular_degree)
    filter += ", " + std::to_string(*options.regular_degree) + "-regular";
  report.corpus = {options.source, lo, hi, filter};

  const int domatic_cap = std::min(options.solver.order_cap, KfdOracle::table_order_limit);
  auto wants = [&](Check c) { return (options.checks & static_cast<unsigned>(c)) != 0; };

  for (auto & [line, graph] : graphs) {
    if (graph.order() < lo || graph.order() > hi)
      continue;
    if (options.regular_degree && ! graph.is_regular(*options.regular_degree))
      continue;

    Subject subject(std::move(graph), options.k, options.solver);
    GraphRecord record;
    record.graph6 = subject.graph6;
    record.order = subject.graph.order();
    record.k = options.k;
    record.outcome = "not-solved";
    record.invariants = {{"edges", subject.graph.edge_count()},
                         {"min_degree", subject.graph.min_degree()},
                         {"max_degree", subject.graph.max_degree()},
                         {"connected", subject.graph.is_connected() ? 1 : 0}};

    if (wants(Check::oracle_equivalence))
      record.checks.push_back(check_oracle(subject));
    if (wants(Check::cubic_fair_set_size))
      record.checks.push_back(check_cubic_fair_sets(subject));
    if (wants(Check::regular_range))
      record.checks.push_back(check_regular_range(subject));
    if (wants(Check::domatic_lower))
      record.checks.push_back(check_domatic_lower(subject, domatic_cap));
    if (wants(Check::max_degree_upper))
      record.checks.push_back(check_max_degree_upper(subject));
    if (wants(Check::partner_bound))
      record.checks.push_back(check_partner_bound(subject));
    if (wants(Check::tree_upper))
      record.checks.push_back(check_tree_upper(subject));
    if (wants(Check::half_domatic))
      record.checks.push_back(check_half_domatic(subject, domatic_cap));
    if (wants(Check::tree_fair_domination))
      record.checks.push_back(check_tree_fair_domination(subject));

    // only report a value if some check needed it
    if (subject.solve(), ! subject.failure().empty())
      record.outcome = subject.failure();
    else
      fill_outcome(record, subject.solve());
    report.records.push_back(std::move(record));
  }
  report.sort_records();
  return report;
}

auto merge_reports(std::vector<CensusReport> reports) -> CensusReport
{
  CensusReport merged;
  if (reports.empty())
    return merged;
  merged.corpus = reports.front().corpus;
  for (auto & r : reports) {
    for (auto & record : r.records)
      merged.records.push_back(std::move(record));
    for (auto & e : r.parse_errors)
      merged.parse_errors.push_back(std::move(e));
  }
  merged.sort_records();
  return merged;
}

auto extremal_scan(std::istream & corpus, int max_order, const SuiteOptions & options) -> CensusReport
{
  CensusReport report;
  auto graphs = read_corpus(corpus, report.parse_errors);
  report.corpus = {"<stream>", 1, max_order, "(n-2)-regular graphs and trees"};

  for (auto & [line, graph] : graphs) {
    const int n = graph.order();
    if (n > max_order)
      continue;
    const bool near_complete = n >= 2 && graph.is_regular(n - 2);
    const bool tree = graph.is_tree();
    if (! near_complete && ! tree)
      continue;

    Subject subject(std::move(graph), 2, options.solver);
    GraphRecord record;
    record.graph6 = subject.graph6;
    record.order = n;
    record.k = 2;
    record.outcome = "not-solved";
    const auto & result = subject.solve();
    if (! result) {
      record.outcome = subject.failure();
      record.checks.push_back(unsolved(subject, near_complete ? "regular-extremal" : "tree-extremal"));
      report.records.push_back(std::move(record));
      continue;
    }
    fill_outcome(record, result);
    const auto c = solved_value(*result);

    if (near_complete) {
      const bool matching_complement = subject.graph.complement().is_regular(1);
      const bool ok = (c == n) == matching_complement;
      record.checks.push_back({"regular-extremal", ok ? CheckStatus::pass : CheckStatus::fail,
                               "value " + describe(*result) + (matching_complement ? ", K_n minus a perfect matching"
                                                                                   : ", not K_n minus a matching"),
                               ok ? std::nullopt : std::optional(subject.witness(witness_partition(*result), n))});
    }
    if (tree) {
      const bool is_path = subject.graph.max_degree() <= 2;
      std::string detail = "value " + describe(*result);
      bool ok = true;
      if (c == n) {
        ok = is_path && n == 2;
        detail += " = n";
      }
      else if (c == n - 1) {
        ok = is_path && (n == 3 || n == 4);
        detail += " = n - 1";
      }
      record.checks.push_back({"tree-extremal", ok ? CheckStatus::pass : CheckStatus::fail, detail,
                               ok ? std::nullopt : std::optional(subject.witness(witness_partition(*result), c))});
    }
    report.records.push_back(std::move(record));
  }
  report.sort_records();
  return report;
}

auto replay_failure(const CheckOutcome & outcome) -> bool
{
  if (! outcome.witness)
    return false;
  const auto & w = *outcome.witness;
  const auto g = parse_graph6(w.graph6);
  const int k = w.k;
  const int claimed = w.claimed.value_or(0);

  auto valid_partition_size = [&]() -> std::optional<int> {
    if (! w.partition)
      return std::nullopt;
    try {
      if (std::holds_alternative<PartitionCertificate>(validate_partition(g, *w.partition, k)))
        return static_cast<int>(w.partition->size());
    }
    catch (const StructuralError &) {
    }
    return std::nullopt;
  };
  auto exact_value = [&]() { return solved_value(c_kf(g, k)).value_or(0); };
  auto domatic_size = [&]() -> std::optional<int> {
    if (! w.partition)
      return std::nullopt;
    try {
      check_structure(g, *w.partition);
    }
    catch (const StructuralError &) {
      return std::nullopt;
    }
    for (auto b : w.partition->blocks())
      if (! is_kfair_dominating(g, b, k))
        return std::nullopt;
    return static_cast<int>(w.partition->size());
  };

  const auto & check = outcome.check;
  if (check == "max-degree-upper" || check == "tree-upper") {
    auto size = valid_partition_size();
    return size && *size > claimed;
  }
  if (check == "partner-bound") {
    if (! valid_partition_size() || ! w.block)
      return false;
    return ! is_kfair_dominating(g, w.partition->block(*w.block), k) &&
           partner_count(g, *w.partition, k, *w.block) > claimed;
  }
  if (check == "regular-range") {
    if (auto size = valid_partition_size(); size && *size > 4)
      return true;
    return exact_value() < 3;
  }
  if (check == "domatic-lower" || check == "half-domatic") {
    auto size = domatic_size();
    const int needed = check == "domatic-lower" ? 2 * size.value_or(0) : size.value_or(0);
    return size && exact_value() < needed;
  }
  if (check == "cubic-fair-set-size")
    return w.set && g.is_regular(3) && is_kfair_dominating(g, *w.set, 2) && w.set->size() < claimed;
  if (check == "tree-fair-domination") {
    if (! w.set || ! is_kfair_dominating(g, *w.set, k))
      return false;
    const int n = g.order();
    const int gf = gamma_f(g).size;
    return gf > n / 2 || ((gf * 2 == n) != is_k1_corona_tree(g));
  }
  if (check == "oracle-equivalence") {
    const auto fast = c_kf(g, k), slow = naive_c_kf(g, k);
    return solved_value(fast) != solved_value(slow) || witness_partition(fast) != witness_partition(slow);
  }
  if (check == "closed-form") {
    const auto value = solved_value(c_kf(g, k));
    return value != w.claimed;
  }
  if (check == "regular-extremal" || check == "tree-extremal") {
    const auto value = solved_value(c_kf(g, k));
    const int n = g.order();
    if (check == "regular-extremal")
      return (value == n) != g.complement().is_regular(1);
    const bool path = g.max_degree() <= 2;
    return (value == n && ! (path && n == 2)) || (value == n - 1 && ! (path && (n == 3 || n == 4)));
  }
  return false;
}

auto summary_table(const CensusReport & report) -> std::string
{
  std::ostringstream out;
  out << "corpus: " << report.corpus.source << " (" << report.corpus.filter << "), " << report.records.size()
      << " records\n";
  char line[128];
  std::snprintf(line, sizeof line, "%-24s %8s %8s %8s %8s\n", "check", "pass", "fail", "skipped", "finding");
  out << line;
  for (const auto & [name, t] : report.tally()) {
    std::snprintf(line, sizeof line, "%-24s %8d %8d %8d %8d\n", name.c_str(), t.pass, t.fail, t.skipped, t.finding);
    out << line;
  }
  for (const auto & record : report.records)
    for (const auto & check : record.checks)
      if (check.status == CheckStatus::fail || check.status == CheckStatus::finding) {
        out << check_status_name(check.status) << ": " << check.check << " " << record.graph6;
        if (! record.label.empty())
          out << " [" << record.label << "]";
        out << " k=" << record.k << ": " << check.detail << "\n";
      }
  for (const auto & e : report.parse_errors)
    out << "parse error line " << e.line << " byte " << e.offset << ": " << e.message << "\n";
  out << (report.passed() ? "PASSED" : "FAILED") << "\n";
  return out.str();
}

} // namespace fairco
