#include "dagalign/cli.hpp"

#include <cmath>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dagalign/approx.hpp"
#include "dagalign/bench.hpp"
#include "dagalign/error.hpp"
#include "dagalign/exact.hpp"
#include "dagalign/generator.hpp"
#include "dagalign/reductions.hpp"
#include "dagalign/serialize.hpp"
#include "dagalign/tree_align.hpp"

namespace dagalign {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_size(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) {
      const std::size_t n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, x)), std::stoul(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidSpec, "bad size '" + text + "', expected N or N1xN2");
  }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

struct Options {
  std::string instance_path;
  std::string second_path;
  std::optional<std::pair<double, std::size_t>> decide;
  std::uint64_t budget = ExactOptions{}.node_budget;
  bool restricted = false;
  std::string strategy;
  bool compare_exact = false;
  bool dump_table = false;
  std::string out_path;
  GenSpec spec;
  std::string kind = "dag";
  std::string sizes = "4x4";
  std::string solvers = "exact,wis-greedy,wis-ramsey,wsp-greedy";
  std::size_t exact_cutoff = 14;
  std::size_t count = 10;
  bool no_timing = false;
};

int run_solve(const Options& o, std::ostream& out) {
  const AlignmentInstance instance = parse_instance(read_text_file(o.instance_path));
  ExactOptions exact;
  exact.node_budget = o.budget;
  if (o.decide) {
    const bool yes = decide_alignment(instance, o.decide->first, o.decide->second, exact);
    out << "{\"decision\": " << (yes ? "true" : "false")
        << ", \"min_weight\": " << format_weight(o.decide->first)
        << ", \"max_size\": " << o.decide->second << "}\n";
    return yes ? kExitOk : kExitAnsweredFalse;
  }
  const ExactResult result =
      o.restricted ? exact_align_isomorphic(instance, exact) : exact_align(instance, exact);
  out << alignment_to_json(instance, result.alignment);
  return kExitOk;
}

int run_approx(const Options& o, std::ostream& out) {
  const AlignmentInstance instance = parse_instance(read_text_file(o.instance_path));
  const Alignment a = approx_align(instance, parse_strategy(o.strategy));
  std::optional<double> ratio;
  if (o.compare_exact) {
    ExactOptions exact;
    exact.node_budget = o.budget;
    const double best = exact_align(instance, exact).alignment.total_weight;
    ratio = a.total_weight > 0.0 ? best / a.total_weight : 1.0;
  }
  out << alignment_to_json(instance, a, ratio);
  return kExitOk;
}

int run_tree(const Options& o, bool chain, std::ostream& out, std::ostream& err) {
  const AlignmentInstance instance = parse_instance(read_text_file(o.instance_path));
  if (chain) {
    const Alignment a = chain_align(instance);
    out << alignment_to_json(instance, a);
    if (o.dump_table) err << chain_table_csv(instance);
    return kExitOk;
  }
  const Alignment a = tree_align(instance);
  out << alignment_to_json(instance, a);
  if (o.dump_table) {
    const AlignmentInstance complete = complete_beta(instance);
    err << TreeAlignmentTable(complete).to_csv();
  }
  return kExitOk;
}

int run_gen(Options o, std::ostream& out) {
  o.spec.kind = parse_graph_kind(o.kind);
  emit(o.out_path, serialize_instance(gen_instance(o.spec)), out);
  return kExitOk;
}

int run_sat_gadget(const Options& o, std::ostream& out) {
  const GadgetInstance gadget = sat_to_alignment(parse_dimacs(read_text_file(o.instance_path)));
  emit(o.out_path, serialize_instance(gadget.instance), out);
  return kExitOk;
}

int run_sat_check(const Options& o, std::ostream& out) {
  const Cnf3Formula formula = parse_dimacs(read_text_file(o.instance_path));
  const GadgetInstance gadget = sat_to_alignment(formula);
  ExactOptions exact;
  exact.node_budget = o.budget;
  const bool reachable =
      decide_alignment(gadget.instance, gadget.target_weight, gadget.target_size, exact);
  const bool satisfiable = sat_brute(formula).has_value();
  bool certificate_ok = true;
  if (reachable) {
    try {
      alignment_to_assignment(gadget, exact_align(gadget.instance, exact).alignment);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotCertificate) throw;
      certificate_ok = false;
    }
  }
  const bool pass = reachable == satisfiable && certificate_ok;
  out << (pass ? "PASS" : "FAIL") << " sat=" << (satisfiable ? "true" : "false")
      << " gadget=" << (reachable ? "true" : "false")
      << " certificate=" << (certificate_ok ? "ok" : "bad") << '\n';
  if (!pass) return kExitRoundTripFailed;
  return reachable ? kExitOk : kExitAnsweredFalse;
}

int run_validate(const Options& o, std::ostream& out) {
  const AlignmentInstance instance = parse_instance(read_text_file(o.instance_path));
  const std::vector<EdgeIndex> chosen = parse_alignment(instance, read_text_file(o.second_path));
  const ValidationReport report = validate_alignment(instance, chosen);
  out << report_to_json(report);
  return report.valid ? kExitOk : kExitAnsweredFalse;
}

int run_bench(const Options& o, std::ostream& out) {
  std::vector<GenSpec> specs;
  const GraphKind kind = parse_graph_kind(o.kind);
  std::uint64_t seed = o.spec.seed;
  for (const std::string& size : split(o.sizes, ',')) {
    const auto [n1, n2] = parse_size(size);
    for (std::size_t k = 0; k < o.count; ++k) {
      GenSpec spec = o.spec;
      spec.kind = kind;
      spec.n1 = n1;
      spec.n2 = n2;
      spec.seed = seed++;
      specs.push_back(spec);
    }
  }
  const std::vector<std::string> solvers = split(o.solvers, ',');
  const BenchReport report = run_benchmark(std::span<const GenSpec>(specs), solvers, o.exact_cutoff);
  emit(o.out_path, report.to_csv(!o.no_timing), out);
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted hierarchical DAG alignment solvers", "dagalign"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "exact maximum-weight alignment");
  solve->add_option("instance", o.instance_path)->required();
  solve->add_option("--decide", o.decide, "decision query: weight >= X with at most Y edges")
      ->type_name("X Y");
  solve->add_option("--budget", o.budget, "search node budget");
  solve->add_flag("--restricted", o.restricted, "ancestry-isomorphic matchings only");

  auto* approx = app.add_subcommand("approx", "approximate alignment");
  approx->add_option("instance", o.instance_path)->required();
  approx->add_option("--strategy", o.strategy)
      ->required()
      ->check(CLI::IsMember({"wis-greedy", "wis-ramsey", "wsp-greedy"}));
  approx->add_flag("--compare-exact", o.compare_exact, "add exact/approx weight ratio");
  approx->add_option("--budget", o.budget, "search node budget for --compare-exact");

  auto* tree = app.add_subcommand("tree", "bottom-up alignment of two rooted trees");
  tree->add_option("instance", o.instance_path)->required();
  tree->add_flag("--dump-table", o.dump_table, "write the DP table as CSV to stderr");

  auto* chain = app.add_subcommand("chain", "order-preserving alignment of two chains");
  chain->add_option("instance", o.instance_path)->required();
  chain->add_flag("--dump-table", o.dump_table, "write the DP table as CSV to stderr");

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--kind", o.kind)->check(CLI::IsMember({"tree", "chain", "dag"}));
  gen->add_option("--n1", o.spec.n1);
  gen->add_option("--n2", o.spec.n2);
  gen->add_option("--edge-prob", o.spec.edge_prob);
  gen->add_option("--density", o.spec.beta_density);
  gen->add_option("--seed", o.spec.seed);
  gen->add_option("-o,--out", o.out_path);

  auto* gadget = app.add_subcommand("sat-gadget", "build the alignment gadget of a 3-CNF formula");
  gadget->add_option("formula", o.instance_path)->required();
  gadget->add_option("-o,--out", o.out_path);

  auto* check = app.add_subcommand("sat-check", "gadget -> decide -> extract -> verify");
  check->add_option("formula", o.instance_path)->required();
  check->add_option("--budget", o.budget, "search node budget");

  auto* validate = app.add_subcommand("validate", "check an alignment against an instance");
  validate->add_option("instance", o.instance_path)->required();
  validate->add_option("alignment", o.second_path)->required();

  auto* bench = app.add_subcommand("bench", "run solvers over generated instances, CSV report");
  bench->add_option("--seed", o.spec.seed);
  bench->add_option("--sizes", o.sizes, "comma separated N or N1xN2");
  bench->add_option("--solvers", o.solvers, "comma separated solver names");
  bench->add_option("--exact-cutoff", o.exact_cutoff, "largest |beta| solved exactly");
  bench->add_option("--out", o.out_path);
  bench->add_option("--kind", o.kind)->check(CLI::IsMember({"tree", "chain", "dag"}));
  bench->add_option("--count", o.count, "instances per size");
  bench->add_option("--edge-prob", o.spec.edge_prob);
  bench->add_option("--density", o.spec.beta_density);
  bench->add_flag("--no-timing", o.no_timing, "leave the millis column empty");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dagalign: " << e.what() << "\n\n" << app.help();
    return kExitInvalidInput;
  }

  try {
    if (solve->parsed()) return run_solve(o, out);
    if (approx->parsed()) return run_approx(o, out);
    if (tree->parsed()) return run_tree(o, false, out, err);
    if (chain->parsed()) return run_tree(o, true, out, err);
    if (gen->parsed()) return run_gen(o, out);
    if (gadget->parsed()) return run_sat_gadget(o, out);
    if (check->parsed()) return run_sat_check(o, out);
    if (validate->parsed()) return run_validate(o, out);
    if (bench->parsed()) return run_bench(o, out);
  } catch (const Error& e) {
    err << "dagalign: " << e.what() << '\n';
    return e.code() == ErrorCode::kBudgetExceeded ? kExitBudgetExceeded : kExitInvalidInput;
  }
  err << app.help();
  return kExitInvalidInput;
}

}  // namespace dagalign
