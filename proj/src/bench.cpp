#include "dagalign/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <tuple>

#include "dagalign/approx.hpp"
#include "dagalign/error.hpp"
#include "dagalign/serialize.hpp"
#include "dagalign/tree_align.hpp"

namespace dagalign {

const std::vector<std::string>& known_solvers() {
  static const std::vector<std::string> names = {
      "exact", "restricted", "wis-greedy", "wis-ramsey", "wsp-greedy", "tree", "chain"};
  return names;
}

Alignment run_solver(const std::string& solver, const AlignmentInstance& instance,
                     const ExactOptions& options) {
  if (solver == "exact") return exact_align(instance, options).alignment;
  if (solver == "restricted") return exact_align_isomorphic(instance, options).alignment;
  if (solver == "tree") return tree_align(instance);
  if (solver == "chain") return chain_align(instance);
  return approx_align(instance, parse_strategy(solver));
}

namespace {

double ratio(double exact, double found) {
  if (found <= 0.0) return exact <= kWeightTolerance ? 1.0 : std::numeric_limits<double>::infinity();
  return exact / found;
}

}  // namespace

BenchReport run_benchmark(std::span<const AlignmentInstance> instances,
                          std::span<const std::string> solvers, std::size_t exact_cutoff) {
  for (const std::string& s : solvers) {
    if (std::find(known_solvers().begin(), known_solvers().end(), s) == known_solvers().end()) {
      throw Error(ErrorCode::kUnknownSolver, "unknown solver '" + s + "'");
    }
  }
  using Clock = std::chrono::steady_clock;
  BenchReport report;
  for (std::size_t id = 0; id < instances.size(); ++id) {
    const AlignmentInstance& instance = instances[id];
    const bool run_exact = instance.size() <= exact_cutoff;
    std::optional<double> exact_weight;
    BenchRow exact_row{id, "exact", std::nullopt, 0.0, std::nullopt, {}};
    if (run_exact) {
      const auto start = Clock::now();
      try {
        exact_weight = exact_align(instance).alignment.total_weight;
        exact_row.weight = exact_weight;
        exact_row.ratio_to_exact = 1.0;
      } catch (const Error& e) {
        exact_row.error = std::string(to_string(e.code()));
      }
      exact_row.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    for (const std::string& solver : solvers) {
      if (solver == "exact") {
        if (run_exact) report.rows.push_back(exact_row);
        continue;
      }
      BenchRow row{id, solver, std::nullopt, 0.0, std::nullopt, {}};
      const auto start = Clock::now();
      try {
        Alignment a = run_solver(solver, instance);
        if (validate_alignment(instance, a.chosen).valid) {
          row.weight = a.total_weight;
          if (exact_weight) row.ratio_to_exact = ratio(*exact_weight, a.total_weight);
        } else {
          row.error = "InvalidAlignment";
        }
      } catch (const Error& e) {
        row.error = std::string(to_string(e.code()));
      }
      row.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      report.rows.push_back(std::move(row));
    }
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const BenchRow& a, const BenchRow& b) {
                     return std::tie(a.instance_id, a.solver) < std::tie(b.instance_id, b.solver);
                   });
  return report;
}

BenchReport run_benchmark(std::span<const GenSpec> specs, std::span<const std::string> solvers,
                          std::size_t exact_cutoff) {
  std::vector<AlignmentInstance> instances;
  instances.reserve(specs.size());
  for (const GenSpec& spec : specs) instances.push_back(gen_instance(spec));
  return run_benchmark(std::span<const AlignmentInstance>(instances), solvers, exact_cutoff);
}

std::string BenchReport::to_csv(bool include_timing) const {
  std::ostringstream os;
  os << "instance_id,solver,weight,millis,ratio_to_exact\n";
  for (const BenchRow& row : rows) {
    os << row.instance_id << ',' << row.solver << ',';
    if (row.weight) os << format_weight(*row.weight);
    os << ',';
    if (include_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", row.millis);
      os << buf;
    }
    os << ',';
    if (row.ratio_to_exact) {
      os << (std::isinf(*row.ratio_to_exact) ? std::string("inf")
                                             : format_weight(*row.ratio_to_exact));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace dagalign
