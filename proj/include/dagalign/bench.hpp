#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dagalign/alignment.hpp"
#include "dagalign/exact.hpp"
#include "dagalign/generator.hpp"
#include "dagalign/instance.hpp"

namespace dagalign {

// Names accepted by run_benchmark and the CLI:
//   exact, restricted, wis-greedy, wis-ramsey, wsp-greedy, tree, chain
const std::vector<std::string>& known_solvers();

// Runs one named solver. Throws Error{kUnknownSolver} for other names and
// propagates solver errors (NotATree, BudgetExceeded, ...).
Alignment run_solver(const std::string& solver, const AlignmentInstance& instance,
                     const ExactOptions& options = {});

struct BenchRow {
  std::size_t instance_id = 0;
  std::string solver;
  std::optional<double> weight;  // empty when the solver failed
  double millis = 0.0;
  std::optional<double> ratio_to_exact;  // exact weight / solver weight
  std::string error;                     // error code name, empty on success
};

struct BenchReport {
  std::vector<BenchRow> rows;  // sorted by (instance_id, solver)

  // Columns instance_id,solver,weight,millis,ratio_to_exact. With
  // include_timing = false the millis column is left empty so reports can be
  // compared byte for byte.
  std::string to_csv(bool include_timing = true) const;
};

// Every solver runs on every instance; exact_align runs only when
// |β| <= exact_cutoff and then supplies ratio_to_exact for every row of that
// instance. Rows for the exact solver itself appear only when it is listed.
// Solver failures are recorded on their row and do not stop the run.
BenchReport run_benchmark(std::span<const AlignmentInstance> instances,
                          std::span<const std::string> solvers, std::size_t exact_cutoff);
BenchReport run_benchmark(std::span<const GenSpec> specs, std::span<const std::string> solvers,
                          std::size_t exact_cutoff);

}  // namespace dagalign
