#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dagalign/alignment.hpp"
#include "dagalign/instance.hpp"

namespace dagalign {

struct Literal {
  std::size_t variable = 0;  // 0-based
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct Cnf3Formula {
  std::size_t variable_count = 0;
  std::vector<Clause> clauses;
};

using Assignment = std::vector<bool>;

// Throws Error{kIndexOutOfRange} for literals naming variables >= variable_count.
void check_formula(const Cnf3Formula& formula);
bool satisfies(const Cnf3Formula& formula, const Assignment& assignment);

// DIMACS CNF where every clause has exactly three literals. Throws
// Error{kParseError} otherwise.
Cnf3Formula parse_dimacs(std::string_view text);
std::string to_dimacs(const Cnf3Formula& formula);

enum class GadgetTag { kY, kZ, kClause };

// Tree-2 side of the gadget: y_j/z_j copies indexed by clause, and the two
// vertices (c_i, 1), (c_i, 2) per clause.
struct GadgetVertex2 {
  GadgetTag tag = GadgetTag::kY;
  std::size_t variable = 0;  // for kY / kZ
  std::size_t clause = 0;
  std::size_t slot = 0;      // 1 or 2 for kClause
};

struct GadgetVertex1 {
  Literal literal;
  std::size_t clause = 0;
  std::size_t position = 0;  // 0..2 inside the clause
};

// Alignment instance whose optimum reaches weight 3m with at most 3m edges
// exactly when the formula is satisfiable.
//   |V1| = 3m, |V2| = 2nm + 2m, |β| = 9m, every weight 1.
struct GadgetInstance {
  Cnf3Formula formula;
  AlignmentInstance instance;
  std::vector<GadgetVertex1> v1_labels;
  std::vector<GadgetVertex2> v2_labels;
  double target_weight = 0.0;
  std::size_t target_size = 0;

  VertexId occurrence(std::size_t clause, std::size_t position) const {
    return static_cast<VertexId>(3 * clause + position);
  }
  VertexId y(std::size_t variable, std::size_t clause) const {
    return static_cast<VertexId>(2 * (variable * formula.clauses.size() + clause));
  }
  VertexId z(std::size_t variable, std::size_t clause) const { return y(variable, clause) + 1; }
  VertexId clause_vertex(std::size_t clause, std::size_t slot) const {
    return static_cast<VertexId>(2 * formula.variable_count * formula.clauses.size() +
                                 2 * clause + (slot - 1));
  }
};

// Throws Error{kEmptyFormula} when the formula has no clauses.
GadgetInstance sat_to_alignment(const Cnf3Formula& formula);

// x_j is true if some positive occurrence of x_j is matched to its y copy,
// false if some negative occurrence is matched to its z copy, true otherwise.
// Throws Error{kNotCertificate} unless the alignment is valid, reaches the
// target weight and the extracted assignment satisfies the formula.
Assignment alignment_to_assignment(const GadgetInstance& gadget, const Alignment& alignment);

// Exhaustive search in ascending binary order (bit j of the counter is x_j).
// Throws Error{kTooManyVariables} above 24 variables.
std::optional<Assignment> sat_brute(const Cnf3Formula& formula);

}  // namespace dagalign
