#include "dagalign/reductions.hpp"

#include <sstream>
#include <string>

#include "dagalign/error.hpp"

namespace dagalign {

void check_formula(const Cnf3Formula& formula) {
  for (const Clause& clause : formula.clauses) {
    for (const Literal& lit : clause) {
      if (lit.variable >= formula.variable_count) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "literal names variable " + std::to_string(lit.variable + 1) + " of " +
                        std::to_string(formula.variable_count));
      }
    }
  }
}

bool satisfies(const Cnf3Formula& formula, const Assignment& assignment) {
  for (const Clause& clause : formula.clauses) {
    bool any = false;
    for (const Literal& lit : clause) any = any || (assignment.at(lit.variable) != lit.negated);
    if (!any) return false;
  }
  return true;
}

Cnf3Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Cnf3Formula formula;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<Literal> pending;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      if (!(ls >> kind >> formula.variable_count >> declared_clauses) || kind != "cnf") {
        throw Error(ErrorCode::kParseError, "bad problem line: " + line);
      }
      header = true;
      continue;
    }
    if (!header) throw Error(ErrorCode::kParseError, "clause before 'p cnf' line");
    std::istringstream tokens(line);
    long long value = 0;
    while (tokens >> value) {
      if (value == 0) {
        if (pending.size() != 3) {
          throw Error(ErrorCode::kParseError,
                      "clause with " + std::to_string(pending.size()) + " literals");
        }
        formula.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(value < 0 ? -value : value);
      if (var > formula.variable_count) {
        throw Error(ErrorCode::kParseError, "literal " + std::to_string(value) + " out of range");
      }
      pending.push_back({var - 1, value < 0});
    }
    if (!tokens.eof()) throw Error(ErrorCode::kParseError, "bad clause line: " + line);
  }
  if (!header) throw Error(ErrorCode::kParseError, "missing 'p cnf' line");
  if (!pending.empty()) throw Error(ErrorCode::kParseError, "unterminated clause");
  if (formula.clauses.size() != declared_clauses) {
    throw Error(ErrorCode::kParseError, "header declares " + std::to_string(declared_clauses) +
                                            " clauses, found " +
                                            std::to_string(formula.clauses.size()));
  }
  return formula;
}

std::string to_dimacs(const Cnf3Formula& formula) {
  std::ostringstream os;
  os << "p cnf " << formula.variable_count << ' ' << formula.clauses.size() << '\n';
  for (const Clause& clause : formula.clauses) {
    for (const Literal& lit : clause) {
      os << (lit.negated ? "-" : "") << lit.variable + 1 << ' ';
    }
    os << "0\n";
  }
  return os.str();
}

GadgetInstance sat_to_alignment(const Cnf3Formula& formula) {
  if (formula.clauses.empty()) throw Error(ErrorCode::kEmptyFormula, "formula has no clauses");
  check_formula(formula);
  GadgetInstance gadget;
  gadget.formula = formula;
  const std::size_t n = formula.variable_count;
  const std::size_t m = formula.clauses.size();

  std::vector<std::string> labels1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < 3; ++p) {
      const Literal& lit = formula.clauses[i][p];
      gadget.v1_labels.push_back({lit, i, p});
      labels1.push_back((lit.negated ? "~x" : "x") + std::to_string(lit.variable + 1) + "@c" +
                        std::to_string(i + 1) + "." + std::to_string(p + 1));
    }
  }
  // Every positive occurrence of x_j points at every negative occurrence of x_j.
  std::vector<DagEdge> edges1;
  for (VertexId a = 0; a < 3 * m; ++a) {
    for (VertexId b = 0; b < 3 * m; ++b) {
      const Literal& la = gadget.v1_labels[a].literal;
      const Literal& lb = gadget.v1_labels[b].literal;
      if (la.variable == lb.variable && !la.negated && lb.negated) edges1.push_back({a, b});
    }
  }

  gadget.v2_labels.resize(2 * n * m + 2 * m);
  std::vector<std::string> labels2(gadget.v2_labels.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      gadget.v2_labels[gadget.y(j, i)] = {GadgetTag::kY, j, i, 0};
      gadget.v2_labels[gadget.z(j, i)] = {GadgetTag::kZ, j, i, 0};
      labels2[gadget.y(j, i)] = "y" + std::to_string(j + 1) + "@" + std::to_string(i + 1);
      labels2[gadget.z(j, i)] = "z" + std::to_string(j + 1) + "@" + std::to_string(i + 1);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t s = 1; s <= 2; ++s) {
      gadget.v2_labels[gadget.clause_vertex(i, s)] = {GadgetTag::kClause, 0, i, s};
      labels2[gadget.clause_vertex(i, s)] = "c" + std::to_string(i + 1) + "#" + std::to_string(s);
    }
  }
  // (z_j, i) -> (y_j, t) and (y_j, t) -> (c_i, 1), (c_i, 2) for all j, i, t.
  std::vector<DagEdge> edges2;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t t = 0; t < m; ++t) {
        edges2.push_back({gadget.z(j, i), gadget.y(j, t)});
        edges2.push_back({gadget.y(j, t), gadget.clause_vertex(i, 1)});
        edges2.push_back({gadget.y(j, t), gadget.clause_vertex(i, 2)});
      }
    }
  }

  std::vector<CandidateEdge> beta;
  beta.reserve(9 * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < 3; ++p) {
      const Literal& lit = formula.clauses[i][p];
      const VertexId occ = gadget.occurrence(i, p);
      beta.push_back({occ, lit.negated ? gadget.z(lit.variable, i) : gadget.y(lit.variable, i), 1.0});
      beta.push_back({occ, gadget.clause_vertex(i, 1), 1.0});
      beta.push_back({occ, gadget.clause_vertex(i, 2), 1.0});
    }
  }

  gadget.instance = AlignmentInstance(DagGraph(3 * m, std::move(edges1)),
                                      DagGraph(gadget.v2_labels.size(), std::move(edges2)),
                                      std::move(beta), std::move(labels1), std::move(labels2));
  gadget.target_weight = static_cast<double>(3 * m);
  gadget.target_size = 3 * m;
  return gadget;
}

Assignment alignment_to_assignment(const GadgetInstance& gadget, const Alignment& alignment) {
  const ValidationReport report = validate_alignment(gadget.instance, alignment.chosen);
  if (!report.valid) throw Error(ErrorCode::kNotCertificate, "alignment violates the constraint");
  if (report.recomputed_weight < gadget.target_weight - kWeightTolerance) {
    throw Error(ErrorCode::kNotCertificate,
                "weight " + std::to_string(report.recomputed_weight) + " below target " +
                    std::to_string(gadget.target_weight));
  }
  Assignment assignment(gadget.formula.variable_count, true);
  for (EdgeIndex idx : alignment.chosen) {
    const CandidateEdge& e = gadget.instance.edge(idx);
    const GadgetVertex1& occ = gadget.v1_labels[e.left];
    const GadgetVertex2& image = gadget.v2_labels[e.right];
    if (image.tag == GadgetTag::kY && !occ.literal.negated) {
      assignment[occ.literal.variable] = true;
    } else if (image.tag == GadgetTag::kZ && occ.literal.negated) {
      assignment[occ.literal.variable] = false;
    }
  }
  if (!satisfies(gadget.formula, assignment)) {
    throw Error(ErrorCode::kNotCertificate, "extracted assignment does not satisfy the formula");
  }
  return assignment;
}

std::optional<Assignment> sat_brute(const Cnf3Formula& formula) {
  if (formula.variable_count > 24) {
    throw Error(ErrorCode::kTooManyVariables, std::to_string(formula.variable_count));
  }
  check_formula(formula);
  const std::uint64_t total = std::uint64_t{1} << formula.variable_count;
  Assignment assignment(formula.variable_count);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::size_t j = 0; j < formula.variable_count; ++j) assignment[j] = (bits >> j) & 1u;
    if (satisfies(formula, assignment)) return assignment;
  }
  return std::nullopt;
}

}  // namespace dagalign
