#include "dagalign/error.hpp"

namespace dagalign {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCyclicGraph: return "CyclicGraph";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSameEdge: return "SameEdge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kWeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::kDuplicatePair: return "DuplicatePair";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kNotAChain: return "NotAChain";
    case ErrorCode::kBetaIncomplete: return "BetaIncomplete";
    case ErrorCode::kEmptyFormula: return "EmptyFormula";
    case ErrorCode::kNotCertificate: return "NotCertificate";
    case ErrorCode::kTooManyVariables: return "TooManyVariables";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kUnknownSolver: return "UnknownSolver";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace dagalign
