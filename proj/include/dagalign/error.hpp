#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dagalign {

enum class ErrorCode {
  kCyclicGraph,
  kIndexOutOfRange,
  kSameEdge,
  kParseError,
  kWeightOutOfRange,
  kDuplicatePair,
  kBudgetExceeded,
  kNegativeWeight,
  kNotATree,
  kNotAChain,
  kBetaIncomplete,
  kEmptyFormula,
  kNotCertificate,
  kTooManyVariables,
  kInvalidSpec,
  kUnknownSolver,
};

/// Stable identifier used in CLI diagnostics, e.g. "CyclicGraph".
std::string_view to_string(ErrorCode code);

/// Every recoverable failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dagalign
