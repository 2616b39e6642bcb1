#ifndef GOODCOLOUR_ERRORS_HPP
#define GOODCOLOUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace goodcolour {

enum class ErrorCode {
  EdgeNotSubset,
  EdgeTooSmall,
  DuplicateVertexId,
  UnknownVertex,
  VertexNotInEdge,
  EdgeIndexOutOfRange,
  NotDeterminable,
  InvalidFamily,
  ExplicitEdgeTooLarge,
  NonPositiveBeta,
  ParameterOutOfRange,
  NotAGraph,
  PartialColouring,
  BudgetExceeded,
  KTooSmall,
  InvalidPartition,
  CliqueEnumerationBudget,
  NotKUniform,
  TautologicalClause,
  ListSizeMismatch,
  ListMissing,
  ParseError,
  HeaderMismatch,
  UnknownSubcommand,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception; `code()` identifies the contract violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace goodcolour

#endif  // GOODCOLOUR_ERRORS_HPP
