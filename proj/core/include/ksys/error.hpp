#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ksys {

enum class ErrorCode {
  // graph-core
  NotRegular,
  Disconnected,
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  FingerprintMismatch,
  KOutOfRange,
  EmptySubset,
  NotAcyclic,
  Overflow,
  // ksystems
  InvalidSet,
  DuplicateSet,
  SetTooSmall,
  // certificates
  KMismatch,
  DimensionTooSmall,
  InconsistentTransport,
  NotCycleSystem,
  // oracle
  InvalidParams,
  NotSimple,
  NoCoordinates,
  DegenerateWeights,
  // search
  BudgetExceeded,
  CandidateCapExceeded,
  // io
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// that callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ksys
