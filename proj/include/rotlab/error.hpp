#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rotlab {

enum class ErrorCode {
  BadRational,
  DomainError,
  NonpositiveSlope,
  NonMonotone,
  DiscontinuousCircleMap,
  Discontinuous,
  NotBijective,
  EndpointNotFixed,
  PreconditionFailed,
  CommutationFailed,
  BudgetExceeded,
  InternalAssertion,
  BadInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised for conditions that would indicate a bug in the engine rather
/// than bad input.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InternalAssertion, what);
}

}  // namespace rotlab
