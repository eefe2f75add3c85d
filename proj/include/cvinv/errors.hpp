#pragma once

#include <stdexcept>
#include <string>

namespace cvinv {

enum class ErrorKind {
  LengthMismatch,
  EmptyConfiguration,
  NonpositiveMultiplicity,
  DuplicateNode,
  ConfigurationTooLarge,
  SingleNode,
  SamplingExhausted,
  SingularAtCenter,
  HypothesisViolated,
  NumericallySingular,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// that callers (notably the CLI) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cvinv
