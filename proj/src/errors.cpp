#include "cvinv/errors.hpp"

namespace cvinv {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyConfiguration: return "EmptyConfiguration";
    case ErrorKind::NonpositiveMultiplicity: return "NonpositiveMultiplicity";
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::ConfigurationTooLarge: return "ConfigurationTooLarge";
    case ErrorKind::SingleNode: return "SingleNode";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::SingularAtCenter: return "SingularAtCenter";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NumericallySingular: return "NumericallySingular";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cvinv
