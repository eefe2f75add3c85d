#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "cvinv/sweep.hpp"

namespace cvinv::cli {

namespace exit_code {
inline constexpr int kPass = 0;
inline constexpr int kFailure = 1;
inline constexpr int kInputError = 2;
inline constexpr int kHypothesisViolated = 3;
inline constexpr int kNumericallySingular = 4;
}  // namespace exit_code

inline constexpr double kDefaultTolerance = 1e-8;

struct GlobalOptions {
  std::optional<OutputFormat> format;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
};

int cmd_build(const std::filesystem::path& config_file, const GlobalOptions& opts,
              std::ostream& out, std::ostream& err);
int cmd_invert(const std::filesystem::path& config_file, bool norms, const GlobalOptions& opts,
               std::ostream& out, std::ostream& err);
int cmd_bound(const std::filesystem::path& config_file, const GlobalOptions& opts,
              std::ostream& out, std::ostream& err);
int cmd_verify(const std::filesystem::path& config_file, const GlobalOptions& opts,
               std::ostream& out, std::ostream& err);
int cmd_sweep(const std::filesystem::path& spec_file, const GlobalOptions& opts,
              std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to one of the commands above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvinv::cli
