#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cvinv/bounds.hpp"
#include "cvinv/node_config.hpp"

namespace cvinv {

enum class OutputFormat { Json, Csv };

OutputFormat parse_output_format(std::string_view text);

struct SweepSpec {
  IntRange n_range{2, 4};
  IntRange multiplicity_range{1, 3};
  double delta_min = 0.5;
  int trials = 1;
  std::uint64_t seed = 0;
  OutputFormat output_format = OutputFormat::Json;
  // optional fields
  int max_total_multiplicity = kMaxTotalMultiplicity;
  double tolerance = 1e-8;
  std::size_t rejection_budget = 100000;
};

/// Fields: n_range, multiplicity_range, delta_min, trials, seed,
/// output_format, and optionally max_total_multiplicity, tolerance,
/// rejection_budget. Unknown fields are rejected.
SweepSpec parse_sweep_spec_json(std::string_view text);

enum class TrialStatus { Ok, Skipped, Singular };

const char* to_string(TrialStatus status) noexcept;
TrialStatus parse_trial_status(std::string_view text);

struct SweepRecord {
  int trial = 0;
  TrialStatus status = TrialStatus::Ok;
  std::uint64_t seed = 0;
  int n = 0;
  int n_total = 0;
  double delta = 0.0;
  std::vector<Complex> nodes;
  std::vector<int> multiplicities;
  double residual_vu = 0.0;
  double max_entry_abs_diff = 0.0;
  std::vector<BoundRecord> bounds;
  /// all bounds satisfied and residual_vu within tolerance
  bool pass = false;

  bool operator==(const SweepRecord&) const = default;
};

struct SweepSummary {
  int trials = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

/// Seed used for one trial; a pure function of (spec seed, trial).
std::uint64_t trial_seed(std::uint64_t seed, int trial);

SweepRecord run_trial(const SweepSpec& spec, int trial);

/// Runs every trial, possibly on several threads. Records are returned in
/// trial order and do not depend on the thread count.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned threads = 0);

SweepSummary summarize(const std::vector<SweepRecord>& records);

/// One CSV line per (trial, j, k); skipped or singular trials take a single
/// line with empty per-row fields. Ends with a "# summary" comment line.
std::string to_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_sweep_csv(std::string_view text);

/// One JSON object per trial per line, followed by a {"summary": ...} line.
std::string to_json_lines(const std::vector<SweepRecord>& records);

}  // namespace cvinv
