#include "cvinv/cli.hpp"

#include <functional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "cvinv/bounds.hpp"
#include "cvinv/confluent_vandermonde.hpp"
#include "cvinv/errors.hpp"
#include "cvinv/oracle.hpp"
#include "cvinv/report_io.hpp"

namespace cvinv::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::HypothesisViolated:
    case ErrorKind::SingleNode:
      return exit_code::kHypothesisViolated;
    case ErrorKind::NumericallySingular:
    case ErrorKind::SingularAtCenter:
      return exit_code::kNumericallySingular;
    default:
      return exit_code::kInputError;
  }
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  }
}

OutputFormat format_of(const GlobalOptions& opts) { return opts.format.value_or(OutputFormat::Json); }

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string joined_csv(std::span<const Complex> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ';';
    out += format_complex_csv(values[i]);
  }
  return out;
}

}  // namespace

int cmd_build(const std::filesystem::path& config_file, const GlobalOptions& opts,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ConfluentMatrix v = build_matrix(load_config_file(config_file));
    const std::size_t n = v.size();
    if (format_of(opts) == OutputFormat::Csv) {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out << (c ? "," : "") << format_complex_csv(v(r, c));
        out << '\n';
      }
      return exit_code::kPass;
    }
    out << '[';
    for (std::size_t r = 0; r < n; ++r) {
      out << (r ? "," : "") << '[';
      for (std::size_t c = 0; c < n; ++c) out << (c ? "," : "") << json_complex(v(r, c));
      out << ']';
    }
    out << "]\n";
    return exit_code::kPass;
  });
}

int cmd_invert(const std::filesystem::path& config_file, bool norms, const GlobalOptions& opts,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const NodeConfiguration config = load_config_file(config_file);
    const InverseRows rows = inverse_rows(config);
    const bool csv = format_of(opts) == OutputFormat::Csv;
    if (csv) {
      out << "j,k,flat_index,coefficients" << (norms ? ",l1_norm" : "") << '\n';
    } else {
      out << "{\"N\":" << config.total_multiplicity() << ",\"rows\":[\n";
    }
    for (std::size_t flat = 0; flat < rows.size(); ++flat) {
      const BlockIndex at = rows.block_of(flat);
      const auto coeffs = rows.row(flat);
      if (csv) {
        out << at.node + 1 << ',' << at.inner << ',' << flat + 1 << ',' << joined_csv(coeffs);
        if (norms) out << ',' << format_real(rows.l1_norm(flat));
        out << '\n';
        continue;
      }
      out << "{\"j\":" << at.node + 1 << ",\"k\":" << at.inner << ",\"flat_index\":" << flat + 1
          << ",\"coefficients\":[";
      for (std::size_t c = 0; c < coeffs.size(); ++c) out << (c ? "," : "") << json_complex(coeffs[c]);
      out << ']';
      if (norms) out << ",\"l1_norm\":" << json_real(rows.l1_norm(flat));
      out << '}' << (flat + 1 < rows.size() ? "," : "") << '\n';
    }
    if (!csv) out << "]}\n";
    return exit_code::kPass;
  });
}

int cmd_bound(const std::filesystem::path& config_file, const GlobalOptions& opts,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const NodeConfiguration config = load_config_file(config_file);
    const BoundReport report = verify_bounds(config, inverse_rows(config));
    if (format_of(opts) == OutputFormat::Csv) {
      out << "j,k,empirical_norm,bound,ratio,satisfied\n";
      for (const auto& r : report.records) {
        out << r.node + 1 << ',' << r.k << ',' << format_real(r.empirical_norm) << ','
            << format_real(r.bound) << ',' << format_real(r.ratio) << ',' << bool_text(r.satisfied)
            << '\n';
      }
    } else {
      out << "{\"N\":" << report.n_total << ",\"delta\":" << json_real(report.delta)
          << ",\"multiplicities\":[";
      for (std::size_t i = 0; i < report.multiplicities.size(); ++i) {
        out << (i ? "," : "") << report.multiplicities[i];
      }
      out << "],\"records\":[\n";
      for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& r = report.records[i];
        out << "{\"j\":" << r.node + 1 << ",\"k\":" << r.k
            << ",\"empirical_norm\":" << json_real(r.empirical_norm)
            << ",\"bound\":" << json_real(r.bound) << ",\"ratio\":" << json_real(r.ratio)
            << ",\"satisfied\":" << bool_text(r.satisfied) << '}'
            << (i + 1 < report.records.size() ? "," : "") << '\n';
      }
      out << "],\"all_satisfied\":" << bool_text(report.all_satisfied()) << "}\n";
    }
    return report.all_satisfied() ? exit_code::kPass : exit_code::kFailure;
  });
}

int cmd_verify(const std::filesystem::path& config_file, const GlobalOptions& opts,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const double tolerance = opts.tolerance.value_or(kDefaultTolerance);
    const NodeConfiguration config = load_config_file(config_file);
    const ComparisonReport cmp = compare(inverse_rows(config), config);
    const bool pass = cmp.max_entry_abs_diff <= tolerance;
    if (format_of(opts) == OutputFormat::Csv) {
      out << "max_entry_abs_diff,residual_vu,residual_uv,tolerance,pass\n"
          << format_real(cmp.max_entry_abs_diff) << ',' << format_real(cmp.residual_vu) << ','
          << format_real(cmp.residual_uv) << ',' << format_real(tolerance) << ',' << bool_text(pass)
          << '\n';
    } else {
      out << "{\"max_entry_abs_diff\":" << json_real(cmp.max_entry_abs_diff)
          << ",\"residual_vu\":" << json_real(cmp.residual_vu)
          << ",\"residual_uv\":" << json_real(cmp.residual_uv) << ",\"row_l1_diff\":[";
      for (std::size_t i = 0; i < cmp.row_l1_diff.size(); ++i) {
        out << (i ? "," : "") << json_real(cmp.row_l1_diff[i]);
      }
      out << "],\"tolerance\":" << json_real(tolerance) << ",\"pass\":" << bool_text(pass) << "}\n";
    }
    if (!pass) {
      err << "verify: max entry difference " << format_real(cmp.max_entry_abs_diff)
          << " exceeds tolerance " << format_real(tolerance) << '\n';
    }
    return pass ? exit_code::kPass : exit_code::kFailure;
  });
}

int cmd_sweep(const std::filesystem::path& spec_file, const GlobalOptions& opts,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SweepSpec spec = parse_sweep_spec_json(read_text_file(spec_file));
    if (opts.format) spec.output_format = *opts.format;
    if (opts.tolerance) spec.tolerance = *opts.tolerance;
    if (opts.seed) spec.seed = *opts.seed;

    const auto records = run_sweep(spec);
    out << (spec.output_format == OutputFormat::Csv ? to_csv(records) : to_json_lines(records));

    const SweepSummary summary = summarize(records);
    if (summary.skipped == summary.trials) {
      err << "warning: all " << summary.trials
          << " trials skipped; node sampling is infeasible for this delta_min\n";
    } else if (summary.skipped > 0) {
      err << "warning: " << summary.skipped << " of " << summary.trials << " trials skipped\n";
    }
    return summary.failed == 0 ? exit_code::kPass : exit_code::kFailure;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Confluent Vandermonde matrices: structured inverses and row-norm bounds", "cvinv"};
  app.require_subcommand(1);

  std::string format;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  auto* format_opt = app.add_option("--format", format, "Output format")
                         ->check(CLI::IsMember({"json", "csv"}));
  auto* tolerance_opt = app.add_option("--tolerance", tolerance, "Oracle agreement tolerance")
                            ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Override the sweep seed");

  std::string path;
  bool norms = false;
  auto* build = app.add_subcommand("build", "Print the confluent Vandermonde matrix");
  build->add_option("config", path, "Configuration JSON file")->required();
  auto* invert = app.add_subcommand("invert", "Print the inverse rows u_{j,k}");
  invert->add_option("config", path, "Configuration JSON file")->required();
  invert->add_flag("--norms", norms, "Include the l1 norm of every row");
  auto* bound = app.add_subcommand("bound", "Compare row norms with the closed-form bound");
  bound->add_option("config", path, "Configuration JSON file")->required();
  auto* verify = app.add_subcommand("verify", "Compare the structured inverse with dense LU");
  verify->add_option("config", path, "Configuration JSON file")->required();
  auto* sweep = app.add_subcommand("sweep", "Run a seeded random verification sweep");
  sweep->add_option("spec", path, "Sweep specification JSON file")->required();
  for (auto* sub : {build, invert, bound, verify, sweep}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? exit_code::kPass : exit_code::kInputError;
  }

  GlobalOptions opts;
  if (*format_opt) opts.format = parse_output_format(format);
  if (*tolerance_opt) opts.tolerance = tolerance;
  if (*seed_opt) opts.seed = seed;

  if (*build) return cmd_build(path, opts, out, err);
  if (*invert) return cmd_invert(path, norms, opts, out, err);
  if (*bound) return cmd_bound(path, opts, out, err);
  if (*verify) return cmd_verify(path, opts, out, err);
  return cmd_sweep(path, opts, out, err);
}

}  // namespace cvinv::cli
