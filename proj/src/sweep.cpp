#include "cvinv/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cvinv/confluent_vandermonde.hpp"
#include "cvinv/errors.hpp"
#include "cvinv/oracle.hpp"
#include "cvinv/report_io.hpp"

namespace cvinv {

namespace {

[[noreturn]] void spec_error(const std::string& field, const std::string& message) {
  throw Error(ErrorKind::InvalidArgument, field + ": " + message);
}

IntRange parse_range(const nlohmann::json& doc, const char* field) {
  if (!doc.contains(field)) spec_error(field, "missing");
  const auto& v = doc[field];
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
    spec_error(field, "expected [lo, hi] integers");
  }
  IntRange r{v[0].get<int>(), v[1].get<int>()};
  if (r.lo > r.hi) spec_error(field, "lo exceeds hi");
  return r;
}

template <typename T>
T parse_int(std::string_view text, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw Error(ErrorKind::InvalidArgument, "malformed boolean '" + std::string(text) + "'");
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::string_view kCsvHeader =
    "trial,status,seed,n,N,delta,nodes,multiplicities,residual_vu,max_entry_abs_diff,pass,"
    "j,k,flat_index,empirical_norm,bound,ratio,satisfied";
constexpr std::size_t kCsvColumns = 18;

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::InvalidArgument,
              "output_format: expected json or csv, got '" + std::string(text) + "'");
}

SweepSpec parse_sweep_spec_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    spec_error("sweep spec", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) spec_error("sweep spec", "expected a JSON object");
  static const char* const known[] = {"n_range",        "multiplicity_range", "delta_min",
                                      "trials",         "seed",               "output_format",
                                      "max_total_multiplicity", "tolerance", "rejection_budget"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      spec_error(key, "unknown field");
    }
  }

  SweepSpec spec;
  spec.n_range = parse_range(doc, "n_range");
  if (spec.n_range.lo < 2) spec_error("n_range", "needs at least two nodes");
  spec.multiplicity_range = parse_range(doc, "multiplicity_range");
  if (spec.multiplicity_range.lo < 1) spec_error("multiplicity_range", "must be positive");

  if (!doc.contains("delta_min") || !doc["delta_min"].is_number()) {
    spec_error("delta_min", "expected a positive number");
  }
  spec.delta_min = doc["delta_min"].get<double>();
  if (!(spec.delta_min > 0.0)) spec_error("delta_min", "must be positive");

  if (!doc.contains("trials") || !doc["trials"].is_number_integer()) {
    spec_error("trials", "expected a positive integer");
  }
  spec.trials = doc["trials"].get<int>();
  if (spec.trials < 1) spec_error("trials", "must be at least 1");

  if (!doc.contains("seed") || !doc["seed"].is_number_integer()) spec_error("seed", "expected an integer");
  spec.seed = doc["seed"].is_number_unsigned() ? doc["seed"].get<std::uint64_t>()
                                               : static_cast<std::uint64_t>(doc["seed"].get<std::int64_t>());

  if (doc.contains("output_format")) {
    if (!doc["output_format"].is_string()) spec_error("output_format", "expected json or csv");
    spec.output_format = parse_output_format(doc["output_format"].get<std::string>());
  }
  if (doc.contains("max_total_multiplicity")) {
    if (!doc["max_total_multiplicity"].is_number_integer()) {
      spec_error("max_total_multiplicity", "expected an integer");
    }
    spec.max_total_multiplicity = doc["max_total_multiplicity"].get<int>();
    if (spec.max_total_multiplicity < spec.n_range.hi * spec.multiplicity_range.lo ||
        spec.max_total_multiplicity > kMaxTotalMultiplicity) {
      spec_error("max_total_multiplicity", "out of range");
    }
  }
  if (doc.contains("tolerance")) {
    if (!doc["tolerance"].is_number() || !(doc["tolerance"].get<double>() > 0.0)) {
      spec_error("tolerance", "expected a positive number");
    }
    spec.tolerance = doc["tolerance"].get<double>();
  }
  if (doc.contains("rejection_budget")) {
    if (!doc["rejection_budget"].is_number_unsigned()) {
      spec_error("rejection_budget", "expected a positive integer");
    }
    spec.rejection_budget = doc["rejection_budget"].get<std::size_t>();
  }
  return spec;
}

const char* to_string(TrialStatus status) noexcept {
  switch (status) {
    case TrialStatus::Ok: return "ok";
    case TrialStatus::Skipped: return "skipped";
    case TrialStatus::Singular: return "singular";
  }
  return "unknown";
}

TrialStatus parse_trial_status(std::string_view text) {
  if (text == "ok") return TrialStatus::Ok;
  if (text == "skipped") return TrialStatus::Skipped;
  if (text == "singular") return TrialStatus::Singular;
  throw Error(ErrorKind::InvalidArgument, "unknown trial status '" + std::string(text) + "'");
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
}

SweepRecord run_trial(const SweepSpec& spec, int trial) {
  SweepRecord rec;
  rec.trial = trial;
  rec.seed = trial_seed(spec.seed, trial);

  std::mt19937_64 rng(rec.seed);
  const auto n_span = static_cast<std::uint64_t>(spec.n_range.hi - spec.n_range.lo) + 1;
  rec.n = spec.n_range.lo + static_cast<int>(rng() % n_span);

  RandomConfigOptions options;
  options.node_count = rec.n;
  options.multiplicity = spec.multiplicity_range;
  options.delta_min = spec.delta_min;
  options.seed = rng();
  options.max_total_multiplicity = spec.max_total_multiplicity;
  options.rejection_budget = spec.rejection_budget;

  std::optional<NodeConfiguration> config;
  try {
    config = random_configuration(options);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SamplingExhausted) throw;
    rec.status = TrialStatus::Skipped;
    return rec;
  }

  rec.n_total = config->total_multiplicity();
  rec.nodes.assign(config->nodes().begin(), config->nodes().end());
  rec.multiplicities.assign(config->multiplicities().begin(), config->multiplicities().end());
  rec.delta = separation(*config).delta;

  const InverseRows rows = inverse_rows(*config);
  try {
    const ComparisonReport cmp = compare(rows, *config);
    rec.residual_vu = cmp.residual_vu;
    rec.max_entry_abs_diff = cmp.max_entry_abs_diff;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NumericallySingular) throw;
    rec.status = TrialStatus::Singular;
  }
  const BoundReport report = verify_bounds(*config, rows);
  rec.bounds = report.records;
  rec.pass = rec.status == TrialStatus::Ok && report.all_satisfied() &&
             rec.residual_vu <= spec.tolerance;
  return rec;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned threads) {
  std::vector<SweepRecord> records(static_cast<std::size_t>(spec.trials));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(spec.trials));

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const int trial = next.fetch_add(1);
      if (trial >= spec.trials || failed.load()) return;
      try {
        records[static_cast<std::size_t>(trial)] = run_trial(spec, trial);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

SweepSummary summarize(const std::vector<SweepRecord>& records) {
  SweepSummary s;
  s.trials = static_cast<int>(records.size());
  for (const auto& r : records) {
    if (r.status == TrialStatus::Skipped) {
      ++s.skipped;
    } else if (r.pass) {
      ++s.passed;
    } else {
      ++s.failed;
    }
  }
  return s;
}

namespace {

std::string summary_fields(const SweepSummary& s, char sep, bool quoted) {
  auto key = [&](const char* k) { return quoted ? '"' + std::string(k) + "\":" : std::string(k) + '='; };
  std::string out;
  out += key("trials") + std::to_string(s.trials) + sep;
  out += key("passed") + std::to_string(s.passed) + sep;
  out += key("failed") + std::to_string(s.failed) + sep;
  out += key("skipped") + std::to_string(s.skipped);
  return out;
}

}  // namespace

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    std::string prefix = std::to_string(r.trial) + ',' + to_string(r.status) + ',' +
                         std::to_string(r.seed) + ',' + std::to_string(r.n) + ',';
    if (r.status == TrialStatus::Skipped) {
      out << prefix << ",,,,,,,,,,,,,\n";
      continue;
    }
    std::string nodes;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      if (i) nodes += ';';
      nodes += format_complex_csv(r.nodes[i]);
    }
    std::string mult;
    for (std::size_t i = 0; i < r.multiplicities.size(); ++i) {
      if (i) mult += ';';
      mult += std::to_string(r.multiplicities[i]);
    }
    prefix += std::to_string(r.n_total) + ',' + format_real(r.delta) + ',' + nodes + ',' + mult +
              ',' + format_real(r.residual_vu) + ',' + format_real(r.max_entry_abs_diff) + ',' +
              bool_text(r.pass) + ',';
    if (r.bounds.empty()) {
      out << prefix << ",,,,,,\n";
      continue;
    }
    int offset = 0;
    std::size_t last_node = 0;
    for (const auto& b : r.bounds) {
      if (b.node != last_node) {
        for (std::size_t i = last_node; i < b.node; ++i) offset += r.multiplicities[i];
        last_node = b.node;
      }
      out << prefix << (b.node + 1) << ',' << b.k << ',' << (offset + b.k + 1) << ','
          << format_real(b.empirical_norm) << ',' << format_real(b.bound) << ','
          << format_real(b.ratio) << ',' << bool_text(b.satisfied) << '\n';
    }
  }
  out << "# summary " << summary_fields(summarize(records), ' ', false) << '\n';
  return out.str();
}

std::vector<SweepRecord> parse_sweep_csv(std::string_view text) {
  std::vector<SweepRecord> records;
  bool header_seen = false;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw Error(ErrorKind::InvalidArgument, "unexpected CSV header");
      header_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != kCsvColumns) {
      throw Error(ErrorKind::InvalidArgument, "CSV line has " + std::to_string(f.size()) + " fields");
    }
    const int trial = parse_int<int>(f[0], "trial");
    if (records.empty() || records.back().trial != trial) {
      SweepRecord r;
      r.trial = trial;
      r.status = parse_trial_status(f[1]);
      r.seed = parse_int<std::uint64_t>(f[2], "seed");
      r.n = parse_int<int>(f[3], "n");
      if (r.status != TrialStatus::Skipped) {
        r.n_total = parse_int<int>(f[4], "N");
        r.delta = parse_real(f[5]);
        for (auto node : split(f[6], ';')) r.nodes.push_back(parse_complex_csv(node));
        for (auto m : split(f[7], ';')) r.multiplicities.push_back(parse_int<int>(m, "multiplicity"));
        r.residual_vu = parse_real(f[8]);
        r.max_entry_abs_diff = parse_real(f[9]);
        r.pass = parse_bool(f[10]);
      }
      records.push_back(std::move(r));
    }
    if (f[11].empty()) continue;
    BoundRecord b;
    b.node = parse_int<std::size_t>(f[11], "j") - 1;
    b.k = parse_int<int>(f[12], "k");
    b.empirical_norm = parse_real(f[14]);
    b.bound = parse_real(f[15]);
    b.ratio = parse_real(f[16]);
    b.satisfied = parse_bool(f[17]);
    records.back().bounds.push_back(b);
  }
  if (!header_seen) throw Error(ErrorKind::InvalidArgument, "missing CSV header");
  return records;
}

std::string to_json_lines(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) {
    out << "{\"trial\":" << r.trial << ",\"status\":\"" << to_string(r.status)
        << "\",\"seed\":" << r.seed << ",\"n\":" << r.n;
    if (r.status != TrialStatus::Skipped) {
      out << ",\"N\":" << r.n_total << ",\"delta\":" << json_real(r.delta) << ",\"nodes\":[";
      for (std::size_t i = 0; i < r.nodes.size(); ++i) out << (i ? "," : "") << json_complex(r.nodes[i]);
      out << "],\"multiplicities\":[";
      for (std::size_t i = 0; i < r.multiplicities.size(); ++i) {
        out << (i ? "," : "") << r.multiplicities[i];
      }
      out << "],\"residual_vu\":" << json_real(r.residual_vu)
          << ",\"max_entry_abs_diff\":" << json_real(r.max_entry_abs_diff) << ",\"rows\":[";
      for (std::size_t i = 0; i < r.bounds.size(); ++i) {
        const auto& b = r.bounds[i];
        out << (i ? "," : "") << "{\"j\":" << b.node + 1 << ",\"k\":" << b.k
            << ",\"empirical_norm\":" << json_real(b.empirical_norm)
            << ",\"bound\":" << json_real(b.bound) << ",\"ratio\":" << json_real(b.ratio)
            << ",\"satisfied\":" << bool_text(b.satisfied) << '}';
      }
      out << ']';
    }
    out << ",\"pass\":" << bool_text(r.pass) << "}\n";
  }
  out << "{\"summary\":{" << summary_fields(summarize(records), ',', true) << "}}\n";
  return out.str();
}

}  // namespace cvinv
