#include <doctest.h>

#include "cvinv/errors.hpp"
#include "cvinv/sweep.hpp"

using namespace cvinv;

namespace {

SweepSpec small_spec() {
  SweepSpec spec;
  spec.n_range = {2, 4};
  spec.multiplicity_range = {1, 3};
  spec.delta_min = 0.5;
  spec.trials = 25;
  spec.seed = 42;
  return spec;
}

}  // namespace

TEST_CASE("parse_sweep_spec_json") {
  const auto spec = parse_sweep_spec_json(
      R"({"n_range": [2, 4], "multiplicity_range": [1, 3], "delta_min": 0.5, "trials": 100,
          "seed": 42, "output_format": "csv", "max_total_multiplicity": 12})");
  CHECK(spec.n_range.lo == 2);
  CHECK(spec.n_range.hi == 4);
  CHECK(spec.trials == 100);
  CHECK(spec.seed == 42);
  CHECK(spec.output_format == OutputFormat::Csv);
  CHECK(spec.max_total_multiplicity == 12);
  CHECK(spec.tolerance == 1e-8);

  CHECK_THROWS_AS(parse_sweep_spec_json(R"({"n_range": [2, 4]})"), Error);
  CHECK_THROWS_AS(parse_sweep_spec_json(
                      R"({"n_range": [4, 2], "multiplicity_range": [1, 3], "delta_min": 0.5, "trials": 1, "seed": 1})"),
                  Error);
  CHECK_THROWS_AS(parse_sweep_spec_json(
                      R"({"n_range": [2, 4], "multiplicity_range": [1, 3], "delta_min": 0.5, "trials": 0, "seed": 1})"),
                  Error);
  CHECK_THROWS_AS(parse_sweep_spec_json(
                      R"({"n_range": [2, 4], "multiplicity_range": [1, 3], "delta_min": 0.5, "trials": 1, "seed": 1, "typo": 3})"),
                  Error);
}

TEST_CASE("sweep records are thread-count independent") {
  const auto spec = small_spec();
  const auto serial = run_sweep(spec, 1);
  const auto parallel = run_sweep(spec, 4);
  CHECK(serial == parallel);
  CHECK(to_csv(serial) == to_csv(parallel));
  for (int i = 0; i < spec.trials; ++i) CHECK(serial[static_cast<std::size_t>(i)].trial == i);
}

TEST_CASE("sweep passes in the well-separated regime") {
  const auto records = run_sweep(small_spec());
  const auto summary = summarize(records);
  CHECK(summary.trials == 25);
  CHECK(summary.passed == 25);
  for (const auto& r : records) {
    CHECK(r.status == TrialStatus::Ok);
    CHECK(r.n >= 2);
    CHECK(r.n <= 4);
    CHECK(r.delta >= 0.5);
    CHECK(r.bounds.size() == static_cast<std::size_t>(r.n_total));
  }
}

TEST_CASE("infeasible sampling marks trials skipped") {
  auto spec = small_spec();
  spec.n_range = {5, 5};
  spec.delta_min = 1.9;
  spec.trials = 3;
  const auto records = run_sweep(spec);
  const auto summary = summarize(records);
  CHECK(summary.skipped == 3);
  CHECK(summary.failed == 0);
}

TEST_CASE("CSV output round-trips") {
  auto spec = small_spec();
  auto records = run_sweep(spec);
  spec.n_range = {5, 5};
  spec.delta_min = 1.9;
  spec.trials = 2;
  for (auto r : run_sweep(spec)) {
    r.trial += 100;
    records.push_back(r);
  }
  const std::string csv = to_csv(records);
  const auto parsed = parse_sweep_csv(csv);
  CHECK(parsed == records);
  CHECK(to_csv(parsed) == csv);
}

TEST_CASE("JSON lines end with a summary") {
  const auto spec = small_spec();
  const std::string text = to_json_lines(run_sweep(spec));
  CHECK(text.find("{\"summary\":{\"trials\":25,\"passed\":25,\"failed\":0,\"skipped\":0}}\n") !=
        std::string::npos);
}
