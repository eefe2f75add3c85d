#include <doctest.h>

#include "cvinv/errors.hpp"
#include "cvinv/node_config.hpp"
#include "test_helpers.hpp"

using namespace cvinv;
using cvinv::testing::real_config;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected cvinv::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("validate computes N") {
  CHECK(real_config({0.0}, {2}).total_multiplicity() == 2);
  const auto c = real_config({0.0, 1.0}, {2, 1});
  CHECK(c.total_multiplicity() == 3);
  CHECK(c.node_count() == 2);
  CHECK(c.block_offset(0) == 0);
  CHECK(c.block_offset(1) == 2);
}

TEST_CASE("validate rejects malformed input") {
  CHECK(kind_of([] { real_config({1.0, 1.0}, {1, 1}); }) == ErrorKind::DuplicateNode);
  CHECK(kind_of([] { real_config({0.0, 1.0}, {1, 0}); }) == ErrorKind::NonpositiveMultiplicity);
  CHECK(kind_of([] { real_config({0.0, 1.0}, {1, -2}); }) == ErrorKind::NonpositiveMultiplicity);
  CHECK(kind_of([] { real_config({0.0, 1.0}, {1}); }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([] { real_config({}, {}); }) == ErrorKind::EmptyConfiguration);
  CHECK(kind_of([] { real_config({0.0, 1.0}, {100, 71}); }) == ErrorKind::ConfigurationTooLarge);
  CHECK(kind_of([] {
          NodeConfiguration::validate({Complex{std::nan(""), 0.0}}, {1});
        }) == ErrorKind::InvalidArgument);
}

TEST_CASE("near-coincident nodes are legal") {
  const auto c = real_config({0.0, 1e-15}, {1, 1});
  CHECK(separation(c).delta == doctest::Approx(1e-15).epsilon(1e-12));
}

TEST_CASE("separation") {
  auto s = separation(real_config({0.0, 1.0}, {1, 1}));
  CHECK(s.delta == 1.0);
  CHECK(s.in_unit_disk);

  s = separation(real_config({1.0, -1.0}, {1, 1}));
  CHECK(s.delta == 2.0);
  CHECK(s.in_unit_disk);

  CHECK(separation(real_config({0.0, 0.5, 1.0}, {1, 1, 1})).delta == 0.5);
  CHECK_FALSE(separation(real_config({0.0, 1.5}, {1, 1})).in_unit_disk);

  const auto c = NodeConfiguration::validate({Complex{0.6, 0.8}, Complex{0.0, 0.0}}, {1, 1});
  CHECK(separation(c).in_unit_disk);

  CHECK(kind_of([] { separation(real_config({0.0}, {3})); }) == ErrorKind::SingleNode);
}

TEST_CASE("random_configuration postconditions") {
  RandomConfigOptions opts;
  opts.node_count = 2;
  opts.multiplicity = {1, 1};
  opts.delta_min = 0.5;
  opts.seed = 7;
  auto c = random_configuration(opts);
  CHECK(c.node_count() == 2);
  CHECK(c.total_multiplicity() == 2);
  CHECK(separation(c).delta >= 0.5);
  CHECK(separation(c).in_unit_disk);

  opts.node_count = 4;
  opts.multiplicity = {1, 3};
  opts.delta_min = 0.3;
  opts.seed = 1;
  c = random_configuration(opts);
  CHECK(c.total_multiplicity() >= 4);
  CHECK(c.total_multiplicity() <= 12);
  CHECK(separation(c).delta >= 0.3);
}

TEST_CASE("random_configuration exhausts on infeasible geometry") {
  RandomConfigOptions opts;
  opts.node_count = 50;
  opts.delta_min = 1.9;
  opts.seed = 3;
  CHECK(kind_of([&] { random_configuration(opts); }) == ErrorKind::SamplingExhausted);
}

TEST_CASE("random_configuration honours the N cap") {
  RandomConfigOptions opts;
  opts.node_count = 5;
  opts.multiplicity = {1, 4};
  opts.max_total_multiplicity = 12;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    opts.seed = seed;
    CHECK(random_configuration(opts).total_multiplicity() <= 12);
  }
}

TEST_CASE("property: separation is the attained pairwise minimum") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomConfigOptions opts;
    opts.node_count = 2 + static_cast<int>(seed % 6);
    opts.multiplicity = {1, 3};
    opts.delta_min = 0.2;
    opts.seed = seed;
    const auto c = random_configuration(opts);
    const auto s = separation(c);
    REQUIRE(s.delta >= opts.delta_min);
    REQUIRE(s.in_unit_disk);
    bool attained = false;
    for (std::size_t i = 0; i < c.node_count(); ++i) {
      for (std::size_t j = i + 1; j < c.node_count(); ++j) {
        const double d = std::abs(c.node(i) - c.node(j));
        REQUIRE(s.delta <= d);
        attained = attained || d == s.delta;
      }
    }
    CHECK(attained);

    // round-trips through validate and is seed-deterministic
    CHECK(NodeConfiguration::validate({c.nodes().begin(), c.nodes().end()},
                                      {c.multiplicities().begin(), c.multiplicities().end()}) == c);
    CHECK(random_configuration(opts) == c);
  }
}
