#include "cvinv/node_config.hpp"

#include <cmath>
#include <random>
#include <string>

#include "cvinv/errors.hpp"

namespace cvinv {

NodeConfiguration::NodeConfiguration(std::vector<Complex> nodes,
                                     std::vector<int> multiplicities)
    : nodes_(std::move(nodes)), multiplicities_(std::move(multiplicities)) {
  offsets_.reserve(multiplicities_.size());
  for (int ell : multiplicities_) {
    offsets_.push_back(total_);
    total_ += ell;
  }
}

NodeConfiguration NodeConfiguration::validate(std::vector<Complex> nodes,
                                              std::vector<int> multiplicities) {
  if (nodes.size() != multiplicities.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "nodes has " + std::to_string(nodes.size()) +
                    " entries but multiplicities has " +
                    std::to_string(multiplicities.size()));
  }
  if (nodes.empty()) {
    throw Error(ErrorKind::EmptyConfiguration, "nodes must be nonempty");
  }
  long long total = 0;
  for (std::size_t j = 0; j < multiplicities.size(); ++j) {
    if (multiplicities[j] < 1) {
      throw Error(ErrorKind::NonpositiveMultiplicity,
                  "multiplicities[" + std::to_string(j) +
                      "] = " + std::to_string(multiplicities[j]) +
                      " is not positive");
    }
    total += multiplicities[j];
  }
  if (total > kMaxTotalMultiplicity) {
    throw Error(ErrorKind::ConfigurationTooLarge,
                "total multiplicity " + std::to_string(total) + " exceeds " +
                    std::to_string(kMaxTotalMultiplicity));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i].real()) || !std::isfinite(nodes[i].imag())) {
      throw Error(ErrorKind::InvalidArgument,
                  "nodes[" + std::to_string(i) + "] is not finite");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (nodes[i] == nodes[j]) {
        throw Error(ErrorKind::DuplicateNode,
                    "nodes[" + std::to_string(j) + "] and nodes[" +
                        std::to_string(i) + "] coincide");
      }
    }
  }
  return NodeConfiguration(std::move(nodes), std::move(multiplicities));
}

SeparationInfo separation(const NodeConfiguration& config) {
  const auto nodes = config.nodes();
  if (nodes.size() < 2) {
    throw Error(ErrorKind::SingleNode,
                "separation is undefined for a single node");
  }
  SeparationInfo info;
  info.delta = std::numeric_limits<double>::infinity();
  info.in_unit_disk = true;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (std::abs(nodes[i]) > 1.0) info.in_unit_disk = false;
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      info.delta = std::min(info.delta, std::abs(nodes[i] - nodes[j]));
    }
  }
  return info;
}

namespace {

// std::mt19937_64 is bit-specified by the standard; the std distributions
// are not, so the conversions below are done by hand.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& rng, IntRange range) {
  const auto span = static_cast<std::uint64_t>(range.hi - range.lo) + 1;
  return range.lo + static_cast<int>(rng() % span);
}

Complex unit_disk_point(std::mt19937_64& rng) {
  for (;;) {
    const double re = 2.0 * unit_interval(rng) - 1.0;
    const double im = 2.0 * unit_interval(rng) - 1.0;
    if (re * re + im * im <= 1.0) return {re, im};
  }
}

}  // namespace

NodeConfiguration random_configuration(const RandomConfigOptions& options) {
  if (options.node_count < 1) {
    throw Error(ErrorKind::InvalidArgument, "node_count must be at least 1");
  }
  if (options.multiplicity.lo < 1 ||
      options.multiplicity.hi < options.multiplicity.lo) {
    throw Error(ErrorKind::InvalidArgument, "invalid multiplicity range");
  }
  if (!(options.delta_min > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "delta_min must be positive");
  }
  if (options.node_count * options.multiplicity.lo >
      options.max_total_multiplicity) {
    throw Error(ErrorKind::InvalidArgument,
                "max_total_multiplicity is below the smallest attainable N");
  }

  std::mt19937_64 rng(options.seed);
  std::size_t attempts = 0;

  std::vector<Complex> nodes;
  nodes.reserve(static_cast<std::size_t>(options.node_count));
  while (nodes.size() < static_cast<std::size_t>(options.node_count)) {
    if (attempts++ >= options.rejection_budget) {
      throw Error(ErrorKind::SamplingExhausted,
                  "could not place " + std::to_string(options.node_count) +
                      " nodes with separation " +
                      std::to_string(options.delta_min) + " in the unit disk");
    }
    const Complex candidate = unit_disk_point(rng);
    bool separated = true;
    for (const Complex& x : nodes) {
      if (std::abs(candidate - x) < options.delta_min) {
        separated = false;
        break;
      }
    }
    if (separated) nodes.push_back(candidate);
  }

  std::vector<int> multiplicities(nodes.size());
  for (;;) {
    if (attempts++ >= options.rejection_budget) {
      throw Error(ErrorKind::SamplingExhausted,
                  "could not draw multiplicities with N <= " +
                      std::to_string(options.max_total_multiplicity));
    }
    int total = 0;
    for (int& ell : multiplicities) {
      ell = uniform_int(rng, options.multiplicity);
      total += ell;
    }
    if (total <= options.max_total_multiplicity) break;
  }

  return NodeConfiguration::validate(std::move(nodes), std::move(multiplicities));
}

}  // namespace cvinv
