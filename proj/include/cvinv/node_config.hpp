#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace cvinv {

using Complex = std::complex<double>;

/// Largest admissible N. Factorials up to this order are finite in double.
inline constexpr int kMaxTotalMultiplicity = 170;

/**
 * Pairwise-distinct complex nodes x_1..x_n with positive multiplicities
 * l_1..l_n. N = l_1 + ... + l_n is the order of the associated confluent
 * Vandermonde matrix.
 *
 * Nodes are indexed from 0 in the C++ API. Printed reports use 1-based
 * node labels.
 *
 * Instances are only obtainable through validate() (or the random
 * generator, which calls it), so every live object satisfies the
 * invariants.
 */
class NodeConfiguration {
 public:
  static NodeConfiguration validate(std::vector<Complex> nodes,
                                    std::vector<int> multiplicities);

  std::span<const Complex> nodes() const noexcept { return nodes_; }
  std::span<const int> multiplicities() const noexcept { return multiplicities_; }

  Complex node(std::size_t j) const { return nodes_.at(j); }
  int multiplicity(std::size_t j) const { return multiplicities_.at(j); }

  /// Number of distinct nodes (n).
  std::size_t node_count() const noexcept { return nodes_.size(); }
  /// Sum of multiplicities (N).
  int total_multiplicity() const noexcept { return total_; }

  /// l_1 + ... + l_{j-1}: first flat column (and inverse row) of block j.
  int block_offset(std::size_t j) const { return offsets_.at(j); }

  bool operator==(const NodeConfiguration&) const = default;

 private:
  NodeConfiguration(std::vector<Complex> nodes, std::vector<int> multiplicities);

  std::vector<Complex> nodes_;
  std::vector<int> multiplicities_;
  std::vector<int> offsets_;
  int total_ = 0;
};

struct SeparationInfo {
  double delta = 0.0;
  bool in_unit_disk = false;
};

/// Minimum pairwise node distance and the |x_j| <= 1 check.
/// Throws Error(SingleNode) when n == 1.
SeparationInfo separation(const NodeConfiguration& config);

struct IntRange {
  int lo = 1;
  int hi = 1;
};

struct RandomConfigOptions {
  int node_count = 2;
  IntRange multiplicity{1, 1};
  double delta_min = 0.5;
  std::uint64_t seed = 0;
  /// Optional cap on N; multiplicity draws exceeding it are rejected.
  int max_total_multiplicity = kMaxTotalMultiplicity;
  std::size_t rejection_budget = 100000;
};

/**
 * Uniform rejection sampling of nodes in the closed unit disk subject to
 * pairwise distance >= delta_min, followed by uniform multiplicities.
 * Bit-identical output for identical options.
 *
 * Throws Error(SamplingExhausted) once the rejection budget is spent, and
 * Error(InvalidArgument) for malformed options.
 */
NodeConfiguration random_configuration(const RandomConfigOptions& options);

}  // namespace cvinv
