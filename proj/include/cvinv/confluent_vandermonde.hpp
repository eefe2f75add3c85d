#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cvinv/dense_matrix.hpp"
#include "cvinv/node_config.hpp"

namespace cvinv {

/// Block position of a flat column (or inverse row): node j, inner index s.
struct BlockIndex {
  std::size_t node = 0;
  int inner = 0;

  bool operator==(const BlockIndex&) const = default;
};

/**
 * The N x N confluent Vandermonde matrix. Row k (0..N-1) and column
 * (j, s) hold d^s/dx^s x^k at x_j, i.e. k(k-1)...(k-s+1) x_j^(k-s), and 0
 * when s > k. Column (j, s) sits at flat index l_1 + ... + l_{j-1} + s.
 */
class ConfluentMatrix {
 public:
  ConfluentMatrix(NodeConfiguration config, DenseMatrix entries)
      : config_(std::move(config)), entries_(std::move(entries)) {}

  const NodeConfiguration& config() const noexcept { return config_; }
  const DenseMatrix& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  Complex operator()(std::size_t row, std::size_t col) const noexcept { return entries_(row, col); }

  std::size_t flat_column(BlockIndex index) const;
  BlockIndex block_of(std::size_t col) const;

 private:
  NodeConfiguration config_;
  DenseMatrix entries_;
};

ConfluentMatrix build_matrix(const NodeConfiguration& config);

/// h_j^{(t)}(x_j) for t = 0..t_max, where h_j(x) = prod_{i != j} (x - x_i)^{-l_i}.
struct HDerivatives {
  std::size_t node = 0;
  std::vector<Complex> values;

  int t_max() const noexcept { return static_cast<int>(values.size()) - 1; }
};

/**
 * Derivatives of h_j at x_j via the Leibniz expansion of h' = h g with
 * g(x) = sum_{i != j} -l_i / (x - x_i):
 *
 *   h^{(t)} = sum_{k<t} C(t-1, k) h^{(k)} g^{(t-1-k)},
 *   g^{(m)}(x_j) = sum_{i != j} (-1)^{m+1} m! l_i / (x_j - x_i)^{m+1}.
 *
 * values[0] is the direct product. For n == 1, h_j == 1.
 */
HDerivatives h_derivatives(const NodeConfiguration& config, std::size_t j, int t_max);

/**
 * Rows u_{j,k} of V^{-1}, stored in flat order: row (j, k) is flat row
 * l_1 + ... + l_{j-1} + k (0-based). Each row has exactly N coefficients.
 */
class InverseRows {
 public:
  InverseRows(NodeConfiguration config, std::vector<std::vector<Complex>> rows);

  const NodeConfiguration& config() const noexcept { return config_; }
  std::size_t size() const noexcept { return rows_.size(); }

  std::size_t flat_index(std::size_t j, int k) const;
  BlockIndex block_of(std::size_t flat) const;

  std::span<const Complex> row(std::size_t j, int k) const { return rows_.at(flat_index(j, k)); }
  std::span<const Complex> row(std::size_t flat) const { return rows_.at(flat); }

  double l1_norm(std::size_t j, int k) const { return norms_.at(flat_index(j, k)); }
  double l1_norm(std::size_t flat) const { return norms_.at(flat); }

 private:
  NodeConfiguration config_;
  std::vector<std::vector<Complex>> rows_;
  std::vector<double> norms_;
};

/**
 * u_{j,k} = coefficients of
 *   (1/k!) sum_{t=0}^{l_j-1-k} (1/t!) h_j^{(t)}(x_j) (x - x_j)^{k+t} prod_{i != j} (x - x_i)^{l_i}.
 */
InverseRows inverse_rows(const NodeConfiguration& config);

/// Stack the rows in flat order.
DenseMatrix assemble_inverse(const InverseRows& rows);

}  // namespace cvinv
