#include "cvinv/confluent_vandermonde.hpp"

#include <string>

#include "cvinv/combinatorics.hpp"
#include "cvinv/errors.hpp"
#include "cvinv/polynomial.hpp"

namespace cvinv {

namespace {

void check_node(const NodeConfiguration& config, std::size_t j) {
  if (j >= config.node_count()) {
    throw Error(ErrorKind::InvalidArgument, "node index " + std::to_string(j) + " out of range");
  }
}

BlockIndex locate(const NodeConfiguration& config, std::size_t flat) {
  if (flat >= static_cast<std::size_t>(config.total_multiplicity())) {
    throw Error(ErrorKind::InvalidArgument, "flat index " + std::to_string(flat) + " out of range");
  }
  std::size_t j = config.node_count() - 1;
  while (static_cast<std::size_t>(config.block_offset(j)) > flat) --j;
  return {j, static_cast<int>(flat) - config.block_offset(j)};
}

std::size_t flatten(const NodeConfiguration& config, std::size_t j, int inner) {
  check_node(config, j);
  if (inner < 0 || inner >= config.multiplicity(j)) {
    throw Error(ErrorKind::InvalidArgument,
                "inner index " + std::to_string(inner) + " out of range for node " +
                    std::to_string(j));
  }
  return static_cast<std::size_t>(config.block_offset(j) + inner);
}

}  // namespace

std::size_t ConfluentMatrix::flat_column(BlockIndex index) const {
  return flatten(config_, index.node, index.inner);
}

BlockIndex ConfluentMatrix::block_of(std::size_t col) const { return locate(config_, col); }

ConfluentMatrix build_matrix(const NodeConfiguration& config) {
  const auto n_total = static_cast<std::size_t>(config.total_multiplicity());
  DenseMatrix v(n_total);
  std::vector<Complex> powers(n_total);
  for (std::size_t j = 0; j < config.node_count(); ++j) {
    const Complex x = config.node(j);
    powers[0] = 1.0;  // 0^0 == 1
    for (std::size_t m = 1; m < n_total; ++m) powers[m] = powers[m - 1] * x;

    const auto ell = static_cast<std::size_t>(config.multiplicity(j));
    const auto offset = static_cast<std::size_t>(config.block_offset(j));
    for (std::size_t k = 0; k < n_total; ++k) {
      double falling = 1.0;  // k (k-1) ... (k-s+1)
      for (std::size_t s = 0; s < ell && s <= k; ++s) {
        v(k, offset + s) = falling * powers[k - s];
        falling *= static_cast<double>(k - s);
      }
    }
  }
  return ConfluentMatrix(config, std::move(v));
}

HDerivatives h_derivatives(const NodeConfiguration& config, std::size_t j, int t_max) {
  check_node(config, j);
  if (t_max < 0) throw Error(ErrorKind::InvalidArgument, "t_max must be nonnegative");
  const auto len = static_cast<std::size_t>(t_max) + 1;
  const Complex xj = config.node(j);

  // g^{(m)}(x_j) for m = 0..t_max-1
  std::vector<Complex> g(len, Complex{0.0});
  Complex h0{1.0};
  for (std::size_t i = 0; i < config.node_count(); ++i) {
    if (i == j) continue;
    const Complex inv = 1.0 / (xj - config.node(i));
    const double ell = config.multiplicity(i);
    for (int r = 0; r < config.multiplicity(i); ++r) h0 *= inv;
    Complex inv_power = inv;
    double sign = -1.0;
    for (std::size_t m = 0; m + 1 < len; ++m) {
      g[m] += sign * factorial(static_cast<int>(m)) * ell * inv_power;
      inv_power *= inv;
      sign = -sign;
    }
  }

  HDerivatives out{j, std::vector<Complex>(len, Complex{0.0})};
  auto& h = out.values;
  h[0] = h0;
  for (std::size_t t = 1; t < len; ++t) {
    Complex acc{0.0};
    for (std::size_t k = 0; k < t; ++k) {
      acc += binomial(static_cast<int>(t - 1), static_cast<int>(k)) * h[k] * g[t - 1 - k];
    }
    h[t] = acc;
  }
  return out;
}

InverseRows::InverseRows(NodeConfiguration config, std::vector<std::vector<Complex>> rows)
    : config_(std::move(config)), rows_(std::move(rows)) {
  const auto n_total = static_cast<std::size_t>(config_.total_multiplicity());
  if (rows_.size() != n_total) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(n_total) + " rows");
  }
  norms_.reserve(n_total);
  for (const auto& r : rows_) {
    if (r.size() != n_total) {
      throw Error(ErrorKind::InvalidArgument, "every inverse row needs N coefficients");
    }
    norms_.push_back(coeff_l1_norm(Polynomial(r)));
  }
}

std::size_t InverseRows::flat_index(std::size_t j, int k) const { return flatten(config_, j, k); }

BlockIndex InverseRows::block_of(std::size_t flat) const { return locate(config_, flat); }

InverseRows inverse_rows(const NodeConfiguration& config) {
  const auto n_total = static_cast<std::size_t>(config.total_multiplicity());
  std::vector<std::vector<Complex>> rows(n_total);

  for (std::size_t j = 0; j < config.node_count(); ++j) {
    const Complex xj = config.node(j);
    const int ell = config.multiplicity(j);
    const Polynomial nodal = nodal_polynomial_excluding(config, j);
    const HDerivatives h = h_derivatives(config, j, ell - 1);

    for (int k = 0; k < ell; ++k) {
      // truncated Taylor polynomial of h_j about x_j
      Polynomial taylor;
      for (int t = 0; t <= ell - 1 - k; ++t) {
        taylor += shifted_power(xj, t) * (h.values[static_cast<std::size_t>(t)] / factorial(t));
      }
      Polynomial u = multiply(multiply(taylor, shifted_power(xj, k)), nodal);
      u *= 1.0 / factorial(k);
      rows[static_cast<std::size_t>(config.block_offset(j) + k)] = u.padded(n_total);
    }
  }
  return InverseRows(config, std::move(rows));
}

DenseMatrix assemble_inverse(const InverseRows& rows) {
  DenseMatrix u(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto src = rows.row(r);
    std::copy(src.begin(), src.end(), u.row(r).begin());
  }
  return u;
}

}  // namespace cvinv
