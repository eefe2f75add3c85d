#include "cvinv/oracle.hpp"

#include <algorithm>
#include <complex>
#include <numeric>
#include <string>

#include "cvinv/errors.hpp"

namespace cvinv {

namespace {

// Factorisation and solves run in extended precision: for N ~ 12 the
// structured inverse is more accurate than a double-precision LU of V.
using Wide = std::complex<long double>;

DenseMatrix lu_inverse_wide(std::vector<Wide> lu, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  auto at = [&](std::size_t r, std::size_t c) -> Wide& { return lu[r * n + c]; };
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    long double best = std::abs(at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const long double mag = std::abs(at(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (!(best >= kPivotFloor)) {
      throw Error(ErrorKind::NumericallySingular,
                  "pivot underflow in column " + std::to_string(col));
    }
    if (pivot != col) {
      std::swap_ranges(lu.begin() + static_cast<std::ptrdiff_t>(col * n),
                       lu.begin() + static_cast<std::ptrdiff_t>((col + 1) * n),
                       lu.begin() + static_cast<std::ptrdiff_t>(pivot * n));
      std::swap(perm[col], perm[pivot]);
    }
    const Wide diag = at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Wide factor = at(r, col) / diag;
      at(r, col) = factor;
      for (std::size_t c = col + 1; c < n; ++c) at(r, c) -= factor * at(col, c);
    }
  }

  // P M = L U, so column c of M^{-1} solves L U x = P e_c.
  DenseMatrix inv(n);
  std::vector<Wide> x(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      Wide acc = perm[r] == c ? Wide{1.0L} : Wide{0.0L};
      for (std::size_t k = 0; k < r; ++k) acc -= at(r, k) * x[k];
      x[r] = acc;
    }
    for (std::size_t r = n; r-- > 0;) {
      Wide acc = x[r];
      for (std::size_t k = r + 1; k < n; ++k) acc -= at(r, k) * x[k];
      x[r] = acc / at(r, r);
    }
    for (std::size_t r = 0; r < n; ++r) {
      inv(r, c) = Complex(static_cast<double>(x[r].real()), static_cast<double>(x[r].imag()));
    }
  }
  return inv;
}

/// V assembled in extended precision directly from the nodes.
std::vector<Wide> confluent_matrix_wide(const NodeConfiguration& config) {
  const auto n = static_cast<std::size_t>(config.total_multiplicity());
  std::vector<Wide> v(n * n, Wide{0.0L});
  std::size_t col = 0;
  for (std::size_t j = 0; j < config.node_count(); ++j) {
    const Wide x(config.node(j).real(), config.node(j).imag());
    for (int s = 0; s < config.multiplicity(j); ++s, ++col) {
      for (std::size_t k = static_cast<std::size_t>(s); k < n; ++k) {
        long double falling = 1.0L;
        for (int r = 0; r < s; ++r) falling *= static_cast<long double>(k) - r;
        Wide power{1.0L};
        for (std::size_t e = 0; e < k - static_cast<std::size_t>(s); ++e) power *= x;
        v[k * n + col] = falling * power;
      }
    }
  }
  return v;
}

}  // namespace

DenseMatrix lu_inverse(const DenseMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Wide> wide(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) wide[r * n + c] = Wide(m(r, c).real(), m(r, c).imag());
  }
  return lu_inverse_wide(std::move(wide), n);
}

ComparisonReport compare(const InverseRows& structured, const NodeConfiguration& config) {
  const DenseMatrix v = build_matrix(config).entries();
  const DenseMatrix reference =
      lu_inverse_wide(confluent_matrix_wide(config), static_cast<std::size_t>(config.total_multiplicity()));
  const DenseMatrix u = assemble_inverse(structured);
  if (u.size() != v.size()) {
    throw Error(ErrorKind::InvalidArgument, "inverse rows do not match the configuration size");
  }

  ComparisonReport report;
  report.max_entry_abs_diff = max_abs_diff(u, reference);
  report.row_l1_diff.resize(u.size());
  for (std::size_t r = 0; r < u.size(); ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < u.size(); ++c) sum += std::abs(u(r, c) - reference(r, c));
    report.row_l1_diff[r] = sum;
  }
  report.residual_vu = identity_residual(v * u);
  report.residual_uv = identity_residual(u * v);
  return report;
}

}  // namespace cvinv
