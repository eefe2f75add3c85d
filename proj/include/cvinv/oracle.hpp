#pragma once

#include <vector>

#include "cvinv/confluent_vandermonde.hpp"
#include "cvinv/dense_matrix.hpp"

namespace cvinv {

/// Pivots with modulus below this raise NumericallySingular.
inline constexpr double kPivotFloor = 1e-300;

/**
 * Inverse by LU factorisation with partial (row) pivoting followed by one
 * forward/back substitution per unit vector. Arithmetic is carried out in
 * long double and rounded to double on output.
 */
DenseMatrix lu_inverse(const DenseMatrix& m);

struct ComparisonReport {
  double max_entry_abs_diff = 0.0;
  /// sum_c |U_struct(r,c) - U_lu(r,c)| for each flat row r.
  std::vector<double> row_l1_diff;
  /// max-entry norm of V U - I
  double residual_vu = 0.0;
  /// max-entry norm of U V - I
  double residual_uv = 0.0;
};

/// Checks the structured inverse against an LU inverse of V, where V is
/// rebuilt from the nodes in long double rather than taken from
/// build_matrix. Residuals use the double-precision build_matrix result.
ComparisonReport compare(const InverseRows& structured, const NodeConfiguration& config);

}  // namespace cvinv
