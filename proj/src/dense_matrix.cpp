#include "cvinv/dense_matrix.hpp"

#include <algorithm>

#include "cvinv/errors.hpp"

namespace cvinv {

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "matrix size mismatch");
  const std::size_t n = a.size();
  DenseMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t m = 0; m < n; ++m) {
      const Complex arm = a(r, m);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += arm * b(m, c);
    }
  }
  return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "matrix size mismatch");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  }
  return worst;
}

double identity_residual(const DenseMatrix& m) {
  return max_abs_diff(m, DenseMatrix::identity(m.size()));
}

}  // namespace cvinv
