#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cvinv/node_config.hpp"

namespace cvinv {

/// Square complex matrix, row-major.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, Complex{0.0}) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * n_ + c]; }
  Complex operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * n_ + c]; }

  std::span<Complex> row(std::size_t r) noexcept { return {data_.data() + r * n_, n_}; }
  std::span<const Complex> row(std::size_t r) const noexcept { return {data_.data() + r * n_, n_}; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<Complex> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

/// max_{r,c} |a(r,c) - b(r,c)|
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// max_{r,c} |m(r,c) - I(r,c)|
double identity_residual(const DenseMatrix& m);

}  // namespace cvinv
