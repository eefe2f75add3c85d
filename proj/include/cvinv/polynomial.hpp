#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cvinv/node_config.hpp"

namespace cvinv {

/**
 * Dense polynomial with complex coefficients in the monomial basis,
 * coefficients()[t] being the coefficient of x^t.
 *
 * The coefficient list is never empty and trailing zeros are trimmed on
 * construction (exact comparison only), so the zero polynomial is [0].
 */
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{0.0}} {}
  Polynomial(std::initializer_list<Complex> coeffs);
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial constant(Complex c) { return Polynomial(std::vector<Complex>{c}); }

  std::span<const Complex> coefficients() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Complex{0.0}; }

  /// Coefficient of x^t, zero beyond the degree.
  Complex operator[](std::size_t t) const noexcept {
    return t < coeffs_.size() ? coeffs_[t] : Complex{0.0};
  }

  /// Horner evaluation.
  Complex operator()(Complex x) const noexcept;

  /// Coefficients of the same polynomial in powers of (x - center).
  std::vector<Complex> taylor_coefficients(Complex center) const;

  /// Coefficients zero-padded (or checked) to exactly `length` entries.
  std::vector<Complex> padded(std::size_t length) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(Complex scale);

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(Polynomial p, Complex scale);
Polynomial operator*(Complex scale, Polynomial p);

/// Schoolbook convolution of coefficient lists.
Polynomial multiply(const Polynomial& p, const Polynomial& q);
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return multiply(p, q); }

/// (x - center)^m expanded by the binomial theorem.
Polynomial shifted_power(Complex center, int m);

/// prod_{i != j} (x - x_i)^{l_i}; the constant 1 when n == 1.
Polynomial nodal_polynomial_excluding(const NodeConfiguration& config, std::size_t j);

/// Sum of complex moduli of the coefficients.
double coeff_l1_norm(const Polynomial& p);

/// Truncated Taylor expansion sum_t c_t (x - center)^t, t = 0..order.
struct TaylorSeries {
  Complex center;
  std::vector<Complex> coefficients;

  int order() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
};

/**
 * Taylor coefficients of 1/p about `center` up to (x - center)^order.
 * p is recentred, then the long-division recurrence
 *   s_0 = 1/a_0,  s_t = -(a_1 s_{t-1} + ... + a_t s_0) / a_0
 * is applied. Throws Error(SingularAtCenter) if p(center) == 0 exactly.
 */
TaylorSeries series_reciprocal(const Polynomial& p, Complex center, int order);

}  // namespace cvinv
