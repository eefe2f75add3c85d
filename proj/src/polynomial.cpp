#include "cvinv/polynomial.hpp"

#include <algorithm>
#include <string>

#include "cvinv/combinatorics.hpp"
#include "cvinv/errors.hpp"

namespace cvinv {

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{0.0}) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Complex{0.0});
}

Complex Polynomial::operator()(Complex x) const noexcept {
  Complex acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Complex> Polynomial::taylor_coefficients(Complex center) const {
  // Repeated synthetic division by (x - center).
  std::vector<Complex> b = coeffs_;
  const std::size_t d = b.size() - 1;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = d; k-- > i;) b[k] += center * b[k + 1];
  }
  return b;
}

std::vector<Complex> Polynomial::padded(std::size_t length) const {
  if (length < coeffs_.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "cannot pad a degree-" + std::to_string(degree()) +
                    " polynomial to " + std::to_string(length) + " coefficients");
  }
  std::vector<Complex> out(length, Complex{0.0});
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin());
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Complex{0.0});
  for (std::size_t t = 0; t < other.coeffs_.size(); ++t) coeffs_[t] += other.coeffs_[t];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(Complex scale) {
  for (Complex& c : coeffs_) c *= scale;
  trim();
  return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
Polynomial operator*(Polynomial p, Complex scale) { return p *= scale; }
Polynomial operator*(Complex scale, Polynomial p) { return p *= scale; }

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  const auto a = p.coefficients();
  const auto b = q.coefficients();
  std::vector<Complex> out(a.size() + b.size() - 1, Complex{0.0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return Polynomial(std::move(out));
}

Polynomial shifted_power(Complex center, int m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "shifted_power needs m >= 0");
  std::vector<Complex> out(static_cast<std::size_t>(m) + 1);
  // coefficient of x^s is C(m, s) (-center)^(m - s)
  Complex power{1.0};
  for (int s = m; s >= 0; --s) {
    out[static_cast<std::size_t>(s)] = binomial(m, s) * power;
    power *= -center;
  }
  return Polynomial(std::move(out));
}

Polynomial nodal_polynomial_excluding(const NodeConfiguration& config, std::size_t j) {
  if (j >= config.node_count()) {
    throw Error(ErrorKind::InvalidArgument, "node index " + std::to_string(j) + " out of range");
  }
  Polynomial out = Polynomial::constant(1.0);
  for (std::size_t i = 0; i < config.node_count(); ++i) {
    if (i == j) continue;
    out = multiply(out, shifted_power(config.node(i), config.multiplicity(i)));
  }
  return out;
}

double coeff_l1_norm(const Polynomial& p) {
  double sum = 0.0;
  for (const Complex& c : p.coefficients()) sum += std::abs(c);
  return sum;
}

TaylorSeries series_reciprocal(const Polynomial& p, Complex center, int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "series order must be nonnegative");
  const std::vector<Complex> a = p.taylor_coefficients(center);
  if (a[0] == Complex{0.0}) {
    throw Error(ErrorKind::SingularAtCenter, "polynomial vanishes at the expansion center");
  }
  const auto len = static_cast<std::size_t>(order) + 1;
  TaylorSeries series{center, std::vector<Complex>(len, Complex{0.0})};
  auto& s = series.coefficients;
  s[0] = 1.0 / a[0];
  for (std::size_t t = 1; t < len; ++t) {
    Complex acc{0.0};
    for (std::size_t r = 1; r <= t && r < a.size(); ++r) acc += a[r] * s[t - r];
    s[t] = -acc / a[0];
  }
  return series;
}

}  // namespace cvinv
