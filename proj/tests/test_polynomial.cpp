#include <doctest.h>

#include <random>

#include "cvinv/errors.hpp"
#include "cvinv/polynomial.hpp"
#include "test_helpers.hpp"

using namespace cvinv;
using cvinv::testing::close;
using cvinv::testing::real_config;

namespace {

const Complex I{0.0, 1.0};

void check_coeffs(const Polynomial& p, std::vector<Complex> expected, double tol = 0.0) {
  REQUIRE(p.coefficients().size() == expected.size());
  for (std::size_t t = 0; t < expected.size(); ++t) {
    CAPTURE(t);
    CHECK(close(p[t], expected[t], tol));
  }
}

Polynomial random_poly(std::mt19937_64& rng, std::size_t degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Polynomial p = Polynomial::constant(1.0);
  for (std::size_t d = 0; d < degree; ++d) {
    Complex root{u(rng), u(rng)};
    if (std::abs(root) > 1.0) root /= std::abs(root);
    p = multiply(p, Polynomial{-root, 1.0});
  }
  return p;
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(Polynomial{}.coefficients().size() == 1);
  CHECK(Polynomial{}.is_zero());
  CHECK(Polynomial{1.0, 2.0, 0.0, 0.0}.degree() == 1);
  CHECK(Polynomial{0.0, 0.0}.is_zero());
  // no epsilon trimming
  CHECK(Polynomial{1.0, 1e-300}.degree() == 1);
}

TEST_CASE("multiply") {
  check_coeffs(multiply(Polynomial{-1.0, 1.0}, Polynomial{1.0, 1.0}), {-1.0, 0.0, 1.0});
  const Polynomial p{2.0, -I, 3.0};
  CHECK(multiply(p, Polynomial::constant(1.0)) == p);
  check_coeffs(multiply(multiply(Polynomial{0.0, 1.0}, Polynomial{0.0, 1.0}), Polynomial{-1.0, 1.0}),
               {0.0, 0.0, -1.0, 1.0});
  CHECK(multiply(p, Polynomial{}).is_zero());
}

TEST_CASE("shifted_power") {
  check_coeffs(shifted_power(0.0, 3), {0.0, 0.0, 0.0, 1.0});
  check_coeffs(shifted_power(1.0, 2), {1.0, -2.0, 1.0});
  check_coeffs(shifted_power(I, 1), {-I, 1.0});
  check_coeffs(shifted_power(2.0, 0), {1.0});

  // agrees with repeated multiplication
  const Complex c{0.3, -0.7};
  Polynomial expected = Polynomial::constant(1.0);
  for (int m = 0; m < 8; ++m) {
    const Polynomial got = shifted_power(c, m);
    REQUIRE(got.degree() == expected.degree());
    for (std::size_t t = 0; t <= got.degree(); ++t) CHECK(close(got[t], expected[t], 1e-13));
    expected = multiply(expected, Polynomial{-c, 1.0});
  }
}

TEST_CASE("nodal_polynomial_excluding") {
  const auto c = real_config({0.0, 1.0}, {2, 1});
  check_coeffs(nodal_polynomial_excluding(c, 0), {-1.0, 1.0});
  check_coeffs(nodal_polynomial_excluding(c, 1), {0.0, 0.0, 1.0});
  check_coeffs(nodal_polynomial_excluding(real_config({0.0}, {1}), 0), {1.0});
  CHECK_THROWS_AS(nodal_polynomial_excluding(c, 2), Error);
}

TEST_CASE("coeff_l1_norm") {
  CHECK(coeff_l1_norm(Polynomial{-1.0, 0.0, 1.0}) == 2.0);
  CHECK(coeff_l1_norm(Polynomial{1.0, -2.0, 1.0}) == 4.0);
  CHECK(coeff_l1_norm(Polynomial{}) == 0.0);
  CHECK(coeff_l1_norm(Polynomial{Complex{3.0, 4.0}}) == 5.0);
}

TEST_CASE("evaluation and recentring") {
  const Polynomial p{1.0, -2.0, 0.5, I};
  const Complex c{0.4, 0.2};
  const auto taylor = p.taylor_coefficients(c);
  for (Complex x : {Complex{0.0}, Complex{1.0, -1.0}, Complex{-0.3, 0.9}}) {
    Complex recentred{0.0};
    Complex power{1.0};
    for (Complex a : taylor) {
      recentred += a * power;
      power *= (x - c);
    }
    CHECK(close(recentred, p(x), 1e-13));
  }
}

TEST_CASE("series_reciprocal") {
  auto s = series_reciprocal(Polynomial{-1.0, 1.0}, 0.0, 2);
  REQUIRE(s.order() == 2);
  for (Complex v : s.coefficients) CHECK(close(v, -1.0, 0.0));

  s = series_reciprocal(Polynomial::constant(1.0), Complex{0.3, 0.1}, 2);
  CHECK(s.coefficients == std::vector<Complex>{1.0, 0.0, 0.0});

  // 1/x^2 about 1: value 1, derivative -2 (central difference gives -2.0000...)
  s = series_reciprocal(Polynomial{0.0, 0.0, 1.0}, 1.0, 1);
  CHECK(close(s.coefficients[0], 1.0, 1e-15));
  CHECK(close(s.coefficients[1], -2.0, 1e-15));
  const double h = 1e-5;
  const double fd = (1.0 / ((1 + h) * (1 + h)) - 1.0 / ((1 - h) * (1 - h))) / (2 * h);
  CHECK(std::abs(fd - s.coefficients[1].real()) < 1e-8);

  CHECK_THROWS_AS(series_reciprocal(Polynomial{0.0, 1.0}, 0.0, 3), Error);
  try {
    series_reciprocal(Polynomial{-1.0, 1.0}, 1.0, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularAtCenter);
  }
}

TEST_CASE("property: algebraic laws on unit-disk-rooted polynomials") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> deg(0, 16);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = random_poly(rng, deg(rng));
    const Polynomial q = random_poly(rng, deg(rng));
    const Polynomial r = random_poly(rng, deg(rng));

    const Polynomial pq = multiply(p, q);
    const Polynomial qp = multiply(q, p);
    const Polynomial lhs = multiply(pq, r);
    const Polynomial rhs = multiply(p, multiply(q, r));
    REQUIRE(pq.degree() == p.degree() + q.degree());
    for (std::size_t t = 0; t <= pq.degree(); ++t) {
      CHECK(std::abs(pq[t] - qp[t]) <= 1e-12 * std::max(1.0, std::abs(pq[t])));
    }
    for (std::size_t t = 0; t <= lhs.degree(); ++t) {
      CHECK(std::abs(lhs[t] - rhs[t]) <= 1e-12 * std::max(1.0, std::abs(lhs[t])));
    }
    CHECK(coeff_l1_norm(pq) <= coeff_l1_norm(p) * coeff_l1_norm(q) * (1 + 1e-12));
  }
}

TEST_CASE("property: coefficient sum of a nodal product is dominated") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = cvinv::testing::sampled_config(seed, 6, 4, 24, 0.1);
    Polynomial full = Polynomial::constant(1.0);
    double product = 1.0;
    for (std::size_t i = 0; i < c.node_count(); ++i) {
      full = multiply(full, shifted_power(c.node(i), c.multiplicity(i)));
      product *= std::pow(1.0 + std::abs(c.node(i)), c.multiplicity(i));
    }
    CHECK(coeff_l1_norm(full) <= product * (1 + 1e-12));
    CHECK(product <= std::ldexp(1.0, c.total_multiplicity()));
  }
}

TEST_CASE("property: p times its reciprocal series is 1 to the truncation order") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = random_poly(rng, 1 + trial % 10);
    const Complex center{u(rng), u(rng)};
    const int order = trial % 8;
    const auto s = series_reciprocal(p, center, order);
    const auto a = p.taylor_coefficients(center);
    for (int t = 0; t <= order; ++t) {
      Complex conv{0.0};
      for (int r = 0; r <= t; ++r) {
        if (static_cast<std::size_t>(r) < a.size()) conv += a[r] * s.coefficients[t - r];
      }
      const double scale = std::max(1.0, std::abs(s.coefficients[t]) * coeff_l1_norm(p));
      CHECK(std::abs(conv - (t == 0 ? 1.0 : 0.0)) <= 1e-10 * scale);
    }
  }
}
