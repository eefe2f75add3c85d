#include "cvinv/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cvinv/combinatorics.hpp"
#include "cvinv/errors.hpp"

namespace cvinv {

namespace {

constexpr double kDirectEvaluationLimit = 700.0;

void check_main_args(int n_total, double delta, int ell_j, int k) {
  if (n_total < 1 || ell_j < 1 || k < 0 || k >= ell_j || !(delta > 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "main_bound needs N >= 1, delta > 0 and 0 <= k < l_j");
  }
}

bool checked_mul(UInt128 a, UInt128 b, UInt128& out) { return !__builtin_mul_overflow(a, b, &out); }
bool checked_add(UInt128 a, UInt128 b, UInt128& out) { return !__builtin_add_overflow(a, b, &out); }

}  // namespace

double log_main_bound(int n_total, double delta, int ell_j, int k) {
  check_main_args(n_total, delta, ell_j, k);
  const double n = n_total;
  return n * std::log(2.0 / delta) + std::log(2.0) - std::lgamma(k + 1.0) +
         (ell_j - 1 - k) * std::log(0.5 + n / delta);
}

double main_bound(int n_total, double delta, int ell_j, int k) {
  check_main_args(n_total, delta, ell_j, k);
  const double n = n_total;
  if (n * std::abs(std::log(2.0 / delta)) > kDirectEvaluationLimit) {
    const double log_value = log_main_bound(n_total, delta, ell_j, k);
    if (log_value > std::log(std::numeric_limits<double>::max())) {
      return std::numeric_limits<double>::infinity();
    }
    return std::exp(log_value);
  }
  return std::pow(2.0 / delta, n) * (2.0 / factorial(k)) *
         std::pow(0.5 + n / delta, ell_j - 1 - k);
}

double rising_factorial(int n_total, int t) {
  if (t < 0) throw Error(ErrorKind::InvalidArgument, "rising_factorial needs t >= 0");
  double out = 1.0;
  for (int r = 0; r < t; ++r) out *= static_cast<double>(n_total + r);
  return out;
}

std::optional<UInt128> rising_factorial_exact(int n_total, int t) {
  if (t < 0 || n_total < 0) throw Error(ErrorKind::InvalidArgument, "rising_factorial needs N, t >= 0");
  UInt128 out = 1;
  for (int r = 0; r < t; ++r) {
    if (!checked_mul(out, static_cast<UInt128>(n_total + r), out)) return std::nullopt;
  }
  return out;
}

std::optional<UInt128> rising_factorial_by_recursion(int n_total, int t) {
  if (t < 0 || n_total < 0) throw Error(ErrorKind::InvalidArgument, "rising_factorial needs N, t >= 0");
  std::vector<UInt128> p(static_cast<std::size_t>(t) + 1);
  p[0] = 1;
  for (int s = 1; s <= t; ++s) {
    UInt128 sum = 0;
    // (s-1)!/k! = (k+1)(k+2)...(s-1), built downward from k = s-1
    UInt128 ratio = 1;
    for (int k = s - 1; k >= 0; --k) {
      if (k < s - 1 && !checked_mul(ratio, static_cast<UInt128>(k + 1), ratio)) return std::nullopt;
      UInt128 term = 0;
      if (!checked_mul(ratio, p[static_cast<std::size_t>(k)], term)) return std::nullopt;
      if (!checked_add(sum, term, sum)) return std::nullopt;
    }
    if (!checked_mul(sum, static_cast<UInt128>(n_total), p[static_cast<std::size_t>(s)])) {
      return std::nullopt;
    }
  }
  return p[static_cast<std::size_t>(t)];
}

double lemma_bound(int n_total, double delta, int t) {
  if (!(delta > 0.0) || t < 0) {
    throw Error(ErrorKind::InvalidArgument, "lemma_bound needs delta > 0 and t >= 0");
  }
  const double exponent = -static_cast<double>(n_total + t);
  if (std::abs(exponent * std::log(delta)) > kDirectEvaluationLimit) {
    const double log_p = std::lgamma(n_total + static_cast<double>(t)) - std::lgamma(n_total);
    const double log_value = log_p + exponent * std::log(delta);
    if (log_value > std::log(std::numeric_limits<double>::max())) {
      return std::numeric_limits<double>::infinity();
    }
    return std::exp(log_value);
  }
  return rising_factorial(n_total, t) * std::pow(delta, exponent);
}

CoefficientSumBound coefficient_sum_bound(const NodeConfiguration& config, std::size_t j, int k,
                                          int t) {
  if (j >= config.node_count()) {
    throw Error(ErrorKind::InvalidArgument, "node index " + std::to_string(j) + " out of range");
  }
  if (k < 0 || t < 0) throw Error(ErrorKind::InvalidArgument, "k and t must be nonnegative");
  CoefficientSumBound out;
  out.bound = std::pow(1.0 + std::abs(config.node(j)), k + t);
  for (std::size_t i = 0; i < config.node_count(); ++i) {
    if (i == j) continue;
    out.bound *= std::pow(1.0 + std::abs(config.node(i)), config.multiplicity(i));
  }
  out.cap = std::ldexp(1.0, config.total_multiplicity() - (config.multiplicity(j) - k - t));
  return out;
}

bool BoundReport::all_satisfied() const noexcept {
  for (const auto& r : records) {
    if (!r.satisfied) return false;
  }
  return true;
}

BoundReport verify_bounds(const NodeConfiguration& config, const InverseRows& rows) {
  const SeparationInfo sep = separation(config);
  if (!sep.in_unit_disk) {
    throw Error(ErrorKind::HypothesisViolated, "a node lies outside the closed unit disk");
  }
  BoundReport report;
  report.n_total = config.total_multiplicity();
  report.delta = sep.delta;
  report.multiplicities.assign(config.multiplicities().begin(), config.multiplicities().end());
  for (std::size_t j = 0; j < config.node_count(); ++j) {
    const int ell = config.multiplicity(j);
    for (int k = 0; k < ell; ++k) {
      BoundRecord rec;
      rec.node = j;
      rec.k = k;
      rec.empirical_norm = rows.l1_norm(j, k);
      rec.bound = main_bound(report.n_total, sep.delta, ell, k);
      rec.ratio = std::isinf(rec.bound) ? 0.0 : rec.empirical_norm / rec.bound;
      rec.satisfied = rec.empirical_norm <= rec.bound * (1.0 + kBoundSlack);
      report.records.push_back(rec);
    }
  }
  return report;
}

}  // namespace cvinv
