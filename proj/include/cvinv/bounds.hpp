#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cvinv/confluent_vandermonde.hpp"
#include "cvinv/node_config.hpp"

namespace cvinv {

/// Multiplicative roundoff allowance used when comparing a norm to its bound.
inline constexpr double kBoundSlack = 1e-12;

/**
 * Row-norm bound for u_{j,k}:
 *
 *   (2/delta)^N * (2/k!) * (1/2 + N/delta)^(l_j - 1 - k).
 *
 * Evaluated directly while N |ln(2/delta)| <= 700 and in the log domain
 * otherwise. Returns +inf when the value exceeds the double range.
 */
double main_bound(int n_total, double delta, int ell_j, int k);

/// Natural log of main_bound; always finite for valid arguments.
double log_main_bound(int n_total, double delta, int ell_j, int k);

__extension__ typedef unsigned __int128 UInt128;

/// N (N+1) ... (N+t-1) as a double. P_0 = 1.
double rising_factorial(int n_total, int t);

/// Closed-form rising factorial in exact integer arithmetic; nullopt on overflow.
std::optional<UInt128> rising_factorial_exact(int n_total, int t);

/// The same quantity from P_0 = 1, P_t = N sum_{k<t} ((t-1)!/k!) P_k, exactly.
std::optional<UInt128> rising_factorial_by_recursion(int n_total, int t);

/// Derivative bound |h_j^{(t)}(x_j)| <= P_t(N) delta^(-N-t).
double lemma_bound(int n_total, double delta, int t);

struct CoefficientSumBound {
  /// (1+|x_j|)^(k+t) prod_{i != j} (1+|x_i|)^{l_i}
  double bound = 0.0;
  /// 2^(N - (l_j - k - t)); dominates `bound` when every |x_i| <= 1.
  double cap = 0.0;
};

CoefficientSumBound coefficient_sum_bound(const NodeConfiguration& config, std::size_t j, int k,
                                          int t);

struct BoundRecord {
  std::size_t node = 0;
  int k = 0;
  double empirical_norm = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  bool satisfied = false;

  bool operator==(const BoundRecord&) const = default;
};

struct BoundReport {
  int n_total = 0;
  double delta = 0.0;
  std::vector<int> multiplicities;
  std::vector<BoundRecord> records;

  bool all_satisfied() const noexcept;
};

/**
 * Compare every ||u_{j,k}||_1 against main_bound.
 * Throws Error(SingleNode) when n == 1 and Error(HypothesisViolated) when a
 * node lies outside the closed unit disk.
 */
BoundReport verify_bounds(const NodeConfiguration& config, const InverseRows& rows);

}  // namespace cvinv
