#pragma once

#include <array>
#include <cstddef>

#include "cvinv/node_config.hpp"

namespace cvinv {

namespace detail {

inline constexpr std::array<double, kMaxTotalMultiplicity + 1> make_factorials() {
  std::array<double, kMaxTotalMultiplicity + 1> table{};
  table[0] = 1.0;
  for (std::size_t i = 1; i < table.size(); ++i) {
    table[i] = table[i - 1] * static_cast<double>(i);
  }
  return table;
}

inline constexpr auto kFactorials = make_factorials();

}  // namespace detail

/// m! in double precision, 0 <= m <= 170.
inline double factorial(int m) { return detail::kFactorials.at(static_cast<std::size_t>(m)); }

/// C(m, s); zero when s is outside [0, m].
inline double binomial(int m, int s) {
  if (s < 0 || s > m) return 0.0;
  return factorial(m) / (factorial(s) * factorial(m - s));
}

}  // namespace cvinv
