#pragma once

#include <cstdint>
#include <utility>

namespace zerosum::detail {

// Multiset enumeration assigns one multiplicity per value class, pair by
// pair: +k, -k, +k-1, -(k-1), ..., +1, -1, 0. Interleaving the pairs lets
// the sign-representative constraint resolve in enumeration order: while
// every completed pair is balanced, the negative side may not exceed the
// positive side.
inline int class_value(int k, std::size_t idx) {
  if (idx == static_cast<std::size_t>(2 * k)) return 0;
  const int v = k - static_cast<int>(idx / 2);
  return idx % 2 == 0 ? v : -v;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {  // b > 0
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

// Feasible multiplicity range for the class holding `value`, given the
// remaining term budget M and the running sum. The not-yet-assigned classes
// form a dense value range (including 0 at the end), so a completion exists
// exactly when the residual sum fits the per-term bounds; the range below is
// tight, not just a relaxation.
inline std::pair<std::int64_t, std::int64_t> feasible_range(int value, std::int64_t M,
                                                            std::int64_t sum) {
  if (value > 0) {
    // remaining values lie in [-v, v-1]
    const std::int64_t v = value;
    const std::int64_t lo = -sum - (v - 1) * M;
    const std::int64_t hi = floor_div(v * M - sum, 2 * v);
    return {lo > 0 ? lo : 0, hi < M ? hi : M};
  }
  if (value < 0) {
    // remaining values lie in [-(v-1), v-1]
    const std::int64_t v = -static_cast<std::int64_t>(value);
    const std::int64_t lo = sum - (v - 1) * M;
    const std::int64_t hi = floor_div(sum + (v - 1) * M, 2 * v - 1);
    return {lo > 0 ? lo : 0, hi < M ? hi : M};
  }
  // zero class: it has to absorb the whole remaining budget, and only a
  // cancelled sum can still reach zero
  if (sum != 0) return {1, 0};
  return {M, M};
}

}  // namespace zerosum::detail
