#pragma once

// Shared helpers for the unit and acceptance suites: deterministic random
// generators and independent validators. Validators throw std::runtime_error
// with a description instead of using a test framework, so both suites can
// use them.

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zerosum/detect.hpp"
#include "zerosum/factorize.hpp"
#include "zerosum/seq.hpp"

namespace testsupport {

using namespace zerosum;

inline Seq S(int k, std::string_view text) { return Seq::parse(text, k); }

inline void expect(bool condition, const std::string& what) {
  if (!condition) throw std::runtime_error(what);
}

inline Seq random_seq(std::mt19937& rng, int k, std::uint64_t max_len) {
  const Interval iv(k);
  std::uniform_int_distribution<std::uint64_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> value_dist(-k, k);
  std::vector<std::uint64_t> mult(iv.value_count(), 0);
  const std::uint64_t n = len_dist(rng);
  for (std::uint64_t i = 0; i < n; ++i) ++mult[iv.index_of(value_dist(rng))];
  return Seq(iv, std::move(mult));
}

// Random terms balanced back to sum zero with the largest usable steps, so
// the total stays within roughly max_len.
inline Seq random_zero_sum(std::mt19937& rng, int k, std::uint64_t max_len) {
  const Interval iv(k);
  std::uniform_int_distribution<std::uint64_t> len_dist(0, max_len > 1 ? (max_len - 1) / 2 : 0);
  std::uniform_int_distribution<int> value_dist(-k, k);
  std::vector<std::uint64_t> mult(iv.value_count(), 0);
  std::int64_t sum = 0;
  const std::uint64_t n = len_dist(rng);
  for (std::uint64_t i = 0; i < n; ++i) {
    const int v = value_dist(rng);
    ++mult[iv.index_of(v)];
    sum += v;
  }
  while (sum != 0) {
    const auto step = static_cast<int>(std::min<std::int64_t>(k, sum > 0 ? sum : -sum));
    const int v = sum > 0 ? -step : step;
    ++mult[iv.index_of(v)];
    sum += v;
  }
  return Seq(iv, std::move(mult));
}

inline std::vector<std::int64_t> random_int_list(std::mt19937& rng, std::size_t max_len,
                                                 std::int64_t max_abs) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::int64_t> value_dist(-max_abs, max_abs);
  std::vector<std::int64_t> out(len_dist(rng));
  for (auto& x : out) x = value_dist(rng);
  return out;
}

inline void check_witness_valid(const Seq& parent, const Seq& sub, std::uint64_t t) {
  expect(sub.length() == t, "witness has wrong length");
  expect(sub.sum() == 0, "witness does not sum to zero");
  expect(parent.contains(sub), "witness is not a sub-multiset of the parent");
}

// Minimality of every part is established with the exhaustive oracle, so
// the check does not ride on the implementation it validates.
inline void check_factorization_valid(const Factorization& f) {
  Seq rebuilt(f.source.interval());
  for (const Seq& part : f.parts) {
    expect(!part.empty(), "factorization contains an empty part");
    expect(part.sum() == 0, "factorization part does not sum to zero");
    const auto spec = brute_spectrum(part);
    for (std::uint64_t l = 1; l < part.length(); ++l)
      expect(!spec.contains(l), "factorization part is not minimal");
    rebuilt = concat(rebuilt, part);
  }
  expect(rebuilt == f.source, "factorization parts do not rebuild the source");
  expect(f.source.empty() || !f.parts.empty(), "nonempty source factored into no parts");
}

inline void check_beta_factorization_valid(std::span<const std::int64_t> input,
                                           const BetaFactorization& bf) {
  const auto beta = static_cast<std::int64_t>(bf.beta);
  std::vector<std::int64_t> pieces(bf.x0);
  for (const auto& part : bf.parts) {
    expect(!part.empty(), "empty divisible part");
    expect(part.size() <= bf.beta, "divisible part has more than beta terms");
    std::int64_t sum = 0;
    for (const auto x : part) sum += x;
    expect(sum % beta == 0, "part sum not divisible by beta");
    pieces.insert(pieces.end(), part.begin(), part.end());
  }

  std::vector<std::int64_t> sorted_input(input.begin(), input.end());
  std::sort(sorted_input.begin(), sorted_input.end());
  std::sort(pieces.begin(), pieces.end());
  expect(pieces == sorted_input, "x0 and parts are not a permutation of the input");

  expect(bf.x0.size() < bf.beta, "x0 has beta or more terms");
  // exhaustive: no nonempty subset of x0 sums to 0 mod beta
  expect(bf.x0.size() < 63, "x0 too large for the exhaustive check");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << bf.x0.size()); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < bf.x0.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) sum += bf.x0[i];
    expect(sum % beta != 0, "a subset of x0 sums to 0 mod beta");
  }
}

}  // namespace testsupport
