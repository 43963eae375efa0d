#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "zerosum/seq.hpp"

namespace zerosum {

/// Decomposition of a zero-sum sequence into minimal zero-sum parts whose
/// concatenation equals the source.
struct Factorization {
  Seq source;
  std::vector<Seq> parts;
};

/// Factors a zero-sum sequence by repeatedly extracting a shortest nonempty
/// zero-sum sub-multiset; a shortest one is automatically minimal. The
/// witness reconstruction fixes the tie-break, so the output is a function
/// of the input.
Factorization factorize_minimal(const Seq& s);

/// Length profile of a factorization: the set L of occurring part lengths,
/// alpha = max L, and the count of parts per length.
struct Profile {
  std::vector<std::uint64_t> lengths;            // L, ascending
  std::uint64_t alpha = 0;                       // 0 for an empty factorization
  std::map<std::uint64_t, std::uint64_t> count;  // length -> number of parts
};

Profile profile(const Factorization& f);

/// Split of an integer list produced by beta_factorize: every part has at
/// most beta terms and a sum divisible by beta, while no nonempty
/// sub-multiset of x0 has a sum divisible by beta (forcing |x0| <= beta-1).
/// x0 and the parts together are a permutation of the input.
struct BetaFactorization {
  std::uint64_t beta;
  std::vector<std::int64_t> x0;
  std::vector<std::vector<std::int64_t>> parts;
};

/// Repeatedly extracts a minimum-cardinality nonempty sub-multiset of the
/// remainder whose sum is divisible by beta, found through residue-layer
/// reachability; ties go to the earliest indices, so the output is a
/// function of the input order. Requires beta >= 1.
BetaFactorization beta_factorize(std::span<const std::int64_t> xs, std::uint64_t beta);

/// Length-profile test: computes one minimal factorization and returns true
/// iff some part length beta with at least alpha-1 parts satisfies
/// |s| > t - beta + (beta-1) * max(L minus {beta}), the maximum over an
/// empty set being 0. A true result proves s contains a zero-sum
/// sub-multiset with exactly t terms. Requires sum 0, k >= 2, and t
/// divisible by every integer in [1, 2k-1].
bool profile_bound_predict(const Seq& s, std::uint64_t t);

}  // namespace zerosum
