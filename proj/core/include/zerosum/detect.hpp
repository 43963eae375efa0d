#pragma once

#include <cstdint>
#include <vector>

#include "zerosum/seq.hpp"

namespace zerosum {

/// Set of cardinalities in [0, n] for which a zero-sum sub-multiset with
/// exactly that many terms exists. 0 is always a member (the empty
/// subsequence), and for a zero-sum sequence membership is closed under
/// complement: l is in the set iff n - l is.
class Spectrum {
 public:
  Spectrum(std::uint64_t n, std::vector<std::uint64_t> words)
      : n_(n), words_(std::move(words)) {}

  std::uint64_t n() const { return n_; }

  bool contains(std::uint64_t len) const {
    if (len > n_) return false;
    return (words_[len / 64] >> (len % 64)) & 1;
  }

  std::vector<std::uint64_t> lengths() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t l = 0; l <= n_; ++l)
      if (contains(l)) out.push_back(l);
    return out;
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> words_;
};

/// Exact spectrum, computed by a cardinality-layered reachability table over
/// shifted sums, one value class at a time.
Spectrum spectrum(const Seq& s);

/// Exhaustive oracle with the same contract as spectrum. Refuses instances
/// with more than 2^24 sub-multisets.
Spectrum brute_spectrum(const Seq& s);

/// Same answer as spectrum(s).contains(t), but caps the table at t layers
/// (or the complement length for zero-sum input) and exits as soon as the
/// target becomes reachable.
bool contains_length(const Seq& s, std::uint64_t t);

/// Deterministic zero-sum sub-multiset with exactly t terms. Requires t to
/// be in spectrum(s). Reconstruction walks value classes in descending
/// order, greedily taking as many copies of the current value as the
/// remaining classes can still cancel.
SubSeq witness(const Seq& s, std::uint64_t t);

}  // namespace zerosum
