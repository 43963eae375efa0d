#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zerosum::detail {

// Layered reachability of (cardinality, sum) pairs over a growing multiset.
//
// Row c holds one bit per sum in [min_sum, max_sum]; a set bit means some
// sub-multiset with exactly c of the added terms attains that sum. The
// window must cover every sub-multiset sum of the terms that will ever be
// added; sums of subsets of a partially added multiset cannot escape the
// total negative/positive part bounds, so [-(negative part), positive part]
// of the final multiset is always a safe window. Cardinalities above
// max_card are discarded, which is sound because lower rows never depend on
// higher ones.
class ReachTable {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ReachTable(std::int64_t min_sum, std::int64_t max_sum, std::size_t max_card);

  void add_term(int value) { apply_chunk(1, value); }

  // Bounded multiplicity through power-of-two chunks, so the cost per value
  // class is logarithmic in the count.
  void add_terms(int value, std::uint64_t count);

  std::size_t max_card() const { return rows_ - 1; }

  bool contains(std::size_t card, std::int64_t sum) const {
    if (card >= rows_ || sum < min_sum_ || sum > max_sum_) return false;
    const auto idx = static_cast<std::size_t>(sum - min_sum_);
    return (bits_[card * words_ + idx / 64] >> (idx % 64)) & 1;
  }

  bool zero_sum_at(std::size_t card) const { return contains(card, 0); }

  // Smallest c in [lo, hi] with a zero-sum sub-multiset of exactly c terms.
  std::size_t first_zero_sum_in(std::size_t lo, std::size_t hi) const {
    for (std::size_t c = lo; c <= hi && c < rows_; ++c)
      if (zero_sum_at(c)) return c;
    return npos;
  }

 private:
  void apply_chunk(std::uint64_t take, std::int64_t sum_delta);

  std::int64_t min_sum_;
  std::int64_t max_sum_;
  std::size_t width_ = 0;
  std::size_t words_ = 0;
  std::size_t rows_ = 0;
  std::uint64_t tail_mask_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace zerosum::detail
