#include "reach.hpp"

#include <stdexcept>

namespace zerosum::detail {

namespace {

// dst |= (src shifted by delta bits), keeping only bits below width.
// Source rows carry no bits at or above width, so right shifts import no
// garbage; left shifts mask the top word.
void or_shifted(std::uint64_t* dst, const std::uint64_t* src, std::size_t words,
                std::int64_t delta, std::uint64_t tail_mask) {
  if (delta == 0) {
    for (std::size_t w = 0; w < words; ++w) dst[w] |= src[w];
    return;
  }
  if (delta > 0) {
    const auto ws = static_cast<std::size_t>(delta) / 64;
    const unsigned bs = static_cast<unsigned>(delta % 64);
    if (ws >= words) return;
    for (std::size_t w = words; w-- > ws;) {
      std::uint64_t v = src[w - ws] << bs;
      if (bs != 0 && w - ws > 0) v |= src[w - ws - 1] >> (64 - bs);
      if (w == words - 1) v &= tail_mask;
      dst[w] |= v;
    }
  } else {
    const auto d = static_cast<std::uint64_t>(-delta);
    const auto ws = static_cast<std::size_t>(d / 64);
    const unsigned bs = static_cast<unsigned>(d % 64);
    if (ws >= words) return;
    for (std::size_t w = 0; w + ws < words; ++w) {
      std::uint64_t v = src[w + ws] >> bs;
      if (bs != 0 && w + ws + 1 < words) v |= src[w + ws + 1] << (64 - bs);
      dst[w] |= v;
    }
  }
}

}  // namespace

ReachTable::ReachTable(std::int64_t min_sum, std::int64_t max_sum, std::size_t max_card)
    : min_sum_(min_sum), max_sum_(max_sum) {
  if (min_sum > 0 || max_sum < 0)
    throw std::invalid_argument("sum window must contain 0");
  const auto width = static_cast<std::uint64_t>(max_sum - min_sum) + 1;
  rows_ = max_card + 1;
  const std::uint64_t words = (width + 63) / 64;
  if (width > (std::uint64_t{1} << 31) || words * rows_ > (std::uint64_t{1} << 27))
    throw std::length_error("reachability table too large");
  width_ = static_cast<std::size_t>(width);
  words_ = static_cast<std::size_t>(words);
  const unsigned tail_bits = width_ % 64;
  tail_mask_ = tail_bits == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << tail_bits) - 1);
  bits_.assign(words_ * rows_, 0);
  const auto zero_idx = static_cast<std::size_t>(-min_sum_);
  bits_[zero_idx / 64] = std::uint64_t{1} << (zero_idx % 64);
}

void ReachTable::apply_chunk(std::uint64_t take, std::int64_t sum_delta) {
  if (take >= rows_) return;
  if (sum_delta >= static_cast<std::int64_t>(width_) ||
      -sum_delta >= static_cast<std::int64_t>(width_))
    return;  // every bit would shift out of the window
  const auto t = static_cast<std::size_t>(take);
  for (std::size_t c = rows_ - 1; c >= t && c > 0; --c) {
    or_shifted(bits_.data() + c * words_, bits_.data() + (c - t) * words_,
               words_, sum_delta, tail_mask_);
  }
}

void ReachTable::add_terms(int value, std::uint64_t count) {
  std::uint64_t chunk = 1;
  while (count > 0) {
    const std::uint64_t take = chunk < count ? chunk : count;
    apply_chunk(take, static_cast<std::int64_t>(take) * value);
    count -= take;
    chunk *= 2;
  }
}

}  // namespace zerosum::detail
