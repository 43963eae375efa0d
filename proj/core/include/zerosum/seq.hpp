#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zerosum {

/// Error raised for malformed sequence text or out-of-domain terms.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric integer interval [-k, k], the term domain.
class Interval {
 public:
  static constexpr int max_half_width = 64;

  explicit Interval(int k) : k_(k) {
    if (k < 1 || k > max_half_width)
      throw std::invalid_argument("interval half-width must be in [1, 64]");
  }

  int half_width() const { return k_; }
  int min_value() const { return -k_; }
  int max_value() const { return k_; }
  std::size_t value_count() const { return static_cast<std::size_t>(2 * k_ + 1); }

  bool contains(int v) const { return v >= -k_ && v <= k_; }

  /// Position of v in ascending value order, i.e. v + k.
  std::size_t index_of(int v) const { return static_cast<std::size_t>(v + k_); }
  int value_at(std::size_t i) const { return static_cast<int>(i) - k_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  int k_;
};

/// Unordered multiset of integers from an interval, stored as one
/// multiplicity per value. Immutable after construction; length and sum are
/// derived once and can never go stale.
class Seq {
 public:
  static constexpr std::uint64_t max_length = std::uint64_t{1} << 32;

  explicit Seq(Interval iv) : interval_(iv), mult_(iv.value_count(), 0) {}

  /// mult holds multiplicities in ascending value order (index 0 is -k).
  Seq(Interval iv, std::vector<std::uint64_t> mult);

  /// Parses "3^2,-2^3" style text: terms separated by commas or blanks,
  /// each a value with an optional ^multiplicity; repeated mentions of a
  /// value accumulate.
  static Seq parse(std::string_view text, int k);

  const Interval& interval() const { return interval_; }
  std::uint64_t mult(int v) const { return mult_[interval_.index_of(v)]; }
  std::span<const std::uint64_t> mults() const { return mult_; }

  std::uint64_t length() const { return length_; }
  std::int64_t sum() const { return sum_; }
  bool empty() const { return length_ == 0; }
  bool zero_sum() const { return sum_ == 0; }

  /// True when sub fits componentwise under this multiset.
  bool contains(const Seq& sub) const;

  /// Grammar text with values in descending order, e.g. "3^2,-2^3".
  std::string str() const;

  friend bool operator==(const Seq&, const Seq&) = default;

 private:
  Interval interval_;
  std::vector<std::uint64_t> mult_;
  std::uint64_t length_ = 0;
  std::int64_t sum_ = 0;
};

/// A subsequence uses the same representation as its parent; validate with
/// parent.contains(sub).
using SubSeq = Seq;

Seq negate(const Seq& s);
Seq concat(const Seq& a, const Seq& b);

/// Complement of r in s; r must fit componentwise under s.
Seq remove(const Seq& s, const Seq& r);

/// d-fold repetition of s; d = 0 gives the empty sequence.
Seq power(const Seq& s, std::uint64_t d);

/// Total order on same-interval sequences: lexicographic on multiplicities
/// read from value k down to -k. Catalog listings use this order.
bool canonical_less(const Seq& a, const Seq& b);

/// Sign representative shared by s and -s: whichever of the two is
/// canonically greater, which puts weight on positive values first.
/// Idempotent.
Seq canonicalize_sign(const Seq& s);

}  // namespace zerosum
