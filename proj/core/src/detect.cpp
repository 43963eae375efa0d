#include "zerosum/detect.hpp"

#include <cstdlib>
#include <utility>

#include "reach.hpp"

namespace zerosum {

namespace {

struct SumParts {
  std::int64_t neg;  // absolute value of the negative part
  std::int64_t pos;
};

SumParts sum_parts(const Seq& s) {
  SumParts parts{0, 0};
  const Interval& iv = s.interval();
  for (std::size_t i = 0; i < iv.value_count(); ++i) {
    const auto v = static_cast<std::int64_t>(iv.value_at(i));
    const auto m = static_cast<std::int64_t>(s.mults()[i]);
    if (v < 0)
      parts.neg += -v * m;
    else
      parts.pos += v * m;
  }
  return parts;
}

std::vector<std::uint64_t> empty_bits(std::uint64_t n) {
  return std::vector<std::uint64_t>((n + 64) / 64, 0);
}

void set_bit(std::vector<std::uint64_t>& words, std::uint64_t idx) {
  words[idx / 64] |= std::uint64_t{1} << (idx % 64);
}

}  // namespace

Spectrum spectrum(const Seq& s) {
  const std::uint64_t n = s.length();
  const auto parts = sum_parts(s);
  detail::ReachTable table(-parts.neg, parts.pos, static_cast<std::size_t>(n));
  const Interval& iv = s.interval();
  for (int v = iv.max_value(); v >= iv.min_value(); --v)
    if (const auto m = s.mult(v); m > 0) table.add_terms(v, m);

  auto words = empty_bits(n);
  for (std::uint64_t l = 0; l <= n; ++l)
    if (table.zero_sum_at(static_cast<std::size_t>(l))) set_bit(words, l);
  return Spectrum(n, std::move(words));
}

Spectrum brute_spectrum(const Seq& s) {
  std::uint64_t combos = 1;
  for (const auto m : s.mults()) {
    combos *= m + 1;
    if (combos > (std::uint64_t{1} << 24))
      throw std::length_error("brute_spectrum instance too large");
  }

  const std::uint64_t n = s.length();
  auto words = empty_bits(n);
  const Interval& iv = s.interval();
  const auto rec = [&](auto&& self, std::size_t idx, std::uint64_t len,
                       std::int64_t sum) -> void {
    if (idx == iv.value_count()) {
      if (sum == 0) set_bit(words, len);
      return;
    }
    const auto m = s.mults()[idx];
    const auto v = static_cast<std::int64_t>(iv.value_at(idx));
    for (std::uint64_t j = 0; j <= m; ++j) self(self, idx + 1, len + j, sum + static_cast<std::int64_t>(j) * v);
  };
  rec(rec, 0, 0, 0);
  return Spectrum(n, std::move(words));
}

bool contains_length(const Seq& s, std::uint64_t t) {
  const std::uint64_t n = s.length();
  if (t > n) return false;
  if (t == 0) return true;

  // For zero-sum input a sub-multiset of length t exists iff one of length
  // n - t does, so the cheaper side decides.
  std::uint64_t goal = t;
  if (s.sum() == 0 && n - t < goal) goal = n - t;
  if (goal == 0) return true;

  const auto parts = sum_parts(s);
  detail::ReachTable table(-parts.neg, parts.pos, static_cast<std::size_t>(goal));
  const Interval& iv = s.interval();
  for (int v = iv.max_value(); v >= iv.min_value(); --v) {
    if (const auto m = s.mult(v); m > 0) {
      table.add_terms(v, m);
      if (table.zero_sum_at(static_cast<std::size_t>(goal))) return true;
    }
  }
  return false;
}

SubSeq witness(const Seq& s, std::uint64_t t) {
  if (!contains_length(s, t))
    throw std::invalid_argument("no zero-sum subsequence of length " + std::to_string(t));
  const Interval& iv = s.interval();
  std::vector<std::uint64_t> chosen(iv.value_count(), 0);
  if (t == 0) return Seq(iv, std::move(chosen));

  std::vector<std::pair<int, std::uint64_t>> classes;
  for (int v = iv.max_value(); v >= iv.min_value(); --v)
    if (const auto m = s.mult(v); m > 0) classes.emplace_back(v, m);

  std::uint64_t need = t;
  std::int64_t sum_need = 0;
  for (std::size_t i = 0; i < classes.size() && need > 0; ++i) {
    // reachability over the classes after i, capped at the remaining count
    std::int64_t neg = 0, pos = 0;
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const auto [v, m] = classes[j];
      const auto mm = static_cast<std::int64_t>(m);
      if (v < 0)
        neg += -static_cast<std::int64_t>(v) * mm;
      else
        pos += static_cast<std::int64_t>(v) * mm;
    }
    detail::ReachTable suffix(-neg, pos, static_cast<std::size_t>(need));
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      suffix.add_terms(classes[j].first, classes[j].second);

    const auto [v, m] = classes[i];
    bool placed = false;
    for (std::uint64_t j = std::min<std::uint64_t>(m, need) + 1; j-- > 0;) {
      const std::int64_t rest = sum_need - static_cast<std::int64_t>(j) * v;
      if (suffix.contains(static_cast<std::size_t>(need - j), rest)) {
        chosen[iv.index_of(v)] = j;
        need -= j;
        sum_need = rest;
        placed = true;
        break;
      }
    }
    if (!placed) throw std::logic_error("witness reconstruction lost reachability");
  }
  if (need != 0 || sum_need != 0)
    throw std::logic_error("witness reconstruction incomplete");
  return Seq(iv, std::move(chosen));
}

}  // namespace zerosum
