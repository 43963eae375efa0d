#include "zerosum/seq.hpp"

#include <algorithm>
#include <charconv>

namespace zerosum {

namespace {

std::uint64_t checked_total(const std::vector<std::uint64_t>& mult) {
  std::uint64_t total = 0;
  for (std::uint64_t m : mult) {
    if (m > Seq::max_length || total > Seq::max_length - m)
      throw std::length_error("sequence length exceeds 2^32");
    total += m;
  }
  return total;
}

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

}  // namespace

Seq::Seq(Interval iv, std::vector<std::uint64_t> mult)
    : interval_(iv), mult_(std::move(mult)) {
  if (mult_.size() != interval_.value_count())
    throw std::invalid_argument("multiplicity vector must have 2k+1 entries");
  length_ = checked_total(mult_);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < mult_.size(); ++i)
    s += static_cast<std::int64_t>(interval_.value_at(i)) *
         static_cast<std::int64_t>(mult_[i]);
  sum_ = s;
}

Seq Seq::parse(std::string_view text, int k) {
  const Interval iv(k);
  std::vector<std::uint64_t> mult(iv.value_count(), 0);
  std::uint64_t total = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_separator(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_separator(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;

    std::string_view value_part = token;
    std::string_view mult_part;
    bool has_mult = false;
    if (const auto caret = token.find('^'); caret != std::string_view::npos) {
      value_part = token.substr(0, caret);
      mult_part = token.substr(caret + 1);
      has_mult = true;
    }

    std::int64_t value = 0;
    const auto [vp, vec] =
        std::from_chars(value_part.data(), value_part.data() + value_part.size(), value);
    if (value_part.empty() || vec != std::errc{} ||
        vp != value_part.data() + value_part.size())
      throw ParseError("malformed term '" + std::string(token) + "'");
    if (value < iv.min_value() || value > iv.max_value())
      throw ParseError("value " + std::to_string(value) + " outside [-" +
                       std::to_string(k) + "," + std::to_string(k) + "]");

    std::uint64_t count = 1;
    if (has_mult) {
      if (!mult_part.empty() && (mult_part[0] == '-' || mult_part[0] == '+'))
        throw ParseError("multiplicity must be nonnegative in '" + std::string(token) + "'");
      const auto [mp, mec] =
          std::from_chars(mult_part.data(), mult_part.data() + mult_part.size(), count);
      if (mult_part.empty() || mec != std::errc{} ||
          mp != mult_part.data() + mult_part.size())
        throw ParseError("malformed multiplicity in '" + std::string(token) + "'");
    }

    if (count > max_length || total > max_length - count)
      throw ParseError("sequence length exceeds 2^32");
    total += count;
    mult[iv.index_of(static_cast<int>(value))] += count;
  }
  return Seq(iv, std::move(mult));
}

bool Seq::contains(const Seq& sub) const {
  if (sub.interval_ != interval_) return false;
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (sub.mult_[i] > mult_[i]) return false;
  return true;
}

std::string Seq::str() const {
  std::string out;
  for (int v = interval_.max_value(); v >= interval_.min_value(); --v) {
    const std::uint64_t m = mult(v);
    if (m == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(v);
    if (m > 1) {
      out += '^';
      out += std::to_string(m);
    }
  }
  return out;
}

Seq negate(const Seq& s) {
  std::vector<std::uint64_t> mult(s.mults().begin(), s.mults().end());
  std::reverse(mult.begin(), mult.end());
  return Seq(s.interval(), std::move(mult));
}

Seq concat(const Seq& a, const Seq& b) {
  if (a.interval() != b.interval())
    throw std::invalid_argument("cannot concatenate sequences over different intervals");
  std::vector<std::uint64_t> mult(a.mults().begin(), a.mults().end());
  for (std::size_t i = 0; i < mult.size(); ++i) mult[i] += b.mults()[i];
  return Seq(a.interval(), std::move(mult));
}

Seq remove(const Seq& s, const Seq& r) {
  if (s.interval() != r.interval())
    throw std::invalid_argument("cannot remove across different intervals");
  if (!s.contains(r))
    throw std::invalid_argument("not a subsequence of the source");
  std::vector<std::uint64_t> mult(s.mults().begin(), s.mults().end());
  for (std::size_t i = 0; i < mult.size(); ++i) mult[i] -= r.mults()[i];
  return Seq(s.interval(), std::move(mult));
}

Seq power(const Seq& s, std::uint64_t d) {
  if (d == 0 || s.empty()) return Seq(s.interval());
  if (d > Seq::max_length / s.length())
    throw std::length_error("sequence length exceeds 2^32");
  std::vector<std::uint64_t> mult(s.mults().begin(), s.mults().end());
  for (auto& m : mult) m *= d;
  return Seq(s.interval(), std::move(mult));
}

bool canonical_less(const Seq& a, const Seq& b) {
  if (a.interval() != b.interval())
    throw std::invalid_argument("cannot order sequences over different intervals");
  const auto am = a.mults();
  const auto bm = b.mults();
  for (std::size_t i = am.size(); i-- > 0;) {  // descending value order
    if (am[i] != bm[i]) return am[i] < bm[i];
  }
  return false;
}

Seq canonicalize_sign(const Seq& s) {
  const auto m = s.mults();
  const std::size_t n = m.size();
  for (std::size_t off = 0; off < n; ++off) {
    // descending read of s against the descending read of -s
    const std::uint64_t own = m[n - 1 - off];
    const std::uint64_t neg = m[off];
    if (own != neg) return own > neg ? s : negate(s);
  }
  return s;
}

}  // namespace zerosum
