#include "zerosum/factorize.hpp"

#include <algorithm>
#include <cstdlib>

#include "zerosum/detect.hpp"

namespace zerosum {

namespace {

// Reachable (cardinality, residue) pairs over a growing list of residues,
// one byte per cell; beta stays small in practice so plain bytes beat bit
// fiddling on the cyclic axis.
class ResidueReach {
 public:
  ResidueReach(std::uint64_t beta, std::size_t max_card)
      : beta_(beta), rows_(max_card + 1), bits_(rows_ * beta_, 0) {
    bits_[0] = 1;
  }

  void add(std::uint64_t residue) {
    for (std::size_t c = rows_ - 1; c >= 1; --c) {
      const std::uint8_t* src = bits_.data() + (c - 1) * beta_;
      std::uint8_t* dst = bits_.data() + c * beta_;
      for (std::uint64_t r = 0; r < beta_; ++r) {
        if (src[r]) dst[(r + residue) % beta_] = 1;
      }
    }
  }

  bool at(std::size_t card, std::uint64_t residue) const {
    return card < rows_ && bits_[card * beta_ + residue] != 0;
  }

 private:
  std::uint64_t beta_;
  std::size_t rows_;
  std::vector<std::uint8_t> bits_;
};

}  // namespace

Factorization factorize_minimal(const Seq& s) {
  if (s.sum() != 0)
    throw std::invalid_argument("factorize_minimal requires a zero-sum sequence");
  Factorization f{s, {}};
  Seq rest = s;
  while (!rest.empty()) {
    const auto spec = spectrum(rest);
    std::uint64_t shortest = rest.length();  // the whole remainder at worst
    for (std::uint64_t l = 1; l < rest.length(); ++l) {
      if (spec.contains(l)) {
        shortest = l;
        break;
      }
    }
    Seq part = witness(rest, shortest);
    rest = remove(rest, part);
    f.parts.push_back(std::move(part));
  }
  return f;
}

Profile profile(const Factorization& f) {
  Profile p;
  for (const Seq& part : f.parts) ++p.count[part.length()];
  for (const auto& [len, n] : p.count) {
    p.lengths.push_back(len);
    p.alpha = std::max(p.alpha, len);
  }
  return p;
}

BetaFactorization beta_factorize(std::span<const std::int64_t> xs, std::uint64_t beta) {
  if (beta == 0) throw std::invalid_argument("beta must be positive");
  if (beta > (std::uint64_t{1} << 26) || xs.size() > (std::size_t{1} << 26))
    throw std::length_error("beta_factorize instance too large");
  const auto sbeta = static_cast<std::int64_t>(beta);
  const auto residue_of = [&](std::int64_t x) {
    return static_cast<std::uint64_t>(((x % sbeta) + sbeta) % sbeta);
  };

  std::vector<std::int64_t> remaining(xs.begin(), xs.end());
  BetaFactorization out{beta, {}, {}};

  while (!remaining.empty()) {
    const std::size_t n = remaining.size();
    // a minimum-cardinality divisible sub-multiset never needs more than
    // beta terms: among any beta of them some nonempty run of consecutive
    // prefix-sum differences is divisible by beta
    const std::size_t cap = std::min<std::size_t>(n, beta);
    if ((n + 1) * (cap + 1) * beta > (std::uint64_t{1} << 28))
      throw std::length_error("beta_factorize instance too large");

    // suffix[i]: reachable (cardinality, residue) over remaining[i..)
    std::vector<ResidueReach> suffix(n + 1, ResidueReach(beta, cap));
    for (std::size_t i = n; i-- > 0;) {
      suffix[i] = suffix[i + 1];
      suffix[i].add(residue_of(remaining[i]));
    }

    std::size_t card = 0;
    for (std::size_t c = 1; c <= cap; ++c) {
      if (suffix[0].at(c, 0)) {
        card = c;
        break;
      }
    }
    if (card == 0) break;  // no divisible sub-multiset left

    // earliest-index selection of that cardinality
    std::vector<std::size_t> take;
    std::size_t c = card;
    std::uint64_t need = 0;
    for (std::size_t i = 0; i < n && c > 0; ++i) {
      const std::uint64_t rest = (need + beta - residue_of(remaining[i])) % beta;
      if (suffix[i + 1].at(c - 1, rest)) {
        take.push_back(i);
        --c;
        need = rest;
      }
    }
    if (c != 0 || need != 0)
      throw std::logic_error("beta_factorize reconstruction lost reachability");

    std::vector<std::int64_t> part;
    part.reserve(take.size());
    for (const auto idx : take) part.push_back(remaining[idx]);
    out.parts.push_back(std::move(part));
    for (auto it = take.rbegin(); it != take.rend(); ++it)
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(*it));
  }

  out.x0 = std::move(remaining);
  return out;
}

bool profile_bound_predict(const Seq& s, std::uint64_t t) {
  const int k = s.interval().half_width();
  if (k < 2) throw std::invalid_argument("profile_bound_predict requires k >= 2");
  if (s.sum() != 0)
    throw std::invalid_argument("profile_bound_predict requires a zero-sum sequence");
  const std::uint64_t d_max = 2 * static_cast<std::uint64_t>(k) - 1;
  for (std::uint64_t d = 2; d <= d_max; ++d)
    if (t % d != 0)
      throw std::invalid_argument("t must be divisible by every integer in [1, 2k-1]");

  const auto prof = profile(factorize_minimal(s));
  for (const auto beta : prof.lengths) {
    if (prof.count.at(beta) + 1 < prof.alpha) continue;  // needs count >= alpha - 1
    std::uint64_t other = 0;
    for (const auto l : prof.lengths)
      if (l != beta) other = std::max(other, l);
    const std::int64_t bound = static_cast<std::int64_t>(t) - static_cast<std::int64_t>(beta) +
                               static_cast<std::int64_t>(beta - 1) * static_cast<std::int64_t>(other);
    if (static_cast<std::int64_t>(s.length()) > bound) return true;
  }
  return false;
}

}  // namespace zerosum
