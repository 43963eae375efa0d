#include "zerosum/catalog.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <utility>

#include "enum_util.hpp"
#include "reach.hpp"
#include "zerosum/detect.hpp"

namespace zerosum {

namespace {

// Enumerates sign-canonical minimal zero-sum multisets of one exact length.
// A branch dies as soon as the partial multiset owns a nonempty zero-sum
// sub-multiset shorter than the target: it would stay proper in every
// completion. Surviving leaves are therefore minimal by construction.
class MinimalEnumerator {
 public:
  MinimalEnumerator(int k, std::uint64_t length)
      : k_(k), length_(length), iv_(k), counts_(iv_.value_count(), 0) {}

  std::vector<Seq> run() {
    std::vector<Seq> canonical;
    const auto window = static_cast<std::int64_t>(k_) * static_cast<std::int64_t>(length_);
    const auto [root_lo, root_hi] =
        detail::feasible_range(k_, static_cast<std::int64_t>(length_), 0);
    // root partition on the multiplicity of value k; branches are
    // independent and collected in root order
    for (std::int64_t root = root_lo; root <= root_hi; ++root) {
      detail::ReachTable table(-window, window, static_cast<std::size_t>(length_));
      table.add_terms(k_, static_cast<std::uint64_t>(root));
      if (proper_zero_sum(table)) continue;
      counts_[iv_.index_of(k_)] = static_cast<std::uint64_t>(root);
      dfs(1, table, root, static_cast<std::int64_t>(k_) * root, true, canonical);
      counts_[iv_.index_of(k_)] = 0;
    }
    return canonical;
  }

 private:
  bool proper_zero_sum(const detail::ReachTable& table) const {
    return table.first_zero_sum_in(1, static_cast<std::size_t>(length_ - 1)) !=
           detail::ReachTable::npos;
  }

  void dfs(std::size_t idx, const detail::ReachTable& parent, std::int64_t cnt,
           std::int64_t sum, bool prefix_eq, std::vector<Seq>& out) {
    if (idx == iv_.value_count()) {
      out.emplace_back(iv_, counts_);
      return;
    }
    const int value = detail::class_value(k_, idx);
    auto [jlo, jhi] =
        detail::feasible_range(value, static_cast<std::int64_t>(length_) - cnt, sum);
    if (value < 0 && prefix_eq) {
      const auto partner = static_cast<std::int64_t>(counts_[iv_.index_of(-value)]);
      jhi = std::min(jhi, partner);
    }
    if (jlo > jhi) return;

    detail::ReachTable table = parent;
    for (std::int64_t j = 0; j <= jhi; ++j) {
      if (j > 0) table.add_term(value);
      if (j < jlo) continue;
      if (proper_zero_sum(table)) break;  // persists for larger j as well
      counts_[iv_.index_of(value)] = static_cast<std::uint64_t>(j);
      const bool child_eq =
          prefix_eq &&
          (value >= 0 || static_cast<std::uint64_t>(j) == counts_[iv_.index_of(-value)]);
      dfs(idx + 1, table, cnt + j, sum + j * value, child_eq, out);
    }
    counts_[iv_.index_of(value)] = 0;
  }

  int k_;
  std::uint64_t length_;
  Interval iv_;
  std::vector<std::uint64_t> counts_;
};

std::vector<Seq> enumerate_uncached(int k, std::uint64_t length) {
  auto canonical = MinimalEnumerator(k, length).run();
  std::vector<Seq> out;
  out.reserve(canonical.size() * 2);
  for (auto& s : canonical) {
    Seq neg = negate(s);
    if (!(neg == s)) out.push_back(std::move(neg));
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

bool is_minimal(const Seq& s) {
  if (s.empty() || s.sum() != 0) return false;
  const auto spec = spectrum(s);
  for (std::uint64_t l = 1; l < s.length(); ++l)
    if (spec.contains(l)) return false;
  return true;
}

std::uint64_t enumeration_length_cap(int k) {
  // safety margin above the expected maximum length, wide enough for the
  // verification gap used by davenport at every k
  return std::max<std::uint64_t>(4 * static_cast<std::uint64_t>(k),
                                 2 * static_cast<std::uint64_t>(k) + 3);
}

std::vector<Seq> enumerate_minimal(int k, std::uint64_t length) {
  const Interval iv(k);  // validates k
  if (length == 0) throw std::invalid_argument("length must be positive");
  if (length > enumeration_length_cap(k))
    throw std::invalid_argument("length exceeds the enumeration cap");

  static std::mutex mu;
  static std::map<std::pair<int, std::uint64_t>, std::vector<Seq>> cache;
  {
    const std::scoped_lock lock(mu);
    if (const auto it = cache.find({k, length}); it != cache.end()) return it->second;
  }
  auto result = enumerate_uncached(k, length);
  const std::scoped_lock lock(mu);
  return cache.emplace(std::pair{k, length}, std::move(result)).first->second;
}

MinimalCatalog MinimalCatalog::build(int k, std::uint64_t max_length) {
  MinimalCatalog catalog{k, {}, max_length};
  for (std::uint64_t l = 1; l <= max_length; ++l) {
    auto list = enumerate_minimal(k, l);
    if (!list.empty()) catalog.by_length.emplace(l, std::move(list));
  }
  return catalog;
}

DavenportResult davenport(int k, std::uint64_t cap) {
  const Interval iv(k);
  if (cap < 2 * static_cast<std::uint64_t>(k) + 2)
    throw std::invalid_argument("cap must be at least 2k+2");
  if (cap > enumeration_length_cap(k))
    throw std::invalid_argument("cap exceeds the enumeration cap");

  std::uint64_t value = 0;
  std::optional<Seq> witness;
  for (std::uint64_t l = 1; l <= cap; ++l) {
    const auto list = enumerate_minimal(k, l);
    if (!list.empty()) {
      value = l;
      witness = list.back();  // canonically greatest entry of that length
    }
  }
  return DavenportResult{value, std::move(*witness), cap, true};
}

DavenportResult davenport(int k) {
  return davenport(k, 2 * static_cast<std::uint64_t>(k) + 3);
}

}  // namespace zerosum
