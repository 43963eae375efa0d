#include "zerosum/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>
#include <vector>

#include "enum_util.hpp"
#include "reach.hpp"
#include "zerosum/detect.hpp"

namespace zerosum {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t node_check_interval = 4096;

struct AbortControl {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::uint64_t budget_nodes = 0;  // 0: unlimited
  Clock::time_point deadline{};
  bool use_deadline = false;

  // charges a batch of nodes; false once any budget is gone
  bool charge(std::uint64_t delta) {
    if (aborted.load(std::memory_order_relaxed)) return false;
    const auto total = nodes.fetch_add(delta, std::memory_order_relaxed) + delta;
    if (budget_nodes != 0 && total > budget_nodes) {
      aborted.store(true, std::memory_order_relaxed);
      return false;
    }
    if (use_deadline && Clock::now() > deadline) {
      aborted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
};

struct BranchResult {
  std::vector<Seq> found;
  SearchStats stats;
};

// Enumerates sign-canonical zero-sum multisets of one exact length m over
// [-k, k] and reports those without a zero-sum sub-multiset of exactly t
// terms. Since every leaf is zero-sum of length m, such a sub-multiset
// exists iff one of m - t terms does, so the reachability layers only go up
// to m - t; a partial multiset that already reaches (m - t, 0) can never
// produce an avoiding leaf and the subtree is skipped.
class LengthSearch {
 public:
  LengthSearch(int k, std::uint64_t t, std::uint64_t m, bool collect_all,
               AbortControl* abort)
      : k_(k),
        t_(t),
        m_(m),
        collect_all_(collect_all),
        abort_(abort),
        iv_(k),
        prune_enabled_(m >= t),
        small_(m >= t ? static_cast<std::size_t>(m - t) : 0),
        window_(static_cast<std::int64_t>(k) * static_cast<std::int64_t>(m)) {}

  std::pair<std::int64_t, std::int64_t> root_range() const {
    return detail::feasible_range(k_, static_cast<std::int64_t>(m_), 0);
  }

  BranchResult run_root(std::int64_t root_mult) const {
    BranchResult out;
    State st{std::vector<std::uint64_t>(iv_.value_count(), 0), &out, 0};
    detail::ReachTable table(-window_, window_, prune_enabled_ ? small_ : 0);
    table.add_terms(k_, static_cast<std::uint64_t>(root_mult));
    st.counts[iv_.index_of(k_)] = static_cast<std::uint64_t>(root_mult);
    out.stats.nodes += 1;
    if (prune_enabled_ && table.zero_sum_at(small_)) {
      out.stats.pruned_monotone += 1;
      return out;
    }
    dfs(1, table, root_mult, static_cast<std::int64_t>(k_) * root_mult, true, st);
    return out;
  }

 private:
  struct State {
    std::vector<std::uint64_t> counts;
    BranchResult* out;
    std::uint64_t unbilled_nodes;
  };

  // returns true to unwind the whole branch (first find or abort)
  bool dfs(std::size_t idx, const detail::ReachTable& parent, std::int64_t cnt,
           std::int64_t sum, bool prefix_eq, State& st) const {
    if (idx == iv_.value_count()) {
      st.out->found.emplace_back(iv_, st.counts);
      return !collect_all_;
    }
    const int value = detail::class_value(k_, idx);
    auto [jlo, jhi] =
        detail::feasible_range(value, static_cast<std::int64_t>(m_) - cnt, sum);
    if (value < 0 && prefix_eq) {
      const auto partner = static_cast<std::int64_t>(st.counts[iv_.index_of(-value)]);
      if (jhi > partner) {
        st.out->stats.pruned_sign += static_cast<std::uint64_t>(jhi - partner);
        jhi = partner;
      }
    }
    if (jlo > jhi) return false;

    detail::ReachTable table = parent;
    bool stop = false;
    for (std::int64_t j = 0; j <= jhi; ++j) {
      if (j > 0) table.add_term(value);
      if (j < jlo) continue;
      st.out->stats.nodes += 1;
      if (++st.unbilled_nodes >= node_check_interval) {
        if (!abort_->charge(st.unbilled_nodes)) {
          stop = true;
          break;
        }
        st.unbilled_nodes = 0;
      }
      if (prune_enabled_ && table.zero_sum_at(small_)) {
        st.out->stats.pruned_monotone += static_cast<std::uint64_t>(jhi - j + 1);
        break;
      }
      st.counts[iv_.index_of(value)] = static_cast<std::uint64_t>(j);
      const bool child_eq =
          prefix_eq &&
          (value >= 0 ||
           static_cast<std::uint64_t>(j) == st.counts[iv_.index_of(-value)]);
      if (dfs(idx + 1, table, cnt + j, sum + j * value, child_eq, st)) {
        stop = true;
        break;
      }
    }
    st.counts[iv_.index_of(value)] = 0;
    return stop;
  }

  int k_;
  std::uint64_t t_;
  std::uint64_t m_;
  bool collect_all_;
  AbortControl* abort_;
  Interval iv_;
  bool prune_enabled_;
  std::size_t small_;
  std::int64_t window_;
};

struct LengthOutcome {
  std::optional<Seq> best;     // canonically least among per-branch finds
  std::vector<Seq> collected;  // all finds, canonical order (collect mode)
  SearchStats stats;
};

LengthOutcome search_length(int k, std::uint64_t t, std::uint64_t m, int threads,
                            bool collect_all, AbortControl* abort) {
  const LengthSearch search(k, t, m, collect_all, abort);
  const auto [root_lo, root_hi] = search.root_range();
  const std::size_t branch_count =
      root_lo > root_hi ? 0 : static_cast<std::size_t>(root_hi - root_lo + 1);

  std::vector<BranchResult> results(branch_count);
  if (threads <= 1 || branch_count <= 1) {
    for (std::size_t i = 0; i < branch_count; ++i) {
      if (abort->aborted.load(std::memory_order_relaxed)) break;
      results[i] = search.run_root(root_lo + static_cast<std::int64_t>(i));
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(
        static_cast<std::size_t>(threads), nullptr);
    const auto worker = [&](std::size_t slot) {
      try {
        while (!abort->aborted.load(std::memory_order_relaxed)) {
          const auto i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= branch_count) break;
          results[i] = search.run_root(root_lo + static_cast<std::int64_t>(i));
        }
      } catch (...) {
        errors[slot] = std::current_exception();
        abort->aborted.store(true, std::memory_order_relaxed);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads) - 1);
    for (int i = 1; i < threads; ++i)
      pool.emplace_back(worker, static_cast<std::size_t>(i));
    worker(0);
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  LengthOutcome out;
  for (auto& r : results) {
    out.stats.nodes += r.stats.nodes;
    out.stats.pruned_monotone += r.stats.pruned_monotone;
    out.stats.pruned_sign += r.stats.pruned_sign;
    for (auto& s : r.found) {
      if (!out.best || canonical_less(s, *out.best)) out.best = s;
      if (collect_all) out.collected.push_back(std::move(s));
    }
  }
  if (collect_all) std::sort(out.collected.begin(), out.collected.end(), canonical_less);
  return out;
}

Seq family_block(int k, std::uint64_t q) {
  const Interval iv(k);
  std::vector<std::uint64_t> w(iv.value_count(), 0);
  if (q == 2) {
    w[iv.index_of(1)] = 1;
    w[iv.index_of(-1)] = 1;
  } else if (q % 2 == 1) {
    const auto c = static_cast<int>((q + 1) / 2);  // q = 2c - 1
    w[iv.index_of(c)] = static_cast<std::uint64_t>(c) - 1;
    w[iv.index_of(-(c - 1))] = static_cast<std::uint64_t>(c);
  } else {
    const auto h = static_cast<int>(q / 2);  // q = 2^e with e > 1
    w[iv.index_of(h - 1)] = static_cast<std::uint64_t>(h) + 1;
    w[iv.index_of(-(h + 1))] = static_cast<std::uint64_t>(h) - 1;
  }
  return Seq(iv, std::move(w));
}

// Largest prime-power divisor of d that does not divide t. One always
// exists when d itself does not divide t.
std::uint64_t violating_prime_power(std::uint64_t d, std::uint64_t t) {
  std::uint64_t best = 0;
  std::uint64_t rest = d;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    std::uint64_t q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    if (t % q != 0) best = std::max(best, q);
  }
  if (rest > 1 && t % rest != 0) best = std::max(best, rest);
  return best;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

Finiteness finiteness(int k, std::uint64_t t) {
  const Interval iv(k);
  if (t == 0) throw std::invalid_argument("t must be positive");
  const auto d_max = std::max<std::uint64_t>(2, 2 * static_cast<std::uint64_t>(k) - 1);
  for (std::uint64_t d = 2; d <= d_max; ++d)
    if (t % d != 0) return {false, d};
  return {true, 0};
}

SprimeBounds sprime_bounds(int k, std::uint64_t t) {
  const auto fin = finiteness(k, t);
  if (!fin.finite)
    throw std::invalid_argument("the constant is infinite: " +
                                std::to_string(fin.violating_divisor) +
                                " does not divide t");
  if (t > Seq::max_length)
    throw std::invalid_argument("t too large");
  const auto kk = static_cast<std::int64_t>(k);
  const auto lower = t + static_cast<std::uint64_t>(kk * (kk - 1));
  const auto upper = t + static_cast<std::uint64_t>((2 * kk - 2) * (2 * kk - 3));
  return {lower, upper};
}

ConstructionPair avoiding_constructions(int k, std::uint64_t t) {
  const Interval iv(k);
  if (k < 2) throw std::invalid_argument("avoiding_constructions requires k >= 2");
  const auto ku = static_cast<std::uint64_t>(k);
  if (t == 0 || t % ku != 0 || t % (ku + 1) != 0)
    throw std::invalid_argument("t must be divisible by both k and k+1");
  if (t > Seq::max_length) throw std::invalid_argument("t too large");

  std::vector<std::uint64_t> u(iv.value_count(), 0);
  u[iv.index_of(k)] = 1;
  u[iv.index_of(-1)] = ku;
  std::vector<std::uint64_t> v(iv.value_count(), 0);
  v[iv.index_of(k - 1)] = 1;
  v[iv.index_of(-1)] = ku - 1;
  const Seq block_u(iv, std::move(u));
  const Seq block_v(iv, std::move(v));

  Seq s = concat(power(block_u, t / (ku + 1) - 1), power(block_v, ku));
  Seq r = concat(power(block_u, ku - 1), power(block_v, t / ku - 1));
  // checked on every call rather than trusted
  if (contains_length(s, t) || contains_length(r, t))
    throw std::logic_error("construction unexpectedly contains the target length");
  return {std::move(s), std::move(r)};
}

Seq infinite_family(int k, std::uint64_t t, std::uint64_t x) {
  const auto fin = finiteness(k, t);
  if (fin.finite)
    throw std::invalid_argument("the constant is finite; no unbounded family exists");
  if (x == 0) throw std::invalid_argument("x must be positive");
  const auto q = violating_prime_power(fin.violating_divisor, t);
  return power(family_block(k, q), x);
}

SprimeResult sprime(int k, std::uint64_t t, const SprimeOptions& options) {
  const auto start = Clock::now();
  const Interval iv(k);
  if (t == 0) throw std::invalid_argument("t must be positive");

  SprimeResult res;
  const auto fin = finiteness(k, t);
  if (!fin.finite) {
    res.outcome.kind = SprimeOutcome::Kind::infinite;
    res.outcome.divisor = fin.violating_divisor;
    res.outcome.family =
        family_block(k, violating_prime_power(fin.violating_divisor, t)).str();
    res.stats.wall_seconds = seconds_since(start);
    return res;
  }

  const auto [lower, upper] = sprime_bounds(k, t);
  (void)lower;

  AbortControl abort;
  abort.budget_nodes = options.budget_nodes;
  if (options.budget_seconds > 0) {
    abort.use_deadline = true;
    abort.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                 std::chrono::duration<double>(options.budget_seconds));
  }
  const int threads = std::max(1, options.threads);

  SearchStats total;
  for (std::uint64_t m = upper; m >= 1; --m) {
    auto outcome = search_length(k, t, m, threads, false, &abort);
    total.nodes += outcome.stats.nodes;
    total.pruned_monotone += outcome.stats.pruned_monotone;
    total.pruned_sign += outcome.stats.pruned_sign;
    if (abort.aborted.load(std::memory_order_relaxed)) {
      total.wall_seconds = seconds_since(start);
      throw BudgetExhausted("search budget exhausted after " +
                                std::to_string(total.nodes) + " nodes",
                            upper, m + 1, total);
    }
    if (outcome.best) {
      if (m == upper)
        throw std::logic_error("avoiding sequence found above the proven upper bound");
      res.outcome.kind = SprimeOutcome::Kind::finite;
      res.outcome.value = m + 1;
      res.outcome.extremal = std::move(outcome.best);
      res.outcome.verified_upper = upper;
      total.wall_seconds = seconds_since(start);
      res.stats = total;
      return res;
    }
  }
  throw std::logic_error("no avoiding sequence found at any length");
}

std::vector<Seq> enumerate_avoiding(int k, std::uint64_t t, std::uint64_t length) {
  const Interval iv(k);
  if (t == 0) throw std::invalid_argument("t must be positive");
  AbortControl abort;  // unbudgeted
  auto outcome = search_length(k, t, length, 1, true, &abort);
  return std::move(outcome.collected);
}

VerifyReport verify_construction(const Seq& s, std::uint64_t t) {
  VerifyReport report{s.length(), s.sum(), contains_length(s, t), false};
  report.avoiding = s.sum() == 0 && !report.contains_t;
  return report;
}

}  // namespace zerosum
