#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "zerosum/seq.hpp"

namespace zerosum {

/// Finiteness criterion for the least length that forces a zero-sum
/// sub-multiset with exactly t terms: finite iff every integer in
/// [1, max(2, 2k-1)] divides t. When infinite, violating_divisor is the
/// smallest non-divisor.
struct Finiteness {
  bool finite;
  std::uint64_t violating_divisor;  // 0 when finite
};

Finiteness finiteness(int k, std::uint64_t t);

/// Proven range for the finite case: [t + k(k-1), t + (2k-2)(2k-3)].
struct SprimeBounds {
  std::uint64_t lower;
  std::uint64_t upper;
};

SprimeBounds sprime_bounds(int k, std::uint64_t t);

/// Two zero-sum sequences of length t + k(k-1) - 1 with no zero-sum
/// sub-multiset of exactly t terms, built from the blocks
/// U = k*(-1)^k and V = (k-1)*(-1)^(k-1):
///   s = U^(t/(k+1) - 1) * V^k,   r = U^(k-1) * V^(t/k - 1).
/// Requires k >= 2 and both k | t and (k+1) | t.
struct ConstructionPair {
  Seq s;
  Seq r;
};

ConstructionPair avoiding_constructions(int k, std::uint64_t t);

/// Witness family for the infinite case: x copies of a two-value block
/// whose zero-sum sub-multisets all have lengths that are multiples of the
/// block length, a number that does not divide t. Requires x >= 1 and
/// finiteness(k, t) to be infinite.
Seq infinite_family(int k, std::uint64_t t, std::uint64_t x);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned_monotone = 0;
  std::uint64_t pruned_sign = 0;
  double wall_seconds = 0.0;
};

struct SprimeOptions {
  /// Wall-clock and node budgets; 0 disables the corresponding limit.
  double budget_seconds = 7200.0;
  std::uint64_t budget_nodes = 10'000'000'000ULL;
  /// Worker threads over the root partition (multiplicity of value k).
  /// The outcome is identical for every thread count.
  int threads = 1;
};

struct SprimeOutcome {
  enum class Kind { finite, infinite };
  Kind kind;

  // finite: the exact constant, a longest avoiding sequence, and the
  // largest length exhaustively shown to admit no avoiding sequence
  std::uint64_t value = 0;
  std::optional<Seq> extremal;
  std::uint64_t verified_upper = 0;

  // infinite: the smallest non-dividing integer and the repeated block
  std::uint64_t divisor = 0;
  std::string family;
};

struct SprimeResult {
  SprimeOutcome outcome;
  SearchStats stats;
};

/// Raised when the search runs out of budget. Lengths in
/// [verified_down_to, upper] were exhaustively shown to admit no avoiding
/// sequence; no value is claimed.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t upper,
                  std::uint64_t verified_down_to, SearchStats stats)
      : std::runtime_error(what),
        upper(upper),
        verified_down_to(verified_down_to),
        stats(stats) {}

  std::uint64_t upper;
  std::uint64_t verified_down_to;
  SearchStats stats;
};

/// Exact computation. The infinite case is settled by the divisibility
/// criterion. The finite case walks lengths downward from the proven upper
/// bound, exhaustively enumerating sign-canonical zero-sum multisets per
/// length with shared-prefix reachability layers, monotone pruning against
/// the complement target, and sign-symmetry reduction; the value is one
/// more than the first length carrying an avoiding sequence. Guaranteed to
/// finish within default budgets for k <= 3; larger k is accepted but may
/// exhaust the budget.
SprimeResult sprime(int k, std::uint64_t t, const SprimeOptions& options = {});

/// Every sign-canonical zero-sum sequence of the given length over [-k, k]
/// with no zero-sum sub-multiset of exactly t terms, in canonical order.
/// Unbudgeted; intended for small instances and cross-checks.
std::vector<Seq> enumerate_avoiding(int k, std::uint64_t t, std::uint64_t length);

struct VerifyReport {
  std::uint64_t length;
  std::int64_t sum;
  bool contains_t;
  /// Certificate: zero-sum and no zero-sum sub-multiset of exactly t terms.
  bool avoiding;
};

VerifyReport verify_construction(const Seq& s, std::uint64_t t);

}  // namespace zerosum
