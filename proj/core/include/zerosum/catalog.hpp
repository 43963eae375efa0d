#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zerosum/seq.hpp"

namespace zerosum {

/// True for a nonempty zero-sum multiset with no proper nonempty zero-sum
/// sub-multiset. The singleton {0} counts as minimal.
bool is_minimal(const Seq& s);

/// All minimal zero-sum multisets over [-k, k] with exactly the given
/// length, closed under negation and sorted by canonical_less. Results are
/// memoized per (k, length) for the lifetime of the process.
///
/// The enumeration runs a DFS over multiplicity vectors in sign-canonical
/// form, pruning branches whose running sum can no longer be cancelled and
/// branches that already contain a proper zero-sum sub-multiset.
std::vector<Seq> enumerate_minimal(int k, std::uint64_t length);

/// Largest enumeration length accepted for a given k.
std::uint64_t enumeration_length_cap(int k);

/// Exhaustive catalog of minimal zero-sum multisets by length. Lengths with
/// no entries are omitted from the map.
struct MinimalCatalog {
  int k;
  std::map<std::uint64_t, std::vector<Seq>> by_length;
  std::uint64_t max_checked;

  static MinimalCatalog build(int k, std::uint64_t max_length);
};

struct DavenportResult {
  std::uint64_t value;
  Seq witness;
  std::uint64_t cap;
  /// No minimal sequence with length in (value, cap] exists; always true for
  /// results produced here since every length up to cap is enumerated.
  bool verified_empty_above;
};

/// Maximum length of a minimal zero-sum multiset over [-k, k], verified by
/// exhaustive enumeration of every length up to cap. Requires cap >= 2k+2;
/// the one-argument overload uses cap = 2k+3, which checks a margin above
/// the expected value without claiming unbounded verification.
DavenportResult davenport(int k, std::uint64_t cap);
DavenportResult davenport(int k);

}  // namespace zerosum
