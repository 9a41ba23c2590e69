#ifndef BLOCKLIS_COUNTS_HPP
#define BLOCKLIS_COUNTS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "blocklis/rational.hpp"
#include "blocklis/sequence.hpp"

namespace blocklis {

// Per-symbol occurrence counts of a sequence. Stored sparse (sorted by symbol,
// counts >= 1, absent symbols are implicitly 0); counting uses a dense array
// when the symbol space is small, e.g. bytes or interned token ids.
class CountVector {
 public:
  using Entry = std::pair<Symbol, std::uint64_t>;

  CountVector() = default;

  static CountVector of(const Sequence& s);

  // Drops zero entries, sorts by symbol, sums duplicate symbols.
  static CountVector from_entries(std::vector<Entry> entries);

  std::uint64_t count(Symbol c) const;

  // Sum of all counts; equals the length of the originating sequence.
  std::uint64_t l1_norm() const { return l1_; }

  std::size_t support_size() const { return entries_.size(); }

  const std::vector<Entry>& entries() const { return entries_; }

  friend bool operator==(const CountVector&, const CountVector&) = default;

 private:
  std::vector<Entry> entries_;  // sorted by symbol
  std::uint64_t l1_ = 0;
};

// Sum over symbols of a[c] * b[c]. Equals the number of matching index pairs
// (i, j) with x_i = y_j when a, b count the two strings.
std::uint64_t inner_product(const CountVector& a, const CountVector& b);

// max_c min(a[c], b[c]). If both strings contain k copies of some symbol, those
// copies alone form a common subsequence, so this never exceeds the LCS.
std::uint64_t min_count_lower_bound(const CountVector& a, const CountVector& b);

// min_count_lower_bound(a, b) * (|a|_1 + |b|_1); an upper bound on
// inner_product(a, b) via the min/max norm split.
std::uint64_t holder_bound(const CountVector& a, const CountVector& b);

// d = match_count / (len_x + len_y), exact and unreduced. For equal lengths n
// this is match_count / 2n, a lower bound on the LCS. Throws
// std::invalid_argument when both lengths are zero but match_count is not.
Rational match_lower_bound_d(std::uint64_t match_count, std::size_t len_x, std::size_t len_y);

}  // namespace blocklis

#endif  // BLOCKLIS_COUNTS_HPP
