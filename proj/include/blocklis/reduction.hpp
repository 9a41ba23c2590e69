#ifndef BLOCKLIS_REDUCTION_HPP
#define BLOCKLIS_REDUCTION_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "blocklis/sequence.hpp"

namespace blocklis {

// Occurrence index of a sequence y: for each symbol, the strictly increasing
// list of 0-based positions where it occurs.
class OccurrenceIndex {
 public:
  OccurrenceIndex() = default;

  // Single pass over y.
  static OccurrenceIndex of(const Sequence& y);

  // Empty span for symbols that never occur.
  std::span<const Position> positions(Symbol c) const;

  // Sum of list lengths; equals |y|.
  std::size_t total_positions() const { return total_; }

  std::size_t distinct_symbols() const;

 private:
  // Dense slot table when the symbol space is small/dense, hash map otherwise.
  std::vector<std::uint32_t> dense_slot_;
  std::unordered_map<Symbol, std::uint32_t> sparse_slot_;
  std::vector<std::vector<Position>> lists_;
  std::size_t total_ = 0;
  bool dense_ = true;

  static constexpr std::uint32_t kNoSlot = 0xFFFFFFFFu;
};

// The block sequence of a string pair: one block per position of x, holding the
// positions of x_i inside y. Blocks of equal symbols alias one shared position
// list, so memory stays O(|x| + |y|) even when the match count is quadratic.
class BlockSequence {
 public:
  BlockSequence() = default;

  static BlockSequence from_strings(const Sequence& x, const OccurrenceIndex& y_index);

  // Arbitrary blocks, one owned list per block. Lists are not validated here;
  // the solver rejects non-increasing blocks.
  static BlockSequence from_blocks(std::vector<std::vector<Position>> blocks);

  std::size_t block_count() const { return list_of_block_.size(); }

  std::span<const Position> block(std::size_t i) const {
    const auto& l = lists_[list_of_block_[i]];
    return {l.data(), l.size()};
  }

  // Total number of stored integers across blocks, aliased lists counted once
  // per block that uses them.
  std::uint64_t match_count() const { return match_count_; }

  // Largest block size.
  std::size_t max_block_size() const { return max_block_size_; }

 private:
  std::vector<std::uint32_t> list_of_block_;
  std::vector<std::vector<Position>> lists_;
  std::uint64_t match_count_ = 0;
  std::size_t max_block_size_ = 0;
};

// Number of matching pairs (i, j) with x_i = y_j, computed from count vectors
// without materializing the block sequence.
std::uint64_t match_count(const Sequence& x, const Sequence& y);

}  // namespace blocklis

#endif  // BLOCKLIS_REDUCTION_HPP
