#include "blocklis/reduction.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "blocklis/counts.hpp"

namespace blocklis {

namespace {

bool use_dense_slots(Symbol max_symbol, std::size_t n) {
  return static_cast<std::size_t>(max_symbol) + 1 <= std::max<std::size_t>(256, 2 * n);
}

}  // namespace

OccurrenceIndex OccurrenceIndex::of(const Sequence& y) {
  if (y.size() > std::numeric_limits<Position>::max()) {
    throw std::invalid_argument("sequence too long for 32-bit positions");
  }
  OccurrenceIndex idx;
  idx.total_ = y.size();
  if (y.empty()) return idx;

  Symbol max_symbol = *std::max_element(y.begin(), y.end());
  idx.dense_ = use_dense_slots(max_symbol, y.size());
  if (idx.dense_) {
    idx.dense_slot_.assign(static_cast<std::size_t>(max_symbol) + 1, kNoSlot);
    for (std::size_t j = 0; j < y.size(); ++j) {
      std::uint32_t& slot = idx.dense_slot_[y[j]];
      if (slot == kNoSlot) {
        slot = static_cast<std::uint32_t>(idx.lists_.size());
        idx.lists_.emplace_back();
      }
      idx.lists_[slot].push_back(static_cast<Position>(j));
    }
  } else {
    for (std::size_t j = 0; j < y.size(); ++j) {
      auto [it, inserted] = idx.sparse_slot_.try_emplace(
          y[j], static_cast<std::uint32_t>(idx.lists_.size()));
      if (inserted) idx.lists_.emplace_back();
      idx.lists_[it->second].push_back(static_cast<Position>(j));
    }
  }
  return idx;
}

std::span<const Position> OccurrenceIndex::positions(Symbol c) const {
  std::uint32_t slot = kNoSlot;
  if (dense_) {
    if (static_cast<std::size_t>(c) < dense_slot_.size()) slot = dense_slot_[c];
  } else if (auto it = sparse_slot_.find(c); it != sparse_slot_.end()) {
    slot = it->second;
  }
  if (slot == kNoSlot) return {};
  const auto& l = lists_[slot];
  return {l.data(), l.size()};
}

std::size_t OccurrenceIndex::distinct_symbols() const { return lists_.size(); }

BlockSequence BlockSequence::from_strings(const Sequence& x, const OccurrenceIndex& y_index) {
  if (x.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("sequence too long for 32-bit block indices");
  }
  BlockSequence z;
  z.list_of_block_.reserve(x.size());
  z.lists_.emplace_back();  // shared slot for symbols absent from y

  // One copied list per distinct symbol of x; repeats alias the same slot.
  std::size_t max_symbol = x.empty() ? 0 : *std::max_element(x.begin(), x.end());
  std::vector<std::uint32_t> dense_slot;
  std::unordered_map<Symbol, std::uint32_t> sparse_slot;
  bool dense = use_dense_slots(static_cast<Symbol>(max_symbol), x.size());
  if (dense) dense_slot.assign(max_symbol + 1, 0xFFFFFFFFu);

  for (Symbol c : x) {
    std::uint32_t slot;
    if (dense) {
      slot = dense_slot[c];
      if (slot == 0xFFFFFFFFu) {
        auto pos = y_index.positions(c);
        slot = pos.empty() ? 0
                           : static_cast<std::uint32_t>(z.lists_.size());
        if (!pos.empty()) z.lists_.emplace_back(pos.begin(), pos.end());
        dense_slot[c] = slot;
      }
    } else {
      auto [it, inserted] = sparse_slot.try_emplace(c, 0);
      if (inserted) {
        auto pos = y_index.positions(c);
        it->second = pos.empty() ? 0 : static_cast<std::uint32_t>(z.lists_.size());
        if (!pos.empty()) z.lists_.emplace_back(pos.begin(), pos.end());
      }
      slot = it->second;
    }
    z.list_of_block_.push_back(slot);
    std::size_t len = z.lists_[slot].size();
    z.match_count_ += len;
    z.max_block_size_ = std::max(z.max_block_size_, len);
  }
  return z;
}

BlockSequence BlockSequence::from_blocks(std::vector<std::vector<Position>> blocks) {
  if (blocks.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("too many blocks for 32-bit block indices");
  }
  BlockSequence z;
  z.lists_ = std::move(blocks);
  z.list_of_block_.resize(z.lists_.size());
  for (std::size_t i = 0; i < z.lists_.size(); ++i) {
    z.list_of_block_[i] = static_cast<std::uint32_t>(i);
    z.match_count_ += z.lists_[i].size();
    z.max_block_size_ = std::max(z.max_block_size_, z.lists_[i].size());
  }
  return z;
}

std::uint64_t match_count(const Sequence& x, const Sequence& y) {
  return inner_product(CountVector::of(x), CountVector::of(y));
}

}  // namespace blocklis
