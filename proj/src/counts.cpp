#include "blocklis/counts.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace blocklis {

CountVector CountVector::of(const Sequence& s) {
  CountVector cv;
  cv.l1_ = s.size();
  if (s.empty()) return cv;

  Symbol max_symbol = *std::max_element(s.begin(), s.end());
  // Bytes, token ids and generator ids are dense, so this path covers them all.
  bool dense = static_cast<std::size_t>(max_symbol) + 1 <=
               std::max<std::size_t>(256, 2 * s.size());
  if (dense) {
    std::vector<std::uint64_t> table(static_cast<std::size_t>(max_symbol) + 1, 0);
    for (Symbol c : s) ++table[c];
    for (std::size_t c = 0; c < table.size(); ++c) {
      if (table[c] > 0) cv.entries_.emplace_back(static_cast<Symbol>(c), table[c]);
    }
  } else {
    std::unordered_map<Symbol, std::uint64_t> table;
    table.reserve(s.size());
    for (Symbol c : s) ++table[c];
    cv.entries_.assign(table.begin(), table.end());
    std::sort(cv.entries_.begin(), cv.entries_.end());
  }
  return cv;
}

CountVector CountVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  CountVector cv;
  for (const auto& [symbol, count] : entries) {
    if (count == 0) continue;
    if (!cv.entries_.empty() && cv.entries_.back().first == symbol) {
      cv.entries_.back().second += count;
    } else {
      cv.entries_.emplace_back(symbol, count);
    }
    cv.l1_ += count;
  }
  return cv;
}

std::uint64_t CountVector::count(Symbol c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const Entry& e, Symbol s) { return e.first < s; });
  return (it != entries_.end() && it->first == c) ? it->second : 0;
}

namespace {

// Merge-join over the sorted supports, combining counts of shared symbols.
template <typename Fold>
void for_common_symbols(const CountVector& a, const CountVector& b, Fold&& fold) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].first < eb[j].first) {
      ++i;
    } else if (eb[j].first < ea[i].first) {
      ++j;
    } else {
      fold(ea[i].second, eb[j].second);
      ++i;
      ++j;
    }
  }
}

}  // namespace

std::uint64_t inner_product(const CountVector& a, const CountVector& b) {
  std::uint64_t sum = 0;
  for_common_symbols(a, b, [&](std::uint64_t ca, std::uint64_t cb) { sum += ca * cb; });
  return sum;
}

std::uint64_t min_count_lower_bound(const CountVector& a, const CountVector& b) {
  std::uint64_t best = 0;
  for_common_symbols(a, b,
                     [&](std::uint64_t ca, std::uint64_t cb) { best = std::max(best, std::min(ca, cb)); });
  return best;
}

std::uint64_t holder_bound(const CountVector& a, const CountVector& b) {
  return min_count_lower_bound(a, b) * (a.l1_norm() + b.l1_norm());
}

Rational match_lower_bound_d(std::uint64_t match_count, std::size_t len_x, std::size_t len_y) {
  std::uint64_t total = static_cast<std::uint64_t>(len_x) + len_y;
  if (total == 0 && match_count != 0) {
    throw std::invalid_argument("nonzero match count for two empty sequences");
  }
  return {match_count, total};
}

}  // namespace blocklis
