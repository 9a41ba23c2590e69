#include "blocklis/dp.hpp"

#include <algorithm>
#include <string>

namespace blocklis {

namespace {

void check_guard(std::size_t nx, std::size_t ny, std::uint64_t guard) {
  std::uint64_t cells = (static_cast<std::uint64_t>(nx) + 1) * (static_cast<std::uint64_t>(ny) + 1);
  if (cells > guard) throw SizeGuardError(cells, guard);
}

}  // namespace

SizeGuardError::SizeGuardError(std::uint64_t cells, std::uint64_t limit)
    : std::runtime_error("dp table of " + std::to_string(cells) +
                         " cells exceeds the guard of " + std::to_string(limit)),
      cells_(cells),
      limit_(limit) {}

std::uint64_t dp_lcs(const Sequence& x, const Sequence& y, std::uint64_t cell_guard) {
  check_guard(x.size(), y.size(), cell_guard);
  if (x.empty() || y.empty()) return 0;

  std::vector<std::uint32_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      cur[j + 1] = x[i] == y[j] ? prev[j] + 1 : std::max(prev[j + 1], cur[j]);
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

std::vector<std::uint32_t> dp_lcs_table(const Sequence& x, const Sequence& y,
                                        std::uint64_t cell_guard) {
  check_guard(x.size(), y.size(), cell_guard);
  const std::size_t cols = y.size() + 1;
  std::vector<std::uint32_t> table((x.size() + 1) * cols, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::uint32_t* above = &table[i * cols];
    std::uint32_t* row = &table[(i + 1) * cols];
    for (std::size_t j = 0; j < y.size(); ++j) {
      row[j + 1] = x[i] == y[j] ? above[j] + 1 : std::max(above[j + 1], row[j]);
    }
  }
  return table;
}

Certificate dp_lcs_certificate(const Sequence& x, const Sequence& y, std::uint64_t cell_guard) {
  auto table = dp_lcs_table(x, y, cell_guard);
  const std::size_t cols = y.size() + 1;
  auto at = [&](std::size_t i, std::size_t j) { return table[i * cols + j]; };

  Certificate cert(at(x.size(), y.size()));
  std::size_t k = cert.size();
  std::size_t i = x.size(), j = y.size();
  while (i > 0 && j > 0) {
    if (x[i - 1] == y[j - 1] && at(i, j) == at(i - 1, j - 1) + 1) {
      cert[--k] = {static_cast<std::uint32_t>(i - 1), static_cast<Position>(j - 1)};
      --i;
      --j;
    } else if (at(i - 1, j) >= at(i, j - 1)) {
      --i;
    } else {
      --j;
    }
  }
  return cert;
}

}  // namespace blocklis
