#ifndef BLOCKLIS_DP_HPP
#define BLOCKLIS_DP_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "blocklis/sequence.hpp"
#include "blocklis/solver.hpp"

namespace blocklis {

// Default cap on (|x|+1) * (|y|+1) table cells for the quadratic routines.
inline constexpr std::uint64_t kDefaultDpGuard = 100'000'000;

class SizeGuardError : public std::runtime_error {
 public:
  SizeGuardError(std::uint64_t cells, std::uint64_t limit);

  std::uint64_t cells() const { return cells_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t cells_;
  std::uint64_t limit_;
};

// Exact LCS length by the classic quadratic recurrence, two rolling rows.
// Throws SizeGuardError when the table would exceed cell_guard cells.
std::uint64_t dp_lcs(const Sequence& x, const Sequence& y,
                     std::uint64_t cell_guard = kDefaultDpGuard);

// Full (|x|+1) x (|y|+1) table, row-major; entry(i, j) = LCS(x[0..i), y[0..j)).
std::vector<std::uint32_t> dp_lcs_table(const Sequence& x, const Sequence& y,
                                        std::uint64_t cell_guard = kDefaultDpGuard);

// Traceback certificate of length dp_lcs(x, y); passes verify_certificate.
Certificate dp_lcs_certificate(const Sequence& x, const Sequence& y,
                               std::uint64_t cell_guard = kDefaultDpGuard);

}  // namespace blocklis

#endif  // BLOCKLIS_DP_HPP
