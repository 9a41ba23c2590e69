#ifndef BLOCKLIS_SOLVER_HPP
#define BLOCKLIS_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "blocklis/reduction.hpp"
#include "blocklis/sequence.hpp"

namespace blocklis {

// Witness of a block-LIS solution: (block index, chosen value) pairs, strictly
// increasing in both coordinates, at most one per block. Under the string
// reduction these are (i, j) pairs with x_i = y_j, i.e. a common subsequence.
struct CertificatePair {
  std::uint32_t block = 0;
  Position value = 0;

  friend bool operator==(const CertificatePair&, const CertificatePair&) = default;
};

using Certificate = std::vector<CertificatePair>;

struct BlockLisResult {
  std::uint64_t length = 0;
  std::optional<Certificate> certificate;
};

// Longest strictly increasing subsequence picking at most one value per block,
// in O(|z| log L) time for result length L. Patience tails: tails[t] holds the
// smallest value ending an increasing selection of length t+1; each block's
// values are processed in decreasing order so no two values of one block chain
// together. Back-pointers are kept only when a certificate is requested
// (O(|z|) memory there, O(L) otherwise).
// Throws std::invalid_argument if some block is not strictly increasing.
BlockLisResult exact_block_lis(const BlockSequence& z, bool want_certificate = false);

// True iff cert has exactly `claimed_length` pairs, both coordinates are
// strictly increasing, every pair is in range and x_i = y_j for each (i, j).
bool verify_certificate(const Sequence& x, const Sequence& y, const Certificate& cert,
                        std::uint64_t claimed_length);

// Pluggable block-LIS solver: solve(z, lambda) returns an estimate in
// [reslis(z)/alpha - additive_budget, reslis(z)]. lambda is the additive slack
// knob approximate solvers consume; exact solvers ignore it.
struct SolverSpec {
  double alpha = 1.0;
  double additive_budget = 0.0;
  std::function<double(const BlockSequence& z, double lambda)> solve;
};

// exact_block_lis wrapped as a (1, 0)-approximation; ignores lambda.
SolverSpec exact_solver_spec();

}  // namespace blocklis

#endif  // BLOCKLIS_SOLVER_HPP
