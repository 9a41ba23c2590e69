#ifndef BLOCKLIS_ESTIMATOR_HPP
#define BLOCKLIS_ESTIMATOR_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blocklis/rational.hpp"
#include "blocklis/sequence.hpp"
#include "blocklis/solver.hpp"

namespace blocklis {

// Maps (d, n) to the additive slack knob lambda handed to the solver.
using LambdaPolicy = std::function<double(const Rational& d, double n)>;

// lambda = d / (n * log2 n), with the log clamped to >= 1 so tiny n is safe.
// Zero exactly when d is zero. n is the mean input length.
double default_lambda(const Rational& d, double n);

struct EstimatorParams {
  LambdaPolicy lambda_policy;   // empty -> default_lambda
  Rational subsample_rate{1, 1};  // in (0, 1]
  std::uint64_t seed = 0;
};

struct StageTimes {
  std::int64_t sample_us = 0;  // subsampling, when a rate < 1 is applied
  std::int64_t index_us = 0;   // occurrence-index build
  std::int64_t reduce_us = 0;  // block sequence, match count, d
  std::int64_t solve_us = 0;
  std::int64_t total_us = 0;
};

struct LcsEstimate {
  std::size_t n_x = 0;
  std::size_t n_y = 0;
  std::uint64_t match_count = 0;
  Rational d;                    // exact, unreduced: match_count / (n_x + n_y)
  std::uint64_t d_ceil = 0;
  double lambda = 0.0;
  std::uint64_t solver_output = 0;  // max(0, ceil of the solver's real output)
  std::uint64_t estimate = 0;       // max(d_ceil, solver_output)
  Rational rate{1, 1};
  std::size_t subsample_size = 0;   // |U|; the full length when rate = 1
  std::uint64_t seed = 0;
  StageTimes elapsed;
};

// Solver or pipeline failure, tagged with the stage that raised it.
class EstimatorError : public std::runtime_error {
 public:
  EstimatorError(std::string stage, const std::string& what);

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// The full estimation pipeline on (x, y): build the occurrence index of y and
// the block sequence z, set d = |z| / (|x| + |y|), run the solver with lambda
// from the policy, and report max(ceil(d), solver output). A zero match count
// short-circuits the solver and yields 0.
LcsEstimate estimate_lcs(const Sequence& x, const Sequence& y, const SolverSpec& solver,
                         const EstimatorParams& params = {});

struct SubsampleResult {
  Sequence x_u;
  Sequence y_u;
  std::vector<Position> kept;  // U, ascending
};

// Keeps each index i independently with probability rate (one shared index set
// applied to both strings), deterministically from (rate, seed): index i is
// kept iff counter_draw(seed, i) >> 11 < floor(rate * 2^53). Requires
// |x| = |y| and rate in (0, 1].
SubsampleResult subsample_pair(const Sequence& x, const Sequence& y, const Rational& rate,
                               std::uint64_t seed);

// Subsample at params.subsample_rate, then estimate_lcs on the restriction.
// The estimate is reported unrescaled; rate and |U| are recorded so callers
// can rescale offline. Rate 1 is exactly estimate_lcs.
LcsEstimate approximate_lcs(const Sequence& x, const Sequence& y, const SolverSpec& solver,
                            const EstimatorParams& params = {});

}  // namespace blocklis

#endif  // BLOCKLIS_ESTIMATOR_HPP
