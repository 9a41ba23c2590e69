#include "blocklis/estimator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "blocklis/counts.hpp"
#include "blocklis/reduction.hpp"
#include "blocklis/rng.hpp"

namespace blocklis {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t us_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

void validate_rate(const Rational& rate) {
  if (rate.den == 0 || rate.num == 0 || rate.num > rate.den) {
    throw std::invalid_argument("subsample rate must be in (0, 1]");
  }
}

}  // namespace

double default_lambda(const Rational& d, double n) {
  if (d.num == 0) return 0.0;
  double n_clamped = std::max(1.0, n);
  double log_n = std::max(1.0, std::log2(n_clamped));
  return d.value() / (n_clamped * log_n);
}

EstimatorError::EstimatorError(std::string stage, const std::string& what)
    : std::runtime_error("stage '" + stage + "': " + what), stage_(std::move(stage)) {}

LcsEstimate estimate_lcs(const Sequence& x, const Sequence& y, const SolverSpec& solver,
                         const EstimatorParams& params) {
  if (!solver.solve) throw EstimatorError("solve", "solver spec has no solve procedure");
  validate_rate(params.subsample_rate);

  LcsEstimate est;
  est.n_x = x.size();
  est.n_y = y.size();
  est.rate = {1, 1};
  est.subsample_size = x.size();
  est.seed = params.seed;

  auto total_start = Clock::now();
  auto stage_start = Clock::now();
  OccurrenceIndex index = OccurrenceIndex::of(y);
  est.elapsed.index_us = us_since(stage_start);

  stage_start = Clock::now();
  BlockSequence z = BlockSequence::from_strings(x, index);
  est.match_count = z.match_count();
  est.d = match_lower_bound_d(est.match_count, x.size(), y.size());
  est.d_ceil = est.d.ceil();
  est.elapsed.reduce_us = us_since(stage_start);

  double n_eff = (static_cast<double>(x.size()) + static_cast<double>(y.size())) / 2.0;
  est.lambda = params.lambda_policy ? params.lambda_policy(est.d, n_eff)
                                    : default_lambda(est.d, n_eff);

  if (est.match_count > 0) {
    stage_start = Clock::now();
    double raw;
    try {
      raw = solver.solve(z, est.lambda);
    } catch (const std::exception& e) {
      throw EstimatorError("solve", e.what());
    }
    // An output inside the contract never exceeds the (integral) block-LIS
    // length, so its ceiling is still a valid lower bound on the LCS.
    est.solver_output = raw <= 0.0 ? 0 : static_cast<std::uint64_t>(std::ceil(raw));
    est.elapsed.solve_us = us_since(stage_start);
  }

  est.estimate = std::max(est.d_ceil, est.solver_output);
  est.elapsed.total_us = us_since(total_start);
  return est;
}

SubsampleResult subsample_pair(const Sequence& x, const Sequence& y, const Rational& rate,
                               std::uint64_t seed) {
  validate_rate(rate);
  if (x.size() != y.size()) {
    throw std::invalid_argument(
        "subsampling draws one index set for both sequences and needs equal "
        "lengths; pad the inputs or use rate 1");
  }

  SubsampleResult out;
  if (rate.num == rate.den) {
    out.x_u = x;
    out.y_u = y;
    out.kept.resize(x.size());
    std::iota(out.kept.begin(), out.kept.end(), Position{0});
    return out;
  }

  // Keep index i iff the 53-bit draw for counter i falls below rate * 2^53.
  const std::uint64_t threshold = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rate.num) << 53) / rate.den);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((counter_draw(seed, i) >> 11) < threshold) {
      out.kept.push_back(static_cast<Position>(i));
      out.x_u.push_back(x[i]);
      out.y_u.push_back(y[i]);
    }
  }
  return out;
}

LcsEstimate approximate_lcs(const Sequence& x, const Sequence& y, const SolverSpec& solver,
                            const EstimatorParams& params) {
  validate_rate(params.subsample_rate);
  if (params.subsample_rate.num == params.subsample_rate.den) {
    return estimate_lcs(x, y, solver, params);
  }

  auto total_start = std::chrono::steady_clock::now();
  SubsampleResult sub = subsample_pair(x, y, params.subsample_rate, params.seed);
  std::int64_t sample_us = us_since(total_start);

  LcsEstimate est = estimate_lcs(sub.x_u, sub.y_u, solver, params);
  est.rate = params.subsample_rate;
  est.subsample_size = sub.kept.size();
  est.elapsed.sample_us = sample_us;
  est.elapsed.total_us = us_since(total_start);
  return est;
}

}  // namespace blocklis
