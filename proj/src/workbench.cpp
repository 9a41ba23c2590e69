#include "blocklis/workbench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "blocklis/counts.hpp"
#include "blocklis/estimator.hpp"
#include "blocklis/reduction.hpp"
#include "blocklis/rng.hpp"
#include "blocklis/solver.hpp"

namespace blocklis {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Random: return "random";
    case FamilyKind::Permutation: return "permutation";
    case FamilyKind::Planted: return "planted";
    case FamilyKind::Repeated: return "repeated";
  }
  throw std::invalid_argument("unknown family kind");
}

FamilyKind family_kind_from_string(std::string_view name) {
  if (name == "random") return FamilyKind::Random;
  if (name == "permutation") return FamilyKind::Permutation;
  if (name == "planted") return FamilyKind::Planted;
  if (name == "repeated") return FamilyKind::Repeated;
  throw std::invalid_argument("unknown family kind '" + std::string(name) + "'");
}

namespace {

void shuffle(Sequence& s, CounterRng& rng) {
  for (std::size_t i = s.size(); i > 1; --i) {
    std::swap(s[i - 1], s[rng.next_below(i)]);
  }
}

// Uniformly random size-k subset of [0, n), ascending.
std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, CounterRng& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(all[i], all[i + rng.next_below(n - i)]);
  }
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

Sequence plant_into_noise(const Sequence& planted, std::size_t n, Symbol noise_base,
                          std::uint32_t sigma, CounterRng& pos_rng, CounterRng& noise_rng) {
  Sequence s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = noise_base + static_cast<Symbol>(noise_rng.next_below(sigma));
  }
  auto positions = random_subset(n, planted.size(), pos_rng);
  for (std::size_t t = 0; t < planted.size(); ++t) s[positions[t]] = planted[t];
  return s;
}

}  // namespace

std::pair<Sequence, Sequence> generate(const InstanceFamily& family) {
  if (family.sigma < 1) throw std::invalid_argument("family sigma must be >= 1");
  switch (family.kind) {
    case FamilyKind::Repeated:
      return {Sequence(family.n, 0), Sequence(family.n, 0)};
    case FamilyKind::Random: {
      CounterRng rx(derive_seed(family.seed, 1)), ry(derive_seed(family.seed, 2));
      Sequence x(family.n), y(family.n);
      for (auto& c : x) c = static_cast<Symbol>(rx.next_below(family.sigma));
      for (auto& c : y) c = static_cast<Symbol>(ry.next_below(family.sigma));
      return {std::move(x), std::move(y)};
    }
    case FamilyKind::Permutation: {
      Sequence x(family.n), y(family.n);
      std::iota(x.begin(), x.end(), Symbol{0});
      y = x;
      CounterRng rx(derive_seed(family.seed, 1)), ry(derive_seed(family.seed, 2));
      shuffle(x, rx);
      shuffle(y, ry);
      return {std::move(x), std::move(y)};
    }
    case FamilyKind::Planted: {
      if (family.planted_len > family.n) {
        throw std::invalid_argument("planted_len exceeds n");
      }
      CounterRng rs(derive_seed(family.seed, 3));
      Sequence planted(family.planted_len);
      for (auto& c : planted) c = static_cast<Symbol>(rs.next_below(family.sigma));
      // Noise alphabets sit above the planted one and differ between the two
      // strings, so every cross-string match is a planted symbol.
      CounterRng px(derive_seed(family.seed, 4)), py(derive_seed(family.seed, 5));
      CounterRng nx(derive_seed(family.seed, 6)), ny(derive_seed(family.seed, 7));
      Sequence x = plant_into_noise(planted, family.n, family.sigma, family.sigma, px, nx);
      Sequence y = plant_into_noise(planted, family.n, 2 * family.sigma, family.sigma, py, ny);
      return {std::move(x), std::move(y)};
    }
  }
  throw std::invalid_argument("unknown family kind");
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t us_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

BenchRecord run_cell(const InstanceFamily& family, const MethodSpec& method,
                     std::uint64_t dp_guard) {
  BenchRecord rec;
  rec.family = family;
  rec.method = method;
  try {
    auto [x, y] = generate(family);
    rec.n_x = x.size();
    rec.n_y = y.size();

    auto start = Clock::now();
    CountVector cx = CountVector::of(x), cy = CountVector::of(y);
    rec.match_count = inner_product(cx, cy);
    rec.d = match_lower_bound_d(rec.match_count, x.size(), y.size());
    rec.d_ceil = rec.d.ceil();
    rec.min_count_bound = min_count_lower_bound(cx, cy);
    rec.holder_bound = holder_bound(cx, cy);
    rec.elapsed_us["bounds"] = us_since(start);

    if (method.name == "exact") {
      start = Clock::now();
      OccurrenceIndex index = OccurrenceIndex::of(y);
      BlockSequence z = BlockSequence::from_strings(x, index);
      rec.elapsed_us["reduce"] = us_since(start);
      start = Clock::now();
      rec.length = exact_block_lis(z).length;
      rec.elapsed_us["solve"] = us_since(start);
    } else if (method.name == "estimate") {
      EstimatorParams params;
      params.subsample_rate = method.rate;
      params.seed = method.seed;
      LcsEstimate est = approximate_lcs(x, y, exact_solver_spec(), params);
      rec.estimate = est.estimate;
      rec.elapsed_us["sample"] = est.elapsed.sample_us;
      rec.elapsed_us["reduce"] = est.elapsed.index_us + est.elapsed.reduce_us;
      rec.elapsed_us["solve"] = est.elapsed.solve_us;
    } else if (method.name != "bounds") {
      throw std::invalid_argument("unknown method '" + method.name + "'");
    }

    std::uint64_t cells =
        (static_cast<std::uint64_t>(x.size()) + 1) * (static_cast<std::uint64_t>(y.size()) + 1);
    if (cells <= dp_guard) {
      start = Clock::now();
      rec.dp_truth = dp_lcs(x, y, dp_guard);
      rec.elapsed_us["dp"] = us_since(start);
    } else {
      rec.bounds_only = true;
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

std::vector<BenchRecord> run_suite(const SuiteConfig& config) {
  struct Cell {
    const InstanceFamily* family;
    const MethodSpec* method;
  };
  std::vector<Cell> cells;
  for (const auto& family : config.families) {
    for (const auto& method : config.methods) {
      cells.push_back({&family, &method});
    }
  }

  std::vector<BenchRecord> records(cells.size());
  int jobs = std::max(1, config.jobs);
  if (jobs == 1 || cells.size() <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      records[i] = run_cell(*cells[i].family, *cells[i].method, config.dp_guard);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
        records[i] = run_cell(*cells[i].family, *cells[i].method, config.dp_guard);
      }
    };
    std::vector<std::thread> pool;
    std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(jobs), cells.size());
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return records;
}

}  // namespace blocklis
