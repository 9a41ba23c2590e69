#ifndef BLOCKLIS_WORKBENCH_HPP
#define BLOCKLIS_WORKBENCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blocklis/dp.hpp"
#include "blocklis/rational.hpp"
#include "blocklis/sequence.hpp"

namespace blocklis {

enum class FamilyKind { Random, Permutation, Planted, Repeated };

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(std::string_view name);

struct InstanceFamily {
  FamilyKind kind = FamilyKind::Random;
  std::size_t n = 0;
  std::uint32_t sigma = 1;
  std::size_t planted_len = 0;  // planted only
  std::uint64_t seed = 0;
};

// Deterministic given the descriptor.
//   random:      both strings i.i.d. uniform over sigma symbols
//   permutation: two independent uniform permutations of n distinct symbols
//   planted:     a shared random subsequence of length planted_len embedded at
//                random increasing positions in both strings; the rest is
//                noise from alphabets disjoint from the planted one and from
//                each other, so the LCS is exactly planted_len
//   repeated:    x = y = one symbol repeated n times
// Throws std::invalid_argument on descriptor violations.
std::pair<Sequence, Sequence> generate(const InstanceFamily& family);

struct MethodSpec {
  std::string name;      // "bounds" | "exact" | "estimate"
  Rational rate{1, 1};   // estimate only
  std::uint64_t seed = 0;  // estimate only
};

struct SuiteConfig {
  std::uint64_t dp_guard = kDefaultDpGuard;
  int jobs = 1;
  std::vector<InstanceFamily> families;
  std::vector<MethodSpec> methods;
};

// One (family x method) cell. Bounds fields are filled for every method; dp
// truth only when the instance fits the size guard. A failed cell carries its
// error message and never aborts the suite.
struct BenchRecord {
  InstanceFamily family;
  MethodSpec method;
  std::size_t n_x = 0;
  std::size_t n_y = 0;
  std::uint64_t match_count = 0;
  Rational d;
  std::uint64_t d_ceil = 0;
  std::uint64_t min_count_bound = 0;
  std::uint64_t holder_bound = 0;
  std::optional<std::uint64_t> length;    // exact method
  std::optional<std::uint64_t> estimate;  // estimate method
  std::optional<std::uint64_t> dp_truth;
  bool bounds_only = false;  // dp skipped because the guard was exceeded
  std::map<std::string, std::int64_t> elapsed_us;
  std::optional<std::string> error;
};

// Runs every (family x method) cell, families outer, methods inner. Values are
// deterministic given the config seeds; jobs > 1 parallelizes cells without
// changing record order or content.
std::vector<BenchRecord> run_suite(const SuiteConfig& config);

}  // namespace blocklis

#endif  // BLOCKLIS_WORKBENCH_HPP
