#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "blocklis/dp.hpp"
#include "blocklis/reduction.hpp"
#include "blocklis/rng.hpp"
#include "blocklis/solver.hpp"

#include "brute_force.hpp"
#include "test_util.hpp"

using namespace blocklis;
using blocklis::testing::brute_block_lis;
using blocklis::testing::random_sequence;
using blocklis::testing::seq;

namespace {

std::vector<std::vector<Position>> random_blocks(CounterRng& rng, std::size_t max_blocks,
                                                 Position max_value) {
  std::vector<std::vector<Position>> blocks(rng.next_below(max_blocks + 1));
  for (auto& blk : blocks) {
    // Random strictly increasing list, possibly empty.
    for (Position v = 0; v < max_value; ++v) {
      if (rng.next_below(3) == 0) blk.push_back(v);
    }
  }
  return blocks;
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("worked block sequence") {
    const BlockSequence z = BlockSequence::from_blocks(
        {{2, 5}, {1, 4}, {0, 3}, {2, 5}, {1, 4}, {0, 3}});
    CHECK(exact_block_lis(z).length == 3);
  }

  TEST_CASE("small shapes") {
    CHECK(exact_block_lis(BlockSequence::from_blocks({})).length == 0);
    CHECK(exact_block_lis(BlockSequence::from_blocks({{}, {}, {}})).length == 0);
    CHECK(exact_block_lis(BlockSequence::from_blocks({{7}})).length == 1);
    // One block contributes at most one value no matter its width.
    CHECK(exact_block_lis(BlockSequence::from_blocks({{0, 1, 2, 3, 4}})).length == 1);
    // Equal values cannot chain: strictly increasing only.
    CHECK(exact_block_lis(BlockSequence::from_blocks({{4}, {4}, {4}})).length == 1);
    // Decreasing values across blocks.
    CHECK(exact_block_lis(BlockSequence::from_blocks({{3}, {2}, {1}})).length == 1);
    // Fully increasing singletons.
    CHECK(exact_block_lis(BlockSequence::from_blocks({{1}, {2}, {3}})).length == 3);
  }

  TEST_CASE("non-increasing block is rejected") {
    CHECK_THROWS_AS(exact_block_lis(BlockSequence::from_blocks({{1, 2}, {5, 3}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(exact_block_lis(BlockSequence::from_blocks({{2, 2}})),
                    std::invalid_argument);
  }

  TEST_CASE("matches exhaustive search on random block sequences") {
    CounterRng rng(37);
    for (int t = 0; t < 60; ++t) {
      const auto blocks = random_blocks(rng, 6, 6);
      const BlockSequence z = BlockSequence::from_blocks(blocks);
      const BlockLisResult got = exact_block_lis(z);
      CHECK(got.length == brute_block_lis(blocks));
    }
  }

  TEST_CASE("solves the LCS through the reduction") {
    CounterRng rng(41);
    for (int t = 0; t < 40; ++t) {
      const Sequence x = random_sequence(rng, rng.next_below(40), 1 + rng.next_below(5));
      const Sequence y = random_sequence(rng, rng.next_below(40), 1 + rng.next_below(5));
      const BlockSequence z = BlockSequence::from_strings(x, OccurrenceIndex::of(y));
      CHECK(exact_block_lis(z).length == dp_lcs(x, y));
    }
  }

  TEST_CASE("certificate is sound and full-length") {
    CounterRng rng(43);
    for (int t = 0; t < 40; ++t) {
      const Sequence x = random_sequence(rng, rng.next_below(40), 1 + rng.next_below(5));
      const Sequence y = random_sequence(rng, rng.next_below(40), 1 + rng.next_below(5));
      const BlockSequence z = BlockSequence::from_strings(x, OccurrenceIndex::of(y));
      const BlockLisResult got = exact_block_lis(z, /*want_certificate=*/true);
      REQUIRE(got.certificate.has_value());
      CHECK(got.certificate->size() == got.length);
      CHECK(verify_certificate(x, y, *got.certificate, got.length));
    }
  }

  TEST_CASE("certificate picks at most one value per block") {
    const BlockSequence z = BlockSequence::from_blocks(
        {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}});
    const BlockLisResult got = exact_block_lis(z, true);
    CHECK(got.length == 3);
    REQUIRE(got.certificate.has_value());
    for (std::size_t i = 1; i < got.certificate->size(); ++i) {
      CHECK((*got.certificate)[i - 1].block < (*got.certificate)[i].block);
      CHECK((*got.certificate)[i - 1].value < (*got.certificate)[i].value);
    }
  }

  TEST_CASE("certificate verifier rejects bad witnesses") {
    const Sequence x = seq("abcabc");
    const Sequence y = seq("cbacba");
    // Valid two-pair witness: (0,'a'@2), (4,'b'@4).
    const Certificate good = {{0, 2}, {4, 4}};
    CHECK(verify_certificate(x, y, good, 2));
    CHECK_FALSE(verify_certificate(x, y, good, 3));  // wrong claimed length
    CHECK_FALSE(verify_certificate(x, y, {{0, 1}}, 1));  // x[0]='a' but y[1]='b'
    CHECK_FALSE(verify_certificate(x, y, {{0, 2}, {0, 5}}, 2));  // block reused
    CHECK_FALSE(verify_certificate(x, y, {{4, 4}, {0, 2}}, 2));  // not increasing
    CHECK_FALSE(verify_certificate(x, y, {{9, 2}}, 1));  // out of range
  }

  TEST_CASE("exact solver spec is the (1,0) instance") {
    const SolverSpec spec = exact_solver_spec();
    CHECK(spec.alpha == 1.0);
    CHECK(spec.additive_budget == 0.0);
    const BlockSequence z = BlockSequence::from_blocks(
        {{2, 5}, {1, 4}, {0, 3}, {2, 5}, {1, 4}, {0, 3}});
    CHECK(spec.solve(z, 0.25) == 3.0);
  }

  TEST_CASE("length-only and certificate modes agree") {
    CounterRng rng(47);
    for (int t = 0; t < 30; ++t) {
      const auto blocks = random_blocks(rng, 8, 8);
      const BlockSequence z = BlockSequence::from_blocks(blocks);
      CHECK(exact_block_lis(z).length == exact_block_lis(z, true).length);
    }
  }
}
