#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "blocklis/dp.hpp"
#include "blocklis/reduction.hpp"
#include "blocklis/workbench.hpp"

using namespace blocklis;

namespace {

bool same_values(const BenchRecord& a, const BenchRecord& b) {
  return a.n_x == b.n_x && a.n_y == b.n_y && a.match_count == b.match_count && a.d == b.d &&
         a.d_ceil == b.d_ceil && a.min_count_bound == b.min_count_bound &&
         a.holder_bound == b.holder_bound && a.length == b.length && a.estimate == b.estimate &&
         a.dp_truth == b.dp_truth && a.bounds_only == b.bounds_only && a.error == b.error;
}

}  // namespace

TEST_SUITE("workbench") {
  TEST_CASE("family names round trip") {
    for (auto kind : {FamilyKind::Random, FamilyKind::Permutation, FamilyKind::Planted,
                      FamilyKind::Repeated}) {
      CHECK(family_kind_from_string(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(family_kind_from_string("fancy"), std::invalid_argument);
  }

  TEST_CASE("generation is deterministic in the descriptor") {
    const InstanceFamily family{FamilyKind::Random, 128, 5, 0, 77};
    const auto [x1, y1] = generate(family);
    const auto [x2, y2] = generate(family);
    CHECK(x1 == x2);
    CHECK(y1 == y2);

    InstanceFamily reseeded = family;
    reseeded.seed = 78;
    const auto [x3, y3] = generate(reseeded);
    CHECK(x1 != x3);
  }

  TEST_CASE("random family shape") {
    const auto [x, y] = generate({FamilyKind::Random, 200, 4, 0, 3});
    CHECK(x.size() == 200);
    CHECK(y.size() == 200);
    CHECK(std::all_of(x.begin(), x.end(), [](Symbol c) { return c < 4; }));
    CHECK(std::all_of(y.begin(), y.end(), [](Symbol c) { return c < 4; }));
    CHECK(x != y);
  }

  TEST_CASE("permutation family is two shuffles of distinct symbols") {
    const std::size_t n = 100;
    const auto [x, y] = generate({FamilyKind::Permutation, n, 1, 0, 9});
    std::set<Symbol> sx(x.begin(), x.end()), sy(y.begin(), y.end());
    CHECK(sx.size() == n);
    CHECK(sy.size() == n);
    CHECK(*sx.rbegin() == n - 1);
    CHECK(sx == sy);
    // Exactly one occurrence of each symbol on both sides.
    CHECK(match_count(x, y) == n);
  }

  TEST_CASE("planted family has LCS exactly planted_len") {
    const InstanceFamily family{FamilyKind::Planted, 60, 3, 12, 21};
    const auto [x, y] = generate(family);
    REQUIRE(x.size() == 60);
    REQUIRE(y.size() == 60);
    // Noise alphabets: [sigma, 2 sigma) in x, [2 sigma, 3 sigma) in y.
    CHECK(std::all_of(x.begin(), x.end(), [](Symbol c) { return c < 6; }));
    CHECK(std::all_of(y.begin(), y.end(), [](Symbol c) { return c < 3 || (c >= 6 && c < 9); }));
    CHECK(dp_lcs(x, y) == 12);
  }

  TEST_CASE("planted length zero and full length are fine") {
    const auto [x0, y0] = generate({FamilyKind::Planted, 20, 2, 0, 1});
    CHECK(dp_lcs(x0, y0) == 0);
    const auto [xf, yf] = generate({FamilyKind::Planted, 20, 2, 20, 1});
    CHECK(dp_lcs(xf, yf) == 20);
  }

  TEST_CASE("repeated family analytics") {
    const auto [x, y] = generate({FamilyKind::Repeated, 50, 1, 0, 0});
    CHECK(x == y);
    CHECK(std::all_of(x.begin(), x.end(), [&](Symbol c) { return c == x[0]; }));
    CHECK(match_count(x, y) == 2500);
    CHECK(dp_lcs(x, y) == 50);
  }

  TEST_CASE("descriptor violations throw") {
    CHECK_THROWS_AS(generate({FamilyKind::Planted, 10, 2, 11, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({FamilyKind::Random, 10, 0, 0, 0}), std::invalid_argument);
  }

  TEST_CASE("suite runs the full cross product in order") {
    SuiteConfig config;
    config.families = {{FamilyKind::Random, 40, 4, 0, 1},
                       {FamilyKind::Permutation, 30, 1, 0, 2},
                       {FamilyKind::Planted, 50, 2, 10, 3}};
    config.methods = {{"exact", {1, 1}, 0}, {"estimate", {1, 2}, 11}};
    const auto records = run_suite(config);
    REQUIRE(records.size() == 6);

    for (std::size_t i = 0; i < records.size(); ++i) {
      const BenchRecord& rec = records[i];
      CHECK(rec.family.kind == config.families[i / 2].kind);
      CHECK(rec.method.name == config.methods[i % 2].name);
      CHECK_FALSE(rec.error.has_value());
      REQUIRE(rec.dp_truth.has_value());
      CHECK(rec.d_ceil <= *rec.dp_truth);
      CHECK(rec.min_count_bound <= *rec.dp_truth);
      if (rec.method.name == "exact") {
        REQUIRE(rec.length.has_value());
        CHECK(*rec.length == *rec.dp_truth);
        CHECK_FALSE(rec.estimate.has_value());
      } else {
        REQUIRE(rec.estimate.has_value());
        CHECK(*rec.estimate <= *rec.dp_truth);
        CHECK_FALSE(rec.length.has_value());
      }
    }
    // The permutation instance pins its match count.
    CHECK(records[2].match_count == 30);
  }

  TEST_CASE("bounds method fills analytics only") {
    SuiteConfig config;
    config.families = {{FamilyKind::Random, 25, 3, 0, 4}};
    config.methods = {{"bounds", {1, 1}, 0}};
    const auto records = run_suite(config);
    REQUIRE(records.size() == 1);
    CHECK_FALSE(records[0].length.has_value());
    CHECK_FALSE(records[0].estimate.has_value());
    CHECK(records[0].dp_truth.has_value());
    CHECK(records[0].holder_bound >= records[0].match_count);
  }

  TEST_CASE("dp guard turns large cells into bounds-only records") {
    SuiteConfig config;
    config.dp_guard = 100;  // (40+1)^2 cells is far above this
    config.families = {{FamilyKind::Random, 40, 4, 0, 1}};
    config.methods = {{"exact", {1, 1}, 0}};
    const auto records = run_suite(config);
    REQUIRE(records.size() == 1);
    CHECK(records[0].bounds_only);
    CHECK_FALSE(records[0].dp_truth.has_value());
    CHECK(records[0].length.has_value());  // the solver itself is not guarded
  }

  TEST_CASE("a failing cell is contained") {
    SuiteConfig config;
    config.families = {{FamilyKind::Planted, 10, 2, 99, 0},  // planted_len > n
                       {FamilyKind::Random, 20, 2, 0, 5}};
    config.methods = {{"exact", {1, 1}, 0}};
    const auto records = run_suite(config);
    REQUIRE(records.size() == 2);
    REQUIRE(records[0].error.has_value());
    CHECK(records[0].error->find("planted_len") != std::string::npos);
    CHECK_FALSE(records[1].error.has_value());
    CHECK(records[1].length.has_value());
  }

  TEST_CASE("unknown method is contained as a cell error") {
    SuiteConfig config;
    config.families = {{FamilyKind::Random, 10, 2, 0, 5}};
    config.methods = {{"fancy", {1, 1}, 0}};
    const auto records = run_suite(config);
    REQUIRE(records.size() == 1);
    REQUIRE(records[0].error.has_value());
    CHECK(records[0].error->find("fancy") != std::string::npos);
  }

  TEST_CASE("empty suite yields no records") {
    CHECK(run_suite({}).empty());
    SuiteConfig families_only;
    families_only.families = {{FamilyKind::Random, 10, 2, 0, 1}};
    CHECK(run_suite(families_only).empty());
  }

  TEST_CASE("parallel runs match the serial ones") {
    SuiteConfig config;
    config.families = {{FamilyKind::Random, 64, 4, 0, 1},
                       {FamilyKind::Permutation, 64, 1, 0, 2},
                       {FamilyKind::Planted, 64, 2, 16, 3},
                       {FamilyKind::Repeated, 64, 1, 0, 0}};
    config.methods = {{"bounds", {1, 1}, 0}, {"exact", {1, 1}, 0}, {"estimate", {1, 2}, 7}};
    const auto serial = run_suite(config);
    config.jobs = 4;
    const auto parallel = run_suite(config);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(same_values(serial[i], parallel[i]));
    }
  }
}
