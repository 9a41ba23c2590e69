#ifndef BLOCKLIS_TESTS_TEST_UTIL_HPP
#define BLOCKLIS_TESTS_TEST_UTIL_HPP

#include <string_view>

#include "blocklis/rng.hpp"
#include "blocklis/sequence.hpp"

namespace blocklis::testing {

inline Sequence seq(std::string_view s) { return sequence_from_bytes(s); }

inline Sequence random_sequence(CounterRng& rng, std::size_t n, std::uint32_t sigma) {
  Sequence out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<Symbol>(rng.next_below(sigma)));
  return out;
}

}  // namespace blocklis::testing

#endif  // BLOCKLIS_TESTS_TEST_UTIL_HPP
