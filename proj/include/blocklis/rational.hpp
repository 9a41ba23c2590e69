#ifndef BLOCKLIS_RATIONAL_HPP
#define BLOCKLIS_RATIONAL_HPP

#include <cstdint>
#include <string_view>

namespace blocklis {

// Exact non-negative rational. Kept unreduced where the numerator/denominator
// carry meaning (e.g. match_count over total length); reduce() is explicit.
// den == 0 is permitted only together with num == 0 and denotes the value 0.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 0;

  // Smallest integer >= value; 0 when num == 0.
  std::uint64_t ceil() const {
    if (num == 0) return 0;
    return (num + den - 1) / den;
  }

  double value() const { return num == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational reduce(Rational r);

// Accepts "3", "3/4" and decimal forms like "0.25". Result is reduced.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace blocklis

#endif  // BLOCKLIS_RATIONAL_HPP
