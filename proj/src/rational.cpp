#include "blocklis/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

namespace blocklis {

namespace {

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a non-negative integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational reduce(Rational r) {
  if (r.num == 0) return {0, r.den == 0 ? std::uint64_t{0} : std::uint64_t{1}};
  std::uint64_t g = std::gcd(r.num, r.den);
  return {r.num / g, r.den / g};
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::uint64_t num = parse_u64(text.substr(0, slash));
    std::uint64_t den = parse_u64(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return reduce({num, den});
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 18) frac_part = frac_part.substr(0, 18);
    std::uint64_t whole = int_part.empty() ? 0 : parse_u64(int_part);
    std::uint64_t frac = frac_part.empty() ? 0 : parse_u64(frac_part);
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    return reduce({whole * den + frac, den});
  }
  return {parse_u64(text), 1};
}

}  // namespace blocklis
