#include "hkprod/rational.hpp"

#include <limits>
#include <stdexcept>

namespace hkprod {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational make_rational(std::uint64_t num, std::uint64_t den) {
  constexpr auto kMax = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  if (num > kMax || den > kMax) throw std::overflow_error("rational component exceeds int64");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace hkprod
