#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace hkprod {

// Compare against Rational values only: boost 1.74 mixed comparisons with
// plain integers recurse forever under C++20 rewritten operators.
using Rational = boost::rational<std::int64_t>;

/// "7" or "37/64".
std::string to_string(const Rational& r);
Rational make_rational(std::uint64_t num, std::uint64_t den = 1);

}  // namespace hkprod
