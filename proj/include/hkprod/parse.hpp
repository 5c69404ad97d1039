#pragma once

#include <string_view>

#include "hkprod/polynomial.hpp"
#include "hkprod/ring.hpp"

namespace hkprod {

/// Parses polynomial text over the ring's variables. Accepts integer
/// coefficients, + - * ^ and parentheses; '^' takes a natural exponent.
/// The Unicode minus sign U+2212 is accepted as '-'. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);
Polynomial parse_polynomial(std::string_view text, const RingPresentation& ring);

}  // namespace hkprod
