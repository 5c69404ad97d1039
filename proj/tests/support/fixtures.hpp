#pragma once

#include <string>
#include <vector>

#include "hkprod/ideal.hpp"
#include "hkprod/parse.hpp"
#include "hkprod/ring.hpp"

namespace fx {

inline hkprod::RingPresentation poly_ring(std::uint32_t p, std::vector<std::string> vars) {
  return hkprod::RingPresentation::polynomial_ring(p, std::move(vars));
}

inline hkprod::RingPresentation plane(std::uint32_t p) { return poly_ring(p, {"x", "y"}); }
inline hkprod::RingPresentation space(std::uint32_t p) { return poly_ring(p, {"x", "y", "z"}); }

/// F_p[x,y,z]/(x^3 + y^3 + z^3).
inline hkprod::RingPresentation fermat(std::uint32_t p = 2) {
  auto s = space(p);
  return hkprod::RingPresentation(s.base(), {hkprod::parse_polynomial("x^3+y^3+z^3", s)});
}

inline hkprod::Polynomial poly(const hkprod::RingPresentation& r, const std::string& text) {
  return hkprod::parse_polynomial(text, r);
}

inline hkprod::IdealHandle ideal(const hkprod::RingPresentation& r, const std::vector<std::string>& gens) {
  return hkprod::make_ideal(r, gens);
}

inline std::uint64_t len(const hkprod::IdealHandle& i) { return hkprod::colength(i).value(); }

}  // namespace fx
