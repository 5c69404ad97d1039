#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hkprod/ideal.hpp"
#include "hkprod/module.hpp"

namespace hkprod {

/// v_ij(a^q) = -a_j^q e_i + a_i^q e_j, with 0-based indices i < j.
ModuleElement koszul_v(std::span<const Polynomial> a, std::size_t i, std::size_t j, std::uint64_t q);

/// Submodule of R^l spanned by all v_ij(a^q); the image of the second Koszul
/// differential. Only used for diagnostics, kernels always come from syzygies.
ModuleSubspace koszul_boundary_image(std::span<const Polynomial> a, const RingPresentation& ring, std::uint64_t q);

/// lambda(K_{a^q, I^[q]}) = l * lambda(R/I^[q]) - lambda(R^l / (K_{a^q} + I^[q] R^l)).
std::uint64_t kernel_length(std::span<const Polynomial> a, const IdealHandle& ideal, std::uint64_t q);

struct LenIdentitySides {
  std::uint64_t ell = 0;
  std::uint64_t colength_i = 0;  // lambda(R/I^[q])
  std::uint64_t colength_j = 0;  // lambda(R/J^[q])
  std::uint64_t lhs = 0;
  std::uint64_t rhs_kernel = 0;
  std::uint64_t rhs_product = 0;
};

/// Both sides of l*lambda(R/I^[q]) + lambda(R/J^[q]) = lambda(K) + lambda(R/(IJ)^[q])
/// with J = (a). Nothing is asserted here.
LenIdentitySides len_identity_sides(const IdealHandle& ideal, std::span<const Polynomial> a, std::uint64_t q);

}  // namespace hkprod
