#include "hkprod/koszul.hpp"

#include "hkprod/errors.hpp"

namespace hkprod {

namespace {

std::vector<Polynomial> frobenius_all(std::span<const Polynomial> a, std::uint64_t q) {
  std::vector<Polynomial> out;
  out.reserve(a.size());
  for (const auto& f : a) out.push_back(f.frobenius_power(q));
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("length overflow");
  return r;
}

}  // namespace

ModuleElement koszul_v(std::span<const Polynomial> a, std::size_t i, std::size_t j, std::uint64_t q) {
  if (!(i < j && j < a.size())) throw PreconditionFailed("koszul_v index out of range");
  const auto& ring = a[i].ring();
  require_power_of(q, ring->characteristic());
  auto v = ModuleElement::basis_vector(ring, a.size(), i, -a[j].frobenius_power(q));
  return v + ModuleElement::basis_vector(ring, a.size(), j, a[i].frobenius_power(q));
}

ModuleSubspace koszul_boundary_image(std::span<const Polynomial> a, const RingPresentation& ring, std::uint64_t q) {
  std::vector<ModuleElement> cells;
  for (std::size_t j = 1; j < a.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) cells.push_back(koszul_v(a, i, j, q));
  return ModuleSubspace(ring, a.size(), std::move(cells));
}

std::uint64_t kernel_length(std::span<const Polynomial> a, const IdealHandle& ideal, std::uint64_t q) {
  if (a.empty()) throw PreconditionFailed("kernel_length of an empty sequence");
  const auto& ring = ideal.ring();
  require_m_primary(ideal, "kernel_length ideal");
  require_m_primary(IdealHandle(ring, {a.begin(), a.end()}), "kernel_length sequence");
  auto aq = frobenius_all(a, q);
  auto iq = bracket_power(ideal, q);
  auto n = syzygies(aq, ring) + ModuleSubspace::ideal_multiple(ring, aq.size(), iq.generators());
  auto quotient = module_colength(n).value();
  auto free_part = checked_mul(aq.size(), colength(iq).value());
  if (quotient > free_part) throw Error("kernel_length: module quotient exceeds l * lambda(R/I^[q])");
  return free_part - quotient;
}

LenIdentitySides len_identity_sides(const IdealHandle& ideal, std::span<const Polynomial> a, std::uint64_t q) {
  const auto& ring = ideal.ring();
  IdealHandle j(ring, {a.begin(), a.end()});
  require_m_primary(ideal, "I");
  require_m_primary(j, "J");
  LenIdentitySides s;
  s.ell = a.size();
  s.colength_i = colength(bracket_power(ideal, q)).value();
  s.colength_j = colength(bracket_power(j, q)).value();
  s.lhs = checked_mul(s.ell, s.colength_i) + s.colength_j;
  s.rhs_kernel = kernel_length(a, ideal, q);
  s.rhs_product = colength(bracket_power(ideal_product(ideal, j), q)).value();
  return s;
}

}  // namespace hkprod
