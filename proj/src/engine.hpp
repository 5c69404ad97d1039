#pragma once

// Buchberger engine shared by ideal and module computations. An ideal is a
// rank-1 module; every term carries a component index.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "hkprod/field.hpp"
#include "hkprod/monomial.hpp"

namespace hkprod::detail {

struct VTerm {
  Monomial mono;
  std::uint32_t comp;
  Coefficient coef;
};

/// Terms strictly descending in the active TermOrder.
using VecPoly = std::vector<VTerm>;

enum class ModuleOrderKind {
  /// Monomial first, ties broken by position with e_0 > e_1 > ...
  TermOverPosition,
  /// Component 0 dominates every other component; term-over-position inside
  /// each block. Used to eliminate the image coordinate when computing syzygies.
  EliminateFirst,
};

class TermOrder {
 public:
  explicit TermOrder(MonomialOrder order, ModuleOrderKind kind = ModuleOrderKind::TermOverPosition)
      : order_(std::move(order)), kind_(kind) {}

  std::strong_ordering compare(const Monomial& ma, std::uint32_t ca, const Monomial& mb, std::uint32_t cb) const {
    if (kind_ == ModuleOrderKind::EliminateFirst && (ca == 0) != (cb == 0)) return ca == 0 ? std::strong_ordering::greater
                                                                                            : std::strong_ordering::less;
    auto c = order_.compare_unchecked(ma, mb);
    if (c != 0) return c;
    return cb <=> ca;
  }
  std::strong_ordering operator()(const VTerm& a, const VTerm& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }

  const MonomialOrder& monomial_order() const { return order_; }

 private:
  MonomialOrder order_;
  ModuleOrderKind kind_;
};

VecPoly canonicalize(VecPoly f, const PrimeField& field, const TermOrder& order);
void make_monic(VecPoly& f, const PrimeField& field);

/// Holds a list of monic polynomials and reduces against them, first match wins.
class Reducer {
 public:
  Reducer(PrimeField field, TermOrder order) : field_(field), order_(std::move(order)) {}

  void add(VecPoly g);
  const std::vector<VecPoly>& basis() const { return basis_; }
  const PrimeField& field() const { return field_; }
  const TermOrder& order() const { return order_; }

  std::optional<std::size_t> find_reducer(const Monomial& m, std::uint32_t comp) const;
  /// Full normal form (every term reduced).
  VecPoly reduce(VecPoly f) const;

 private:
  PrimeField field_;
  TermOrder order_;
  std::vector<VecPoly> basis_;
  std::vector<std::uint64_t> masks_;
};

/// f - c * m * g, where g's leading term cancels f[from] and is skipped.
VecPoly subtract_multiple(const VecPoly& f, std::size_t from, Coefficient c, const Monomial& m, const VecPoly& g,
                          const PrimeField& field, const TermOrder& order);

/// Reduced Groebner basis (monic, interreduced, sorted by descending leading
/// term). `ideal_mode` enables the coprime-leading-term criterion, which is
/// only valid in rank 1.
std::vector<VecPoly> compute_groebner(std::vector<VecPoly> gens, const PrimeField& field, const TermOrder& order,
                                      bool ideal_mode);

/// S-polynomial of two monic elements with leading terms in the same component.
VecPoly s_polynomial(const VecPoly& f, const VecPoly& g, const PrimeField& field, const TermOrder& order);

/// Number of monomials in nvars variables outside the monomial ideal; nullopt
/// when some variable has no pure power among the generators.
std::optional<std::uint64_t> count_standard(const std::vector<Monomial>& gens, std::size_t nvars);
std::optional<std::vector<Monomial>> enumerate_standard(const std::vector<Monomial>& gens, std::size_t nvars);

std::uint64_t divisibility_mask(const Monomial& m);

}  // namespace hkprod::detail
