#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hkprod/groebner.hpp"
#include "hkprod/polynomial.hpp"
#include "hkprod/ring.hpp"

namespace hkprod {

/// Element of the free module R^l; entry i is the coefficient of e_i.
class ModuleElement {
 public:
  explicit ModuleElement(std::vector<Polynomial> entries);
  static ModuleElement zero(const RingPtr& ring, std::size_t rank);
  static ModuleElement basis_vector(const RingPtr& ring, std::size_t rank, std::size_t i, const Polynomial& coef);

  std::size_t rank() const { return entries_.size(); }
  const Polynomial& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Polynomial>& entries() const { return entries_; }
  bool is_zero() const;
  std::string to_string() const;

  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement operator*(const Polynomial& f) const;

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::vector<Polynomial> entries_;
};

/// Finitely generated submodule N of R^rank. Computations lift to S^rank and
/// adjoin Q * e_i, so N is treated as a submodule of (S/Q)^rank.
class ModuleSubspace {
 public:
  ModuleSubspace(RingPresentation ring, std::size_t rank, std::vector<ModuleElement> generators = {});

  const RingPresentation& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleElement>& generators() const { return generators_; }

  ModuleSubspace operator+(const ModuleSubspace& o) const;
  /// I * R^rank for an ideal given by generators.
  static ModuleSubspace ideal_multiple(const RingPresentation& ring, std::size_t rank,
                                       std::span<const Polynomial> ideal_generators);

 private:
  RingPresentation ring_;
  std::size_t rank_;
  std::vector<ModuleElement> generators_;
};

/// Reduced Groebner basis of N + Q * R^rank, term-over-position with e_1 > e_2 > ...
class ModuleGroebnerBasis {
 public:
  const std::vector<ModuleElement>& elements() const { return elements_; }
  const RingPresentation& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const detail::Reducer& reducer() const { return *reducer_; }

 private:
  friend ModuleGroebnerBasis module_groebner(const ModuleSubspace& n);

  ModuleGroebnerBasis(RingPresentation ring, std::size_t rank, std::vector<ModuleElement> elements);

  RingPresentation ring_;
  std::size_t rank_;
  std::vector<ModuleElement> elements_;
  std::shared_ptr<const detail::Reducer> reducer_;
};

ModuleGroebnerBasis module_groebner(const ModuleSubspace& n);
ModuleElement module_normal_form(const ModuleElement& v, const ModuleGroebnerBasis& gb);
bool module_contains(const ModuleGroebnerBasis& gb, const ModuleElement& v);

/// Generators of ker(R^l -> R, e_i -> a_i). Lifts that vanish in R^l are dropped.
ModuleSubspace syzygies(std::span<const Polynomial> a, const RingPresentation& ring);

/// lambda(R^rank / N), counted as standard module monomials.
StandardMonomialCount module_colength(const ModuleSubspace& n);
StandardMonomialCount module_colength(const ModuleGroebnerBasis& gb);

}  // namespace hkprod
