#pragma once

// Brute-force references used to freeze expected values. Nothing here touches
// the Groebner engine: lengths come from Gaussian elimination on truncated
// coefficient matrices over F_p.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "hkprod/field.hpp"
#include "hkprod/module.hpp"
#include "hkprod/polynomial.hpp"
#include "hkprod/ring.hpp"

namespace oracle {

using hkprod::Monomial;
using hkprod::Polynomial;

inline void monomials_below(std::size_t nvars, std::uint64_t bound, std::vector<Monomial>& out) {
  // All monomials of total degree < bound.
  std::vector<Monomial::Exponent> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t v, std::uint64_t left) -> void {
    if (v == nvars) {
      out.emplace_back(std::span<const Monomial::Exponent>(e));
      return;
    }
    for (std::uint64_t k = 0; k <= left; ++k) {
      e[v] = static_cast<Monomial::Exponent>(k);
      self(self, v + 1, left - k);
    }
    e[v] = 0;
  };
  if (bound > 0) rec(rec, 0, bound - 1);
}

class Eliminator {
 public:
  Eliminator(std::uint32_t p, std::size_t ncols) : field_(p), ncols_(ncols) {}

  void add(std::vector<std::uint32_t> row) {
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (row[c] == 0) continue;
      auto it = pivots_.find(c);
      if (it == pivots_.end()) {
        auto inv = field_.inv(row[c]);
        for (auto& x : row) x = field_.mul(x, inv);
        pivots_.emplace(c, std::move(row));
        return;
      }
      auto factor = row[c];
      const auto& piv = it->second;
      for (std::size_t k = c; k < ncols_; ++k)
        if (piv[k]) row[k] = field_.sub(row[k], field_.mul(factor, piv[k]));
    }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  hkprod::PrimeField field_;
  std::size_t ncols_;
  std::map<std::size_t, std::vector<std::uint32_t>> pivots_;
};

/// dim_Fp of S^rank / (N + Q S^rank + m^bound S^rank), where N is spanned by
/// `gens` (each a vector of `rank` polynomials).
inline std::uint64_t truncated_quotient(const std::vector<std::vector<Polynomial>>& gens,
                                        const hkprod::RingPresentation& ring, std::size_t rank,
                                        std::uint64_t bound) {
  std::vector<Monomial> monos;
  monomials_below(ring.nvars(), bound, monos);
  std::map<std::vector<Monomial::Exponent>, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    auto ex = monos[k].exponents();
    index.emplace(std::vector<Monomial::Exponent>(ex.begin(), ex.end()), k);
  }
  const std::size_t ncols = monos.size() * rank;
  Eliminator elim(ring.characteristic(), ncols);

  std::vector<std::vector<Polynomial>> all = gens;
  for (std::size_t i = 0; i < rank; ++i)
    for (const auto& q : ring.relations()) {
      std::vector<Polynomial> v(rank, Polynomial(ring.base()));
      v[i] = q;
      all.push_back(std::move(v));
    }
  const hkprod::PrimeField field(ring.characteristic());
  for (const auto& g : all)
    for (const auto& m : monos) {
      std::vector<std::uint32_t> row(ncols, 0);
      bool nonzero = false;
      for (std::size_t comp = 0; comp < rank; ++comp)
        for (const auto& t : g[comp].terms()) {
          auto prod = t.mono * m;
          if (prod.degree() >= bound) continue;
          auto ex = prod.exponents();
          auto col = comp * monos.size() + index.at(std::vector<Monomial::Exponent>(ex.begin(), ex.end()));
          row[col] = field.add(row[col], t.coef);
          nonzero = true;
        }
      if (nonzero) elim.add(std::move(row));
    }
  return ncols - elim.rank();
}

/// Local length at m: grows the truncation degree until it stabilizes.
inline std::uint64_t module_length(const std::vector<std::vector<Polynomial>>& gens,
                                   const hkprod::RingPresentation& ring, std::size_t rank,
                                   std::uint64_t max_bound = 64) {
  std::uint64_t prev = truncated_quotient(gens, ring, rank, 1);
  for (std::uint64_t b = 2; b <= max_bound; ++b) {
    auto cur = truncated_quotient(gens, ring, rank, b);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw std::runtime_error("oracle: length did not stabilize (not m-primary?)");
}

inline std::uint64_t colength(const std::vector<Polynomial>& gens, const hkprod::RingPresentation& ring,
                              std::uint64_t max_bound = 64) {
  std::vector<std::vector<Polynomial>> vecs;
  for (const auto& g : gens) vecs.push_back({g});
  return module_length(vecs, ring, 1, max_bound);
}

inline std::uint64_t module_colength(const hkprod::ModuleSubspace& n, std::uint64_t max_bound = 64) {
  std::vector<std::vector<Polynomial>> vecs;
  for (const auto& g : n.generators()) vecs.push_back(g.entries());
  return module_length(vecs, n.ring(), n.rank(), max_bound);
}

/// Staircase count for monomial ideals by enumerating the bounding box.
inline std::uint64_t staircase(const std::vector<Monomial>& gens, std::size_t nvars) {
  std::vector<std::uint64_t> box(nvars, 0);
  for (const auto& g : gens) {
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v]) ++support, var = v;
    if (support == 1) box[var] = box[var] ? std::min<std::uint64_t>(box[var], g[var]) : g[var];
  }
  for (auto b : box)
    if (b == 0) throw std::runtime_error("oracle: staircase is unbounded");
  std::uint64_t count = 0;
  std::vector<Monomial::Exponent> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == nvars) {
      Monomial m{std::span<const Monomial::Exponent>(e)};
      for (const auto& g : gens)
        if (g.divides(m)) return;
      ++count;
      return;
    }
    for (std::uint64_t k = 0; k < box[v]; ++k) {
      e[v] = static_cast<Monomial::Exponent>(k);
      self(self, v + 1);
    }
    e[v] = 0;
  };
  rec(rec, 0);
  return count;
}

}  // namespace oracle
