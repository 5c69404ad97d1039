#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hkprod/groebner.hpp"
#include "hkprod/polynomial.hpp"
#include "hkprod/ring.hpp"

namespace hkprod {

/// Ideal of R = S/Q given by generators in S. The Groebner basis of I + Q is
/// computed at most once and shared by all copies.
class IdealHandle {
 public:
  IdealHandle(RingPresentation ring, std::vector<Polynomial> generators);

  const RingPresentation& ring() const { return data_->ring; }
  const std::vector<Polynomial>& generators() const { return data_->generators; }
  const GroebnerBasis& groebner() const;
  std::string to_string() const;

 private:
  struct Data {
    explicit Data(RingPresentation r) : ring(std::move(r)) {}
    RingPresentation ring;
    std::vector<Polynomial> generators;
    mutable std::once_flag gb_once;
    mutable std::optional<GroebnerBasis> gb;
  };
  std::shared_ptr<const Data> data_;
};

IdealHandle make_ideal(const RingPresentation& ring, const std::vector<std::string>& generators);
IdealHandle maximal_ideal(const RingPresentation& ring);
IdealHandle unit_ideal(const RingPresentation& ring);

StandardMonomialCount colength(const IdealHandle& ideal);
bool is_member(const Polynomial& f, const IdealHandle& ideal);
/// Generator-wise membership: every generator of `inner` lies in `outer`.
bool contains(const IdealHandle& outer, const IdealHandle& inner);
bool same_ideal(const IdealHandle& a, const IdealHandle& b);

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_power(const IdealHandle& a, std::uint64_t n);
IdealHandle bracket_power(const IdealHandle& a, std::uint64_t q);
/// (I : f) = { g : g f in I }, via the first coordinates of syzygies of (f, I).
IdealHandle ideal_colon(const IdealHandle& a, const Polynomial& f);

/// m-primary: finite colength and supported only at m = (x_1..x_n).
bool is_m_primary(const IdealHandle& ideal);
/// Throws InfiniteColength or PreconditionFailed naming `what`.
void require_m_primary(const IdealHandle& ideal, std::string_view what);

/// mu(I) = lambda(R/mI) - lambda(R/I).
std::size_t min_gens(const IdealHandle& ideal);
/// Subsequence of the generators that still generates I and has mu(I) members.
/// Throws PreconditionFailed when greedy trimming cannot reach mu(I), which can
/// only happen for inhomogeneous generators.
std::vector<Polynomial> minimal_generators(const IdealHandle& ideal);

/// Dimension of S/Q from the initial ideal of Q: largest set of variables
/// that supports no leading monomial.
std::size_t krull_dim(const RingPresentation& ring);
bool is_parameter_ideal(const IdealHandle& ideal);
/// Polynomial rings and hypersurfaces are Cohen-Macaulay.
bool is_cohen_macaulay_presentation(const RingPresentation& ring);
/// First d-subset of variables (in declaration order) whose ideal has finite colength.
std::vector<std::size_t> parameter_variables(const RingPresentation& ring);

/// Heuristic reducedness check for a single relation f: the Jacobian ideal
/// (f, df/dx_i) must have height at least 2 in S. Over a perfect field this
/// holds exactly when f is squarefree.
bool relation_is_squarefree(const RingPresentation& ring);

enum class Family { Monomial, Binomial, Dense, ParameterPowers };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct TrialSpec {
  std::uint64_t seed = 0;
  Family family = Family::Monomial;
  unsigned degree_bound = 2;
  std::size_t count = 1;
};

/// Deterministic stream of m-primary ideals; identical specs reproduce
/// identical sequences on every platform.
std::vector<IdealHandle> random_ideals(const TrialSpec& spec, const RingPresentation& ring);

}  // namespace hkprod
