#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hkprod/polynomial.hpp"

namespace hkprod {

/// R = S / Q with S = F_p[x_1..x_n]. Localness is modelled by the graded
/// maximal ideal m = (x_1, ..., x_n), so every length is an F_p-dimension.
/// Cheap to copy; all copies share the same immutable data.
class RingPresentation {
 public:
  explicit RingPresentation(RingPtr base, std::vector<Polynomial> relations = {});

  static RingPresentation polynomial_ring(std::uint32_t p, std::vector<std::string> variables,
                                          OrderKind kind = OrderKind::GRevLex);

  const RingPtr& base() const { return data_->base; }
  std::uint32_t characteristic() const { return data_->base->characteristic(); }
  std::size_t nvars() const { return data_->base->nvars(); }
  const MonomialOrder& order() const { return data_->base->order(); }
  const std::vector<Polynomial>& relations() const { return data_->relations; }

  /// No relations: S itself, the regular case.
  bool is_regular() const { return data_->relations.empty(); }
  /// All relations homogeneous.
  bool is_graded() const { return data_->graded; }

  /// Same ring under another monomial order (relations re-sorted).
  RingPresentation with_order(const MonomialOrder& order) const;

  /// Krull dimension cache; `compute` runs at most once per presentation.
  std::size_t dimension(const std::function<std::size_t()>& compute) const;

  std::string describe() const;

  friend bool operator==(const RingPresentation& a, const RingPresentation& b);

 private:
  struct Data {
    RingPtr base;
    std::vector<Polynomial> relations;
    bool graded = true;
    mutable std::once_flag dim_once;
    mutable std::optional<std::size_t> dim;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws RingMismatch unless both presentations agree.
void require_same_ring(const RingPresentation& a, const RingPresentation& b);

}  // namespace hkprod
