#include "hkprod/ring.hpp"

#include <sstream>

#include "hkprod/errors.hpp"

namespace hkprod {

RingPresentation::RingPresentation(RingPtr base, std::vector<Polynomial> relations) {
  auto data = std::make_shared<Data>();
  data->base = std::move(base);
  for (auto& r : relations) {
    if (!same_ring(r.ring(), data->base)) throw RingMismatch("relation lives in another polynomial ring");
    if (r.is_zero()) continue;
    data->graded = data->graded && r.is_homogeneous();
    data->relations.push_back(std::move(r));
  }
  data_ = std::move(data);
}

RingPresentation RingPresentation::polynomial_ring(std::uint32_t p, std::vector<std::string> variables,
                                                   OrderKind kind) {
  auto n = variables.size();
  return RingPresentation(std::make_shared<PolynomialRing>(p, std::move(variables), MonomialOrder(kind, n)));
}

RingPresentation RingPresentation::with_order(const MonomialOrder& order) const {
  auto base = std::make_shared<PolynomialRing>(characteristic(), data_->base->variables(), order);
  std::vector<Polynomial> rels;
  for (const auto& r : data_->relations) rels.push_back(r.with_ring(base));
  return RingPresentation(base, std::move(rels));
}

std::size_t RingPresentation::dimension(const std::function<std::size_t()>& compute) const {
  std::call_once(data_->dim_once, [&] { data_->dim = compute(); });
  return *data_->dim;
}

std::string RingPresentation::describe() const {
  std::ostringstream os;
  os << "F_" << characteristic() << "[";
  const auto& vars = data_->base->variables();
  for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i];
  os << "]";
  if (!data_->relations.empty()) {
    os << "/(";
    for (std::size_t i = 0; i < data_->relations.size(); ++i)
      os << (i ? ", " : "") << data_->relations[i].to_string();
    os << ")";
  }
  return os.str();
}

bool operator==(const RingPresentation& a, const RingPresentation& b) {
  if (a.data_ == b.data_) return true;
  return same_ring(a.base(), b.base()) && a.relations() == b.relations();
}

void require_same_ring(const RingPresentation& a, const RingPresentation& b) {
  if (!(a == b)) throw RingMismatch(a.describe() + " vs " + b.describe());
}

}  // namespace hkprod
